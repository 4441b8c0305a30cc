#pragma once

#include <stdexcept>
#include <string>

namespace qframes {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of the operation (bad index, bad parameter, wrong field).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix singular or columns dependent to tolerance.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A certificate the operation requires does not hold (e.g. input frame not tight).
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace qframes
