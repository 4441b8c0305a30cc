#pragma once

#include <string>

#include "qframes/qmatrix.hpp"

namespace qframes {

// File format (JSON):
//   {"version": 1, "field": "R"|"C"|"H", "rows": m, "cols": n,
//    "entries": [[w, x, y, z], ...]}     row-major, m * n entries
// Numbers are written in shortest round-trip form, so save/load is lossless.

/// "R" when every x, y, z component is exactly zero, "C" when every y, z is, else "H".
std::string field_tag(const QMat& m);

std::string to_json_string(const QMat& m, int indent = -1);
QMat from_json_string(const std::string& text);

void save_qmat(const std::string& path, const QMat& m);
QMat load_qmat(const std::string& path);

/// Raised for unreadable files or documents that do not match the format.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace qframes
