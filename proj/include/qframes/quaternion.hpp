#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>

#include <Eigen/Core>

#include "qframes/error.hpp"

namespace qframes {

/// Hamilton quaternion w + x i + y j + z k over a real scalar type.
///
/// Coordinates are always ordered (1, i, j, k). Multiplication is
/// associative but not commutative; every product in the library keeps
/// the written order of its factors.
template <typename Scalar>
struct Quaternion {
  Scalar w{0};
  Scalar x{0};
  Scalar y{0};
  Scalar z{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(Scalar w_, Scalar x_ = 0, Scalar y_ = 0, Scalar z_ = 0)  // NOLINT
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion unit(int r) {
    Quaternion q;
    q.component_ref(r) = 1;
    return q;
  }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Scalar& component_ref(int r) {
    switch (r) {
      case 0: return w;
      case 1: return x;
      case 2: return y;
      case 3: return z;
      default: throw DomainError("quaternion component index out of range");
    }
  }
  constexpr Scalar component(int r) const {
    switch (r) {
      case 0: return w;
      case 1: return x;
      case 2: return y;
      case 3: return z;
      default: throw DomainError("quaternion component index out of range");
    }
  }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr Scalar norm2() const { return w * w + x * x + y * y + z * z; }
  Scalar abs() const { return std::sqrt(norm2()); }
  constexpr Scalar re() const { return w; }
  constexpr Quaternion im() const { return {0, x, y, z}; }

  /// Multiplicative inverse conj(q)/|q|^2.
  Quaternion inverse() const {
    const Scalar n = norm2();
    if (n == Scalar(0)) throw SingularError("inverse of zero quaternion");
    return conj() / n;
  }

  Quaternion normalized() const {
    const Scalar a = abs();
    if (a == Scalar(0)) throw DomainError("cannot normalise zero quaternion");
    return *this / a;
  }

  Eigen::Matrix<Scalar, 4, 1> coords() const { return {w, x, y, z}; }
  static Quaternion from_coords(const Eigen::Matrix<Scalar, 4, 1>& c) {
    return {c(0), c(1), c(2), c(3)};
  }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(Scalar s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(Scalar s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }
};

template <typename S>
constexpr Quaternion<S> operator+(Quaternion<S> a, const Quaternion<S>& b) { return a += b; }
template <typename S>
constexpr Quaternion<S> operator-(Quaternion<S> a, const Quaternion<S>& b) { return a -= b; }
template <typename S>
constexpr Quaternion<S> operator*(Quaternion<S> a, S s) { return a *= s; }
template <typename S>
constexpr Quaternion<S> operator*(S s, Quaternion<S> a) { return a *= s; }
template <typename S>
constexpr Quaternion<S> operator/(Quaternion<S> a, S s) { return a /= s; }

/// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
template <typename S>
constexpr Quaternion<S> operator*(const Quaternion<S>& a, const Quaternion<S>& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

template <typename S>
constexpr bool operator==(const Quaternion<S>& a, const Quaternion<S>& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const Quaternion<S>& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

template <typename S>
constexpr Quaternion<S> conj(const Quaternion<S>& q) { return q.conj(); }
template <typename S>
S abs(const Quaternion<S>& q) { return q.abs(); }

template <typename S>
struct ConjAbsRe {
  Quaternion<S> conj;
  S abs;
  S re;
};

template <typename S>
ConjAbsRe<S> conj_abs(const Quaternion<S>& q) {
  return {q.conj(), q.abs(), q.re()};
}

/// q_r for r in {0,1,2,3}, indexing (1, i, j, k).
template <typename S>
S component(const Quaternion<S>& q, int r) {
  if (r < 0 || r > 3) throw DomainError("component index must be in 0..3");
  return q.component(r);
}

/// Cayley-Dickson split q = z + w j with z, w complex.
template <typename S>
struct ComplexPair {
  std::complex<S> z;
  std::complex<S> w;
};

template <typename S>
ComplexPair<S> split(const Quaternion<S>& q) {
  return {{q.w, q.x}, {q.y, q.z}};
}

template <typename S>
Quaternion<S> join(const ComplexPair<S>& p) {
  return {p.z.real(), p.z.imag(), p.w.real(), p.w.imag()};
}

/// First complex coordinate Co1(z + w j) = z.
template <typename S>
std::complex<S> co1(const Quaternion<S>& q) { return {q.w, q.x}; }

/// Second complex coordinate Co2(z + w j) = conj(w).
template <typename S>
std::complex<S> co2(const Quaternion<S>& q) { return {q.y, -q.z}; }

template <typename S>
Quaternion<S> from_complex(const std::complex<S>& c) { return {c.real(), c.imag(), 0, 0}; }

template <typename S>
using Matrix4 = Eigen::Matrix<S, 4, 4>;

/// Real 4x4 matrices of p -> q p and p -> p q in (1,i,j,k) coordinates.
template <typename S>
struct MultMatrices {
  Matrix4<S> left;
  Matrix4<S> right;
};

template <typename S>
Matrix4<S> left_mult_matrix(const Quaternion<S>& q) {
  Matrix4<S> m;
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w, -q.z,  q.y,
       q.y,  q.z,  q.w, -q.x,
       q.z, -q.y,  q.x,  q.w;
  return m;
}

template <typename S>
Matrix4<S> right_mult_matrix(const Quaternion<S>& q) {
  Matrix4<S> m;
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w,  q.z, -q.y,
       q.y, -q.z,  q.w,  q.x,
       q.z,  q.y, -q.x,  q.w;
  return m;
}

template <typename S>
MultMatrices<S> mult_matrices(const Quaternion<S>& q) {
  return {left_mult_matrix(q), right_mult_matrix(q)};
}

using Quatd = Quaternion<double>;

}  // namespace qframes
