#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <Eigen/Core>

#include "qframes/error.hpp"
#include "qframes/quaternion.hpp"

namespace qframes {

/// Absolute comparison tolerance carried by every certificate-producing operation.
struct Tolerance {
  double eps = 1e-9;

  constexpr Tolerance() = default;
  explicit Tolerance(double e) : eps(e) {
    if (!(e > 0.0)) throw DomainError("tolerance must be positive");
  }
};

/// Dense matrix over the quaternions.
///
/// Stored as four real matrices (the 1, i, j and k components), so that
/// A = A0 + A1 i + A2 j + A3 k with real Ai. Vectors are d x 1 matrices.
/// Complex and real matrices are the special cases A2 = A3 = 0 and
/// A1 = A2 = A3 = 0 respectively.
template <typename Scalar>
class QMatrix {
 public:
  using Index = Eigen::Index;
  using Real = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Quat = Quaternion<Scalar>;

  QMatrix() = default;

  QMatrix(Index rows, Index cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    for (auto& p : parts_) p = Real::Zero(rows, cols);
  }

  /// Row-major nested initializer: {{a, b}, {c, d}}.
  QMatrix(std::initializer_list<std::initializer_list<Quat>> rows_init) {
    const Index r = static_cast<Index>(rows_init.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows_init.begin()->size());
    *this = QMatrix(r, c);
    Index i = 0;
    for (const auto& row : rows_init) {
      if (static_cast<Index>(row.size()) != c) throw ShapeError("ragged initializer");
      Index j = 0;
      for (const auto& q : row) set(i, j++, q);
      ++i;
    }
  }

  static QMatrix Zero(Index rows, Index cols) { return QMatrix(rows, cols); }

  static QMatrix Identity(Index n) {
    QMatrix m(n, n);
    m.parts_[0].setIdentity();
    return m;
  }

  static QMatrix from_parts(Real w, Real x, Real y, Real z) {
    if (x.rows() != w.rows() || y.rows() != w.rows() || z.rows() != w.rows() ||
        x.cols() != w.cols() || y.cols() != w.cols() || z.cols() != w.cols()) {
      throw ShapeError("component matrices differ in shape");
    }
    QMatrix m;
    m.parts_ = {std::move(w), std::move(x), std::move(y), std::move(z)};
    return m;
  }

  static QMatrix from_real(const Real& w) {
    return from_parts(w, Real::Zero(w.rows(), w.cols()), Real::Zero(w.rows(), w.cols()),
                      Real::Zero(w.rows(), w.cols()));
  }

  /// Column vector from a list of entries.
  static QMatrix column(std::initializer_list<Quat> entries) {
    QMatrix m(static_cast<Index>(entries.size()), 1);
    Index i = 0;
    for (const auto& q : entries) m.set(i++, 0, q);
    return m;
  }

  /// Horizontal concatenation of blocks with equal row counts.
  static QMatrix hstack(const std::vector<QMatrix>& blocks) {
    if (blocks.empty()) return {};
    const Index r = blocks.front().rows();
    Index c = 0;
    for (const auto& b : blocks) {
      if (b.rows() != r) throw ShapeError("hstack: row counts differ");
      c += b.cols();
    }
    QMatrix m(r, c);
    Index off = 0;
    for (const auto& b : blocks) {
      for (int p = 0; p < 4; ++p) m.parts_[p].middleCols(off, b.cols()) = b.parts_[p];
      off += b.cols();
    }
    return m;
  }

  static QMatrix vstack(const std::vector<QMatrix>& blocks) {
    if (blocks.empty()) return {};
    const Index c = blocks.front().cols();
    Index r = 0;
    for (const auto& b : blocks) {
      if (b.cols() != c) throw ShapeError("vstack: column counts differ");
      r += b.rows();
    }
    QMatrix m(r, c);
    Index off = 0;
    for (const auto& b : blocks) {
      for (int p = 0; p < 4; ++p) m.parts_[p].middleRows(off, b.rows()) = b.parts_[p];
      off += b.rows();
    }
    return m;
  }

  Index rows() const { return parts_[0].rows(); }
  Index cols() const { return parts_[0].cols(); }
  Index size() const { return rows() * cols(); }
  bool is_square() const { return rows() == cols(); }

  Quat operator()(Index i, Index j) const { return coeff(i, j); }

  Quat coeff(Index i, Index j) const {
    check_index(i, j);
    return {parts_[0](i, j), parts_[1](i, j), parts_[2](i, j), parts_[3](i, j)};
  }

  void set(Index i, Index j, const Quat& q) {
    check_index(i, j);
    parts_[0](i, j) = q.w;
    parts_[1](i, j) = q.x;
    parts_[2](i, j) = q.y;
    parts_[3](i, j) = q.z;
  }

  const Real& part(int r) const { return parts_.at(static_cast<std::size_t>(r)); }
  Real& part(int r) { return parts_.at(static_cast<std::size_t>(r)); }

  QMatrix col(Index j) const { return block(0, j, rows(), 1); }
  QMatrix row(Index i) const { return block(i, 0, 1, cols()); }

  void set_col(Index j, const QMatrix& v) {
    if (v.rows() != rows() || v.cols() != 1) throw ShapeError("set_col: expected a column of matching length");
    if (j < 0 || j >= cols()) throw ShapeError("set_col: column index out of range");
    for (int p = 0; p < 4; ++p) parts_[p].col(j) = v.parts_[p].col(0);
  }

  QMatrix block(Index r0, Index c0, Index nr, Index nc) const {
    if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows() || c0 + nc > cols()) {
      throw ShapeError("block out of range");
    }
    QMatrix m;
    for (int p = 0; p < 4; ++p) m.parts_[p] = parts_[p].block(r0, c0, nr, nc);
    return m;
  }

  void set_block(Index r0, Index c0, const QMatrix& b) {
    if (r0 < 0 || c0 < 0 || r0 + b.rows() > rows() || c0 + b.cols() > cols()) {
      throw ShapeError("set_block out of range");
    }
    for (int p = 0; p < 4; ++p) parts_[p].block(r0, c0, b.rows(), b.cols()) = b.parts_[p];
  }

  /// Columns in the given order (repeats allowed).
  QMatrix select_columns(const std::vector<Index>& idx) const {
    QMatrix m(rows(), static_cast<Index>(idx.size()));
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (idx[t] < 0 || idx[t] >= cols()) throw ShapeError("select_columns: index out of range");
      for (int p = 0; p < 4; ++p) m.parts_[p].col(static_cast<Index>(t)) = parts_[p].col(idx[t]);
    }
    return m;
  }

  /// Plain transpose, no conjugation.
  QMatrix transpose() const {
    QMatrix m;
    for (int p = 0; p < 4; ++p) m.parts_[p] = parts_[p].transpose();
    return m;
  }

  /// Entrywise quaternion conjugate, no transpose.
  QMatrix conjugate() const {
    QMatrix m = *this;
    for (int p = 1; p < 4; ++p) m.parts_[p] = -m.parts_[p];
    return m;
  }

  Scalar squared_norm() const {
    Scalar s = 0;
    for (const auto& p : parts_) s += p.squaredNorm();
    return s;
  }

  /// Largest entry modulus.
  Scalar max_abs() const {
    Real m2 = Real::Zero(rows(), cols());
    for (const auto& p : parts_) m2 += p.cwiseAbs2();
    return m2.size() == 0 ? Scalar(0) : std::sqrt(m2.maxCoeff());
  }

  /// Every entry has |x|, |y|, |z| below eps.
  bool is_real(Scalar eps) const {
    for (int p = 1; p < 4; ++p)
      if (parts_[p].size() > 0 && parts_[p].cwiseAbs().maxCoeff() >= eps) return false;
    return true;
  }

  /// Every entry has |y|, |z| below eps.
  bool is_complex(Scalar eps) const {
    for (int p = 2; p < 4; ++p)
      if (parts_[p].size() > 0 && parts_[p].cwiseAbs().maxCoeff() >= eps) return false;
    return true;
  }

  QMatrix operator-() const {
    QMatrix m;
    for (int p = 0; p < 4; ++p) m.parts_[p] = -parts_[p];
    return m;
  }

  QMatrix& operator+=(const QMatrix& o) {
    check_same_shape(o);
    for (int p = 0; p < 4; ++p) parts_[p] += o.parts_[p];
    return *this;
  }
  QMatrix& operator-=(const QMatrix& o) {
    check_same_shape(o);
    for (int p = 0; p < 4; ++p) parts_[p] -= o.parts_[p];
    return *this;
  }
  QMatrix& operator*=(Scalar s) {
    for (auto& p : parts_) p *= s;
    return *this;
  }
  QMatrix& operator/=(Scalar s) {
    for (auto& p : parts_) p /= s;
    return *this;
  }

 private:
  void check_index(Index i, Index j) const {
    if (i < 0 || j < 0 || i >= rows() || j >= cols()) throw ShapeError("matrix index out of range");
  }
  void check_same_shape(const QMatrix& o) const {
    if (o.rows() != rows() || o.cols() != cols()) throw ShapeError("matrix shapes differ");
  }

  std::array<Real, 4> parts_{Real(0, 0), Real(0, 0), Real(0, 0), Real(0, 0)};
};

using QMat = QMatrix<double>;

template <typename S>
QMatrix<S> operator+(QMatrix<S> a, const QMatrix<S>& b) { return a += b; }
template <typename S>
QMatrix<S> operator-(QMatrix<S> a, const QMatrix<S>& b) { return a -= b; }
template <typename S>
QMatrix<S> operator*(QMatrix<S> a, S s) { return a *= s; }
template <typename S>
QMatrix<S> operator*(S s, QMatrix<S> a) { return a *= s; }
template <typename S>
QMatrix<S> operator/(QMatrix<S> a, S s) { return a /= s; }

/// Matrix product (AB)_jk = sum_l a_jl b_lk, factor order preserved.
template <typename S>
QMatrix<S> operator*(const QMatrix<S>& a, const QMatrix<S>& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  const auto& a0 = a.part(0);
  const auto& a1 = a.part(1);
  const auto& a2 = a.part(2);
  const auto& a3 = a.part(3);
  const auto& b0 = b.part(0);
  const auto& b1 = b.part(1);
  const auto& b2 = b.part(2);
  const auto& b3 = b.part(3);
  using Real = typename QMatrix<S>::Real;
  Real w = a0 * b0;
  w.noalias() -= a1 * b1;
  w.noalias() -= a2 * b2;
  w.noalias() -= a3 * b3;
  Real x = a0 * b1;
  x.noalias() += a1 * b0;
  x.noalias() += a2 * b3;
  x.noalias() -= a3 * b2;
  Real y = a0 * b2;
  y.noalias() -= a1 * b3;
  y.noalias() += a2 * b0;
  y.noalias() += a3 * b1;
  Real z = a0 * b3;
  z.noalias() += a1 * b2;
  z.noalias() -= a2 * b1;
  z.noalias() += a3 * b0;
  return QMatrix<S>::from_parts(std::move(w), std::move(x), std::move(y), std::move(z));
}

template <typename S>
QMatrix<S> mat_mul(const QMatrix<S>& a, const QMatrix<S>& b) { return a * b; }

/// Right scalar multiplication: every entry a_jk becomes a_jk q.
template <typename S>
QMatrix<S> operator*(const QMatrix<S>& a, const Quaternion<S>& q) {
  const auto& a0 = a.part(0);
  const auto& a1 = a.part(1);
  const auto& a2 = a.part(2);
  const auto& a3 = a.part(3);
  return QMatrix<S>::from_parts(a0 * q.w - a1 * q.x - a2 * q.y - a3 * q.z,
                                a0 * q.x + a1 * q.w + a2 * q.z - a3 * q.y,
                                a0 * q.y - a1 * q.z + a2 * q.w + a3 * q.x,
                                a0 * q.z + a1 * q.y - a2 * q.x + a3 * q.w);
}

/// Left scalar multiplication: every entry a_jk becomes q a_jk.
template <typename S>
QMatrix<S> operator*(const Quaternion<S>& q, const QMatrix<S>& a) {
  const auto& a0 = a.part(0);
  const auto& a1 = a.part(1);
  const auto& a2 = a.part(2);
  const auto& a3 = a.part(3);
  return QMatrix<S>::from_parts(q.w * a0 - q.x * a1 - q.y * a2 - q.z * a3,
                                q.w * a1 + q.x * a0 + q.y * a3 - q.z * a2,
                                q.w * a2 - q.x * a3 + q.y * a0 + q.z * a1,
                                q.w * a3 + q.x * a2 - q.y * a1 + q.z * a0);
}

/// Conjugate transpose.
template <typename S>
QMatrix<S> adjoint(const QMatrix<S>& a) {
  return QMatrix<S>::from_parts(a.part(0).transpose(), -a.part(1).transpose(),
                                -a.part(2).transpose(), -a.part(3).transpose());
}

/// <A, B>_F = trace(B* A) = sum_jk conj(b_jk) a_jk.
template <typename S>
Quaternion<S> frobenius_inner(const QMatrix<S>& a, const QMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("frobenius_inner: shapes differ");
  const auto dot = [&](int p, int q) { return b.part(p).cwiseProduct(a.part(q)).sum(); };
  return {dot(0, 0) + dot(1, 1) + dot(2, 2) + dot(3, 3),
          dot(0, 1) - dot(1, 0) - dot(2, 3) + dot(3, 2),
          dot(0, 2) + dot(1, 3) - dot(2, 0) - dot(3, 1),
          dot(0, 3) - dot(1, 2) + dot(2, 1) - dot(3, 0)};
}

template <typename S>
S frobenius_norm(const QMatrix<S>& a) { return std::sqrt(a.squared_norm()); }

/// Euclidean inner product <v, w> = sum_j conj(w_j) v_j of two column vectors.
template <typename S>
Quaternion<S> inner(const QMatrix<S>& v, const QMatrix<S>& w) {
  if (v.cols() != 1 || w.cols() != 1) throw ShapeError("inner: expected column vectors");
  return frobenius_inner(v, w);
}

template <typename S>
Quaternion<S> trace(const QMatrix<S>& a) {
  if (!a.is_square()) throw ShapeError("trace of non-square matrix");
  return {a.part(0).trace(), a.part(1).trace(), a.part(2).trace(), a.part(3).trace()};
}

/// Re(trace(A)). Unlike trace, invariant under cyclic rotation of products.
template <typename S>
S re_trace(const QMatrix<S>& a) {
  if (!a.is_square()) throw ShapeError("re_trace of non-square matrix");
  return a.part(0).trace();
}

/// ||U*U - I||_F.
template <typename S>
S unitary_defect(const QMatrix<S>& u) {
  if (!u.is_square()) throw ShapeError("unitary_defect of non-square matrix");
  return frobenius_norm(adjoint(u) * u - QMatrix<S>::Identity(u.rows()));
}

template <typename S>
bool is_unitary(const QMatrix<S>& u, const Tolerance& tol = {}) {
  return u.is_square() && unitary_defect(u) < tol.eps;
}

namespace detail {

template <typename S>
void swap_rows(QMatrix<S>& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  for (int p = 0; p < 4; ++p) m.part(p).row(a).swap(m.part(p).row(b));
}

/// row_dst <- row_dst - c * row_src, with c acting from the left.
template <typename S>
void row_axpy(QMatrix<S>& m, Eigen::Index dst, const Quaternion<S>& c, Eigen::Index src) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.set(dst, j, m(dst, j) - c * m(src, j));
}

template <typename S>
void row_scale(QMatrix<S>& m, Eigen::Index r, const Quaternion<S>& c) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m.set(r, j, c * m(r, j));
}

}  // namespace detail

/// Two-sided inverse by Gauss-Jordan elimination.
///
/// Row operations multiply by pivot inverses from the left, with partial
/// pivoting on the pivot modulus. Throws SingularError when the largest
/// available pivot has modulus below tol.eps.
template <typename S>
QMatrix<S> solve_inverse(const QMatrix<S>& a, const Tolerance& tol = {}) {
  if (!a.is_square()) throw ShapeError("solve_inverse of non-square matrix");
  const auto n = a.rows();
  QMatrix<S> m = a;
  QMatrix<S> inv = QMatrix<S>::Identity(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    S best = m(c, c).abs();
    for (Eigen::Index r = c + 1; r < n; ++r) {
      const S v = m(r, c).abs();
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < tol.eps) throw SingularError("matrix is singular to tolerance");
    detail::swap_rows(m, c, piv);
    detail::swap_rows(inv, c, piv);
    const auto pinv = m(c, c).inverse();
    detail::row_scale(m, c, pinv);
    detail::row_scale(inv, c, pinv);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c) continue;
      const auto f = m(r, c);
      if (f.norm2() == S(0)) continue;
      detail::row_axpy(m, r, f, c);
      detail::row_axpy(inv, r, f, c);
    }
  }
  return inv;
}

/// Rank over H by Gaussian elimination with complete pivoting; pivots below
/// tol.eps * max(1, max|a_jk|) count as zero.
template <typename S>
Eigen::Index rank(const QMatrix<S>& a, const Tolerance& tol = {}) {
  QMatrix<S> m = a;
  const S thresh = tol.eps * std::max<S>(S(1), a.max_abs());
  Eigen::Index r = 0;
  std::vector<Eigen::Index> colmap(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) colmap[static_cast<std::size_t>(j)] = j;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pr = -1;
    Eigen::Index pc = -1;
    S best = thresh;
    for (Eigen::Index i = r; i < m.rows(); ++i) {
      for (Eigen::Index j = c; j < m.cols(); ++j) {
        const S v = m(i, j).abs();
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    detail::swap_rows(m, r, pr);
    for (int p = 0; p < 4; ++p) m.part(p).col(c).swap(m.part(p).col(pc));
    const auto pinv = m(r, c).inverse();
    detail::row_scale(m, r, pinv);
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      const auto f = m(i, c);
      if (f.norm2() != S(0)) detail::row_axpy(m, i, f, r);
    }
    ++r;
  }
  return r;
}

/// Orthonormalise the columns of `a` in order and extend to `target_cols`
/// orthonormal columns.
///
/// The projection of v onto a unit u is u <v, u>, the scalar acting on the
/// right. Extension vectors are the coordinate vectors with the largest
/// residual norm, chosen greedily (lowest index wins ties). A column whose
/// residual norm is below tol.eps * (1 + ||column||) is declared dependent.
template <typename S>
QMatrix<S> gram_schmidt_extend(const QMatrix<S>& a, Eigen::Index target_cols, const Tolerance& tol = {}) {
  const auto d = a.rows();
  if (target_cols < a.cols()) throw ShapeError("gram_schmidt_extend: target below input column count");
  if (target_cols > d) throw ShapeError("gram_schmidt_extend: target exceeds dimension");

  std::vector<QMatrix<S>> basis;
  basis.reserve(static_cast<std::size_t>(target_cols));

  const auto residual = [&](QMatrix<S> v) {
    // two passes keep the output orthogonal to working precision
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) v -= u * inner(v, u);
    return v;
  };

  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const auto v = a.col(j);
    auto r = residual(v);
    const S rn = frobenius_norm(r);
    if (rn < tol.eps * (S(1) + frobenius_norm(v))) {
      throw SingularError("gram_schmidt_extend: dependent columns");
    }
    basis.push_back(r / rn);
  }

  while (static_cast<Eigen::Index>(basis.size()) < target_cols) {
    QMatrix<S> best;
    S best_norm = -1;
    for (Eigen::Index k = 0; k < d; ++k) {
      QMatrix<S> e(d, 1);
      e.set(k, 0, Quaternion<S>(1));
      auto r = residual(e);
      const S rn = frobenius_norm(r);
      if (rn > best_norm + tol.eps) {
        best_norm = rn;
        best = std::move(r);
      }
    }
    basis.push_back(best / best_norm);
  }
  return QMatrix<S>::hstack(basis);
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const QMatrix<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

}  // namespace qframes
