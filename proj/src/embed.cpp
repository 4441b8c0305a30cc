#include "qframes/embed.hpp"

#include <algorithm>
#include <cmath>

namespace qframes {

using Real = QMat::Real;

void require_real(const QMat& a, const Tolerance& tol) {
  if (!a.is_real(tol.eps)) throw DomainError("expected real entries");
}

void require_complex(const QMat& a, const Tolerance& tol) {
  if (!a.is_complex(tol.eps)) throw DomainError("expected complex entries");
}

namespace {

Real zeros(Eigen::Index r, Eigen::Index c) { return Real::Zero(r, c); }

QMat complex_from(Real re, Real im) {
  const auto r = re.rows();
  const auto c = re.cols();
  return QMat::from_parts(std::move(re), std::move(im), zeros(r, c), zeros(r, c));
}

}  // namespace

QMat cvec_to_real(const QMat& v, const Tolerance& tol) {
  if (v.cols() != 1) throw ShapeError("cvec_to_real: expected a column vector");
  return cmat_to_real(v, tol).col(0);
}

QMat real_to_cvec(const QMat& r, const Tolerance& tol) {
  if (r.cols() != 1 || r.rows() % 2 != 0) throw ShapeError("real_to_cvec: expected a column of even length");
  require_real(r, tol);
  const auto d = r.rows() / 2;
  return complex_from(r.part(0).topRows(d), r.part(0).bottomRows(d));
}

QMat cmat_to_real(const QMat& a, const Tolerance& tol) {
  require_complex(a, tol);
  const auto m = a.rows();
  const auto n = a.cols();
  const Real& re = a.part(0);
  const Real& im = a.part(1);
  Real out(2 * m, 2 * n);
  out << re, -im, im, re;
  return QMat::from_real(out);
}

QMat real_to_cmat(const QMat& r, const Tolerance& tol) {
  if (r.rows() % 2 != 0 || r.cols() % 2 != 0) throw ShapeError("real_to_cmat: expected even dimensions");
  require_real(r, tol);
  const auto m = r.rows() / 2;
  const auto n = r.cols() / 2;
  return complex_from(r.part(0).topLeftCorner(m, n), r.part(0).bottomLeftCorner(m, n));
}

QMat qvec_to_complex(const QMat& v) {
  if (v.cols() != 1) throw ShapeError("qvec_to_complex: expected a column vector");
  return qmat_to_complex(v).col(0);
}

QMat complex_to_qvec(const QMat& c, const Tolerance& tol) {
  if (c.cols() != 1 || c.rows() % 2 != 0) throw ShapeError("complex_to_qvec: expected a column of even length");
  require_complex(c, tol);
  const auto d = c.rows() / 2;
  // v = z + w j with [v]_C = (z, conj w)
  return QMat::from_parts(c.part(0).topRows(d), c.part(1).topRows(d), c.part(0).bottomRows(d),
                          -c.part(1).bottomRows(d));
}

QMat qmat_to_complex(const QMat& l) {
  const auto m = l.rows();
  const auto n = l.cols();
  // L = A + B j, A = L0 + L1 i, B = L2 + L3 i
  const Real& a_re = l.part(0);
  const Real& a_im = l.part(1);
  const Real& b_re = l.part(2);
  const Real& b_im = l.part(3);
  Real re(2 * m, 2 * n);
  Real im(2 * m, 2 * n);
  re << a_re, -b_re, b_re, a_re;
  im << a_im, -b_im, -b_im, -a_im;
  return complex_from(std::move(re), std::move(im));
}

QMat complex_to_qmat(const QMat& c, const Tolerance& tol) {
  if (c.rows() % 2 != 0 || c.cols() % 2 != 0) throw ShapeError("complex_to_qmat: expected even dimensions");
  require_complex(c, tol);
  const auto m = c.rows() / 2;
  const auto n = c.cols() / 2;
  // only matrices of the form [[A, -B], [conj B, conj A]] have a preimage
  if ((j_matrix(m) * c - c.conjugate() * j_matrix(n)).max_abs() >= tol.eps * std::max(1.0, c.max_abs()))
    throw DomainError("complex_to_qmat: matrix does not have the [[A, -B], [conj B, conj A]] block form");
  // top-left block is A, bottom-left is conj B
  return QMat::from_parts(c.part(0).topLeftCorner(m, n), c.part(1).topLeftCorner(m, n),
                          c.part(0).bottomLeftCorner(m, n), -c.part(1).bottomLeftCorner(m, n));
}

QMat j_matrix(Eigen::Index l) {
  Real j = Real::Zero(2 * l, 2 * l);
  j.topRightCorner(l, l) = -Real::Identity(l, l);
  j.bottomLeftCorner(l, l) = Real::Identity(l, l);
  return QMat::from_real(j);
}

QMat frame_double_complex(const QMat& v) { return qmat_to_complex(v); }

BlockGram block_gram_check(const QMat& v, const Tolerance& tol) {
  const auto n = v.cols();
  std::vector<QMat> va;
  va.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto col = v.col(a);
    if (std::abs(frobenius_norm(col) - 1.0) >= tol.eps) throw DomainError("block_gram_check: column is not a unit vector");
    va.push_back(qmat_to_complex(col));
  }

  BlockGram out;
  out.blocks.assign(static_cast<std::size_t>(n), std::vector<QMat>(static_cast<std::size_t>(n)));
  const auto i2 = QMat::Identity(2);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      out.blocks[ua][ub] = adjoint(va[ua]) * va[ub];
      if (a == b) continue;
      const double lam = inner(v.col(a), v.col(b)).norm2();
      const auto& blk = out.blocks[ua][ub];
      out.max_defect = std::max(out.max_defect, frobenius_norm(adjoint(blk) * blk - i2 * lam));
    }
  }
  return out;
}

}  // namespace qframes
