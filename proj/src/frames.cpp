#include "qframes/frames.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Core>

namespace qframes {

namespace {

using CMat = Eigen::MatrixXcd;

void require_columns(const Frame& f) {
  if (f.size() < 1 || f.dim() < 1) throw ShapeError("frame needs at least one vector in positive dimension");
}

double total_norm2(const Frame& f) { return f.synthesis.squared_norm(); }

/// V = V1 + V2 j with complex V1, V2.
std::pair<CMat, CMat> complex_split(const QMat& v) {
  CMat v1(v.rows(), v.cols());
  CMat v2(v.rows(), v.cols());
  v1.real() = v.part(0);
  v1.imag() = v.part(1);
  v2.real() = v.part(2);
  v2.imag() = v.part(3);
  return {v1, v2};
}

void require_tight(const Frame& f, const char* who) {
  if (!tightness(f).is_tight) throw CertificateError(std::string(who) + ": frame is not tight");
}

}  // namespace

QMat gramian(const Frame& f) { return adjoint(f.synthesis) * f.synthesis; }

QMat frame_operator(const Frame& f) { return f.synthesis * adjoint(f.synthesis); }

TightnessReport tightness(const Frame& f) {
  require_columns(f);
  const double total = total_norm2(f);
  if (total == 0.0) throw DomainError("tightness: all frame vectors are zero");
  const auto d = static_cast<double>(f.dim());

  TightnessReport r;
  r.frame_bound = total / d;
  r.scale = total * total;

  const QMat g = gramian(f);
  r.variational_defect = g.squared_norm() - r.scale / d;
  r.operator_defect = frobenius_norm(frame_operator(f) - QMat::Identity(f.dim()) * r.frame_bound);
  const QMat p = g / r.frame_bound;
  r.gramian_projection_defect = frobenius_norm(p * p - p);

  // Both defects are compared at quartic scale: operator_defect^2 equals the
  // variational defect in exact arithmetic.
  const double thresh = f.tol.eps * r.scale;
  r.is_tight = r.variational_defect < thresh && r.operator_defect * r.operator_defect < thresh;
  return r;
}

bool unitarily_equivalent(const Frame& f, const Frame& g) {
  if (f.size() != g.size()) throw ShapeError("unitarily_equivalent: frames differ in size");
  return frobenius_norm(gramian(f) - gramian(g)) < f.tol.eps;
}

Field classify_field(const Frame& f) {
  const QMat g = gramian(f);
  if (g.is_real(f.tol.eps)) return Field::Real;
  if (g.is_complex(f.tol.eps)) return Field::Complex;
  return Field::Quaternionic;
}

std::string to_string(Field field) {
  switch (field) {
    case Field::Real: return "real";
    case Field::Complex: return "complex";
    case Field::Quaternionic: return "quaternionic";
  }
  return "unknown";
}

Field parse_field(const std::string& s) {
  if (s == "R" || s == "r" || s == "real") return Field::Real;
  if (s == "C" || s == "c" || s == "complex") return Field::Complex;
  if (s == "H" || s == "h" || s == "quaternionic") return Field::Quaternionic;
  throw DomainError("unknown field '" + s + "' (expected R, C or H)");
}

QMat complement_gramian(const Frame& f) {
  const auto n = f.size();
  const auto d = f.dim();
  if (n <= d) throw DomainError("complement_gramian: need more vectors than the dimension");
  for (Eigen::Index j = 0; j < n; ++j) {
    if (std::abs(frobenius_norm(f.vec(j)) - 1.0) >= f.tol.eps) {
      throw DomainError("complement_gramian: frame vectors must be unit");
    }
  }
  require_tight(f, "complement_gramian");
  const double nd = static_cast<double>(n - d);
  return QMat::Identity(n) * (static_cast<double>(n) / nd) - gramian(f) * (static_cast<double>(d) / nd);
}

Frame complement_synthesis(const Frame& f) {
  const auto n = f.size();
  const auto d = f.dim();
  if (n <= d) throw DomainError("complement_synthesis: need more vectors than the dimension");
  const auto rep = tightness(f);
  if (!rep.is_tight) throw CertificateError("complement_synthesis: frame is not tight");

  // columns of V*/sqrt(A) are orthonormal; complete them to a unitary
  const double s = std::sqrt(rep.frame_bound);
  const QMat x = gram_schmidt_extend(adjoint(f.synthesis) / s, n, f.tol);
  QMat w = adjoint(x.block(0, d, n, n - d)) * s;

  const QMat check = adjoint(f.synthesis) * f.synthesis + adjoint(w) * w - QMat::Identity(n) * rep.frame_bound;
  if (frobenius_norm(check) >= f.tol.eps * (1.0 + rep.frame_bound) * static_cast<double>(n)) {
    throw CertificateError("complement_synthesis: V*V + W*W = A I failed to verify");
  }
  return Frame(std::move(w), f.tol);
}

Frame normalised(const Frame& f) {
  QMat v = f.synthesis;
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    const double nrm = frobenius_norm(v.col(j));
    if (nrm == 0.0) throw DomainError("normalised: zero frame vector");
    v.set_col(j, v.col(j) / nrm);
  }
  return Frame(std::move(v), f.tol);
}

RealDescent descends_to_real(const Frame& f) {
  require_columns(f);
  if (!f.synthesis.is_complex(f.tol.eps)) throw DomainError("descends_to_real: frame has non-complex entries");
  require_tight(f, "descends_to_real");
  const QMat g = gramian(f);

  CMat gc(g.rows(), g.cols());
  gc.real() = g.part(0);
  gc.imag() = g.part(1);

  RealDescent r;
  r.sum_squares = std::abs(gc.cwiseProduct(gc).sum());
  r.re_norm = g.part(0).norm();
  r.im_norm = g.part(1).norm();
  const double total = total_norm2(f);
  r.descends = r.sum_squares < f.tol.eps * total * total;
  return r;
}

ComplexDescent descends_to_complex(const Frame& f) {
  require_columns(f);
  require_tight(f, "descends_to_complex");
  const QMat g = gramian(f);

  ComplexDescent r;
  r.co1_sq = g.part(0).squaredNorm() + g.part(1).squaredNorm();
  r.co2_sq = g.part(2).squaredNorm() + g.part(3).squaredNorm();
  const double total = total_norm2(f);
  r.descends = std::abs(r.co1_sq - r.co2_sq) < f.tol.eps * total * total;

  const auto [v1, v2] = complex_split(f.synthesis);
  const double half_a = 0.5 * total / static_cast<double>(f.dim());
  const CMat id = CMat::Identity(f.dim(), f.dim());
  r.split_operator_defect = std::max({(v1 * v1.adjoint() - half_a * id).norm(),
                                      (v2 * v2.adjoint() - half_a * id).norm(),
                                      (v1 * v2.transpose()).norm()});
  const CMat h = v1.adjoint() * v1 + v2.transpose() * v2.conjugate();
  r.image_gramian_defect = (h * h - half_a * h).norm();
  return r;
}

Quatd polarisation_inner(const QMat& v, const QMat& w, Field field) {
  if (v.rows() != w.rows() || v.cols() != 1 || w.cols() != 1) throw ShapeError("polarisation_inner: expected equal-length vectors");
  const int m = field == Field::Real ? 1 : field == Field::Complex ? 2 : 4;
  Quatd out;
  for (int r = 0; r < m; ++r) {
    const Quatd ir = Quatd::unit(r);
    const QMat wr = w * ir;
    const double diff = (v + wr).squared_norm() - (v - wr).squared_norm();
    out += ir * (0.25 * diff);
  }
  return out;
}

}  // namespace qframes
