#include "qframes/lines.hpp"

#include <algorithm>
#include <cmath>

#include "qframes/catalog.hpp"

namespace qframes {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_unit_columns(const Frame& f, const char* who) {
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    if (std::abs(frobenius_norm(f.vec(j)) - 1.0) >= f.tol.eps) {
      throw DomainError(std::string(who) + ": column " + std::to_string(j) + " is not a unit vector");
    }
  }
}

int field_dim(Field field) {
  switch (field) {
    case Field::Real: return 1;
    case Field::Complex: return 2;
    case Field::Quaternionic: return 4;
  }
  return 4;
}

}  // namespace

AngleReport angle_report(const Frame& f) {
  require_unit_columns(f, "angle_report");
  const QMat g = gramian(f);
  const auto n = f.size();

  AngleReport r;
  if (n < 2) {
    r.is_equiangular = true;
    return r;
  }
  std::vector<double> lam;
  lam.reserve(static_cast<std::size_t>(n * (n - 1)));
  double sum = 0.0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      if (j != k) {
        lam.push_back(g(j, k).norm2());
        sum += lam.back();
      }
  r.mean_lambda = sum / static_cast<double>(lam.size());
  for (double l : lam) r.max_deviation = std::max(r.max_deviation, std::abs(l - r.mean_lambda));
  r.is_equiangular = r.max_deviation < f.tol.eps;
  if (r.is_equiangular) r.common_lambda = r.mean_lambda;
  r.theta_degrees = std::acos(std::sqrt(std::clamp(r.mean_lambda, 0.0, 1.0))) * 180.0 / kPi;
  return r;
}

double welch_angle(long n, long d) {
  if (d < 1 || n <= d) throw DomainError("welch_angle: need n > d >= 1");
  return static_cast<double>(n - d) / static_cast<double>(d * (n - 1));
}

long max_lines(long d, Field field) {
  if (d <= 1) throw DomainError("max_lines: need d > 1");
  switch (field) {
    case Field::Real: return d * (d + 1) / 2;
    case Field::Complex: return d * d;
    case Field::Quaternionic: return 2 * d * d - d;
  }
  return 0;
}

double max_angle(long d, Field field) {
  if (d <= 1) throw DomainError("max_angle: need d > 1");
  const double dd = static_cast<double>(d);
  switch (field) {
    case Field::Real: return 1.0 / (dd + 2.0);
    case Field::Complex: return 1.0 / (dd + 1.0);
    case Field::Quaternionic: return 1.0 / (dd + 0.5);
  }
  return 0.0;
}

EtfRange etf_size_range(long d, Field field) {
  if (d < 1) throw DomainError("etf_size_range: need d >= 1");
  const double m = field_dim(field);
  const double dd = static_cast<double>(d);
  EtfRange r;
  r.n_min = dd + 0.5 + std::sqrt((8.0 / m) * dd + 1.0) / 2.0;
  r.n_max = d + static_cast<long>(field_dim(field)) * d * (d - 1) / 2;
  if (d >= 2) r.simplex_n = d + 1;
  return r;
}

QMat hopf(const Eigen::Matrix<double, 5, 1>& a, const Tolerance& tol) {
  if (std::abs(a.norm() - 1.0) >= tol.eps) throw DomainError("hopf: input must be a unit vector in R^5");
  QMat v(2, 1);
  const double t = 1.0 - a(4);
  if (t <= 0.0) {
    v.set(0, 0, Quatd(1));
    return v;
  }
  const Quatd q(a(0), a(1), a(2), a(3));
  v.set(0, 0, q / std::sqrt(2.0 * t));
  v.set(1, 0, Quatd(std::sqrt(t / 2.0)));
  return v;
}

Frame hopf_lines(int n) {
  if (n < 3 || n > 6) throw DomainError("hopf_lines: n must be in 3..6");
  // coordinate slots of R^5 receiving the simplex coordinates; the last
  // simplex coordinate always lands on x5
  static const std::vector<std::vector<int>> slots = {
      {0, 4}, {0, 1, 4}, {0, 1, 2, 4}, {0, 1, 2, 3, 4}};
  const auto& slot = slots[static_cast<std::size_t>(n - 3)];
  const Frame s = catalog::simplex(n - 1);

  QMat v(2, n);
  for (int j = 0; j < n; ++j) {
    Eigen::Matrix<double, 5, 1> a = Eigen::Matrix<double, 5, 1>::Zero();
    for (std::size_t c = 0; c < slot.size(); ++c) a(slot[c]) = s.synthesis.part(0)(static_cast<Eigen::Index>(c), j);
    a.normalize();
    v.set_col(j, hopf(a));
  }
  return Frame(std::move(v));
}

void ProjectionSet::validate(const Tolerance& tol) const {
  if (projections.empty()) throw DomainError("projection set is empty");
  const auto d = projections.front().rows();
  for (const auto& p : projections) {
    if (!p.is_square() || p.rows() != d) throw ShapeError("projections must be square of equal size");
    const double scale = 1.0 + frobenius_norm(p);
    if (frobenius_norm(p - adjoint(p)) >= tol.eps * scale) throw DomainError("projection is not Hermitian");
    if (frobenius_norm(p * p - p) >= tol.eps * scale) throw DomainError("projection is not idempotent");
    if (std::abs(re_trace(p) - static_cast<double>(subspace_dim)) >= tol.eps * scale) {
      throw DomainError("projection trace differs from the subspace dimension");
    }
  }
}

namespace {

template <typename PairValue>
double mean_over_pairs(const ProjectionSet& s, PairValue value) {
  const auto n = s.projections.size();
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      sum += value(j, k);
      ++count;
    }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace

SubspaceReport is_equichordal(const ProjectionSet& s, const Tolerance& tol) {
  s.validate(tol);
  const double r = static_cast<double>(s.subspace_dim);
  const auto& p = s.projections;
  const auto rt = [&](std::size_t j, std::size_t k) { return re_trace(p[j] * p[k]); };

  SubspaceReport out;
  out.lambda = mean_over_pairs(s, [&](std::size_t j, std::size_t k) { return rt(j, k) / r; });
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (j != k) out.max_deviation = std::max(out.max_deviation, std::abs(rt(j, k) - out.lambda * r));
  out.holds = out.max_deviation < tol.eps;
  return out;
}

SubspaceReport is_equiisoclinic(const ProjectionSet& s, const Tolerance& tol) {
  s.validate(tol);
  const double r = static_cast<double>(s.subspace_dim);
  const auto& p = s.projections;

  SubspaceReport out;
  out.lambda = mean_over_pairs(s, [&](std::size_t j, std::size_t k) { return re_trace(p[j] * p[k]) / r; });
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t k = j + 1; k < p.size(); ++k)
      out.max_deviation = std::max(out.max_deviation, frobenius_norm(p[j] * p[k] * p[j] - p[j] * out.lambda));
  out.holds = out.max_deviation < tol.eps;
  return out;
}

QMat projection_of_span(const QMat& b, const Tolerance& tol) {
  const QMat x = gram_schmidt_extend(b, b.cols(), tol);
  return x * adjoint(x);
}

ProjectionSet line_projections(const Frame& f) {
  require_unit_columns(f, "line_projections");
  ProjectionSet s;
  s.subspace_dim = 1;
  for (Eigen::Index j = 0; j < f.size(); ++j) s.projections.push_back(f.vec(j) * adjoint(f.vec(j)));
  return s;
}

ProjectionSet complement_projections(const ProjectionSet& s) {
  ProjectionSet c;
  if (s.projections.empty()) return c;
  const auto d = s.projections.front().rows();
  c.subspace_dim = d - s.subspace_dim;
  for (const auto& p : s.projections) c.projections.push_back(QMat::Identity(d) - p);
  return c;
}

}  // namespace qframes
