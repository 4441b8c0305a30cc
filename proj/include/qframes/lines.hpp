#pragma once

#include <optional>
#include <vector>

#include "qframes/frames.hpp"

namespace qframes {

struct AngleReport {
  std::optional<double> common_lambda;  // set when equiangular
  double mean_lambda = 0.0;             // mean of |<v_j,v_k>|^2 over j != k
  double max_deviation = 0.0;
  bool is_equiangular = false;
  double theta_degrees = 90.0;          // arccos(sqrt(mean_lambda))
};

/// Requires unit columns.
AngleReport angle_report(const Frame& f);

/// (n - d) / (d (n - 1)), the angle of n tight equiangular lines in dimension d.
double welch_angle(long n, long d);

/// Maximal number of equiangular lines: d(d+1)/2, d^2, 2d^2 - d.
long max_lines(long d, Field field);
/// Angle attained at the maximum: 1/(d+2), 1/(d+1), 1/(d+1/2).
double max_angle(long d, Field field);

/// Range of n for which n tight equiangular lines may exist in F^d.
/// The lower bound comes from the complementary frame and so excludes the
/// simplex (n = d + 1, whose complement is a single line); it is admitted separately.
struct EtfRange {
  double n_min = 0.0;
  long n_max = 0;
  long simplex_n = 0;  // d + 1 for d >= 2
  bool admits(long n) const {
    return n == simplex_n || (static_cast<double>(n) >= n_min - 1e-12 && n <= n_max);
  }
};

EtfRange etf_size_range(long d, Field field);

/// Hopf map from the unit sphere of R^5 to unit vectors of H^2 with
/// real non-negative second entry.
QMat hopf(const Eigen::Matrix<double, 5, 1>& a, const Tolerance& tol = {});

/// n tight equiangular lines in H^2 (3 <= n <= 6) from a regular simplex in R^5.
Frame hopf_lines(int n);

/// Orthogonal projections onto r-dimensional subspaces of H^d.
struct ProjectionSet {
  std::vector<QMat> projections;
  Eigen::Index subspace_dim = 0;

  /// Throws DomainError unless every P is Hermitian, idempotent, of trace r.
  void validate(const Tolerance& tol = {}) const;
};

struct SubspaceReport {
  bool holds = false;
  double lambda = 0.0;        // mean over pairs
  double max_deviation = 0.0;
};

/// Re trace(P_j P_k) = lambda r for all j != k.
SubspaceReport is_equichordal(const ProjectionSet& s, const Tolerance& tol = {});
/// P_j P_k P_j = lambda P_j for all j < k (one side per pair).
SubspaceReport is_equiisoclinic(const ProjectionSet& s, const Tolerance& tol = {});

/// P = X X* with X an orthonormal basis of the column span of b.
QMat projection_of_span(const QMat& b, const Tolerance& tol = {});

/// Line projections v_j v_j* of a frame of unit vectors.
ProjectionSet line_projections(const Frame& f);
/// I - P_j, subspace dimension d - r.
ProjectionSet complement_projections(const ProjectionSet& s);

}  // namespace qframes
