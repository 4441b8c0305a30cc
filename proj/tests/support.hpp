#pragma once

#include <random>

#include "qframes/qframes.hpp"

namespace qtest {

using namespace qframes;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611ULL);
  return gen;
}

inline double gauss() {
  static std::normal_distribution<double> n(0.0, 1.0);
  return n(rng());
}

inline Quatd random_quat() { return {gauss(), gauss(), gauss(), gauss()}; }

inline Quatd random_unit_quat() { return random_quat().normalized(); }

/// Gaussian matrix over the field with the given real dimension (1, 2 or 4).
inline QMat random_matrix(Eigen::Index r, Eigen::Index c, int field_dim = 4) {
  QMat m(r, c);
  for (int p = 0; p < field_dim; ++p)
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m.part(p)(i, j) = gauss();
  return m;
}

inline QMat random_unitary(Eigen::Index n, int field_dim = 4) {
  return gram_schmidt_extend(random_matrix(n, n, field_dim), n);
}

/// First d rows of a random n x n unitary, scaled: a tight frame with bound scale^2.
inline Frame random_tight_frame(Eigen::Index d, Eigen::Index n, int field_dim = 4, double scale = 1.0) {
  return Frame(random_unitary(n, field_dim).block(0, 0, d, n) * scale);
}

inline double max_abs_diff(const QMat& a, const QMat& b) { return (a - b).max_abs(); }

}  // namespace qtest
