#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qframes/frames.hpp"

namespace qframes {

/// A finite group of unitary matrices with its multiplication table.
struct MatrixGroup {
  std::vector<QMat> elements;
  /// mult_table[a][b] = index of elements[a] * elements[b].
  std::vector<std::vector<std::size_t>> mult_table;
  std::size_t identity_index = 0;

  std::size_t order() const { return elements.size(); }
  std::size_t inverse_index(std::size_t g) const;
  /// Index of the element within dedup_eps of m; throws DomainError if absent.
  std::size_t index_of(const QMat& m, double dedup_eps = 1e-6) const;
};

/// Build the group table for a list of matrices already closed under product.
MatrixGroup group_from_elements(std::vector<QMat> elements, double dedup_eps = 1e-6,
                                const Tolerance& tol = {});

/// Breadth-first closure of the generators under multiplication.
MatrixGroup group_closure(const std::vector<QMat>& generators, std::size_t cap,
                          double dedup_eps = 1e-6, const Tolerance& tol = {});

/// Columns g v for g in G, in group order.
Frame orbit_frame(const MatrixGroup& g, const QMat& v);

/// M_{gh} = nu(g^{-1} h) for some nu: G -> H, rows and columns indexed in group order.
bool is_group_matrix(const QMat& m, const MatrixGroup& g, const Tolerance& tol = {});

/// The quaternion group Q = (1, -1, i, -i, j, -j, k, -k) as 1 x 1 matrices, in that order.
MatrixGroup quaternion_group();

/// The 128 invertible 2x2 matrices with two zero entries and two entries in Q.
MatrixGroup monomial_q_group();

using CharacterTable = std::array<std::array<Quatd, 8>, 8>;

/// Characters chi_1..chi_8 of Q (rows) evaluated at (1,-1,i,-i,j,-j,k,-k) (columns).
const CharacterTable& q_character_table();

/// Frame for H^{|rows|} with columns (chi_r(q))_{r in rows}, scaled to unit norm.
/// Rows are 1-based.
Frame harmonic_frame(const std::vector<int>& rows);

/// Frame for H^{|cols|} whose rows are the conjugated table columns at the
/// given (1-based) elements of Q, scaled to unit norm.
Frame character_column_frame(const std::vector<int>& cols);

}  // namespace qframes
