#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qframes/frames.hpp"

namespace qframes {

using Cycle = std::vector<Eigen::Index>;
/// sigma[j] is the image index of j: the frame (v_{sigma j}).
using Permutation = std::vector<Eigen::Index>;

/// Edge j-k (j < k) whenever |<v_j, v_k>| >= eps.
struct FrameGraph {
  Eigen::Index vertex_count = 0;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;
  std::vector<std::vector<Eigen::Index>> adjacency;  // sorted neighbour lists

  bool has_edge(Eigen::Index j, Eigen::Index k) const;
  std::size_t component_count() const;
};

FrameGraph frame_graph(const Frame& f);

/// Fundamental cycles of a breadth-first spanning forest, one per non-tree
/// edge; each cycle runs u -> ... -> lca -> ... -> v and closes with v -> u.
std::vector<Cycle> cycle_basis(const FrameGraph& g);

struct ReducedProduct {
  double re = 0.0;
  double abs = 0.0;
};

struct MProduct {
  Cycle cycle;
  Quatd value;
  ReducedProduct reduced;
};

/// Delta = <v_{j2},v_{j1}> <v_{j3},v_{j2}> ... <v_{j1},v_{jm}>, factors in that order.
MProduct m_product(const Frame& f, const Cycle& cycle);
/// Same, from a precomputed Gramian.
Quatd m_product_value(const QMat& gram, const Cycle& cycle);
ReducedProduct reduced_m_product(const Frame& f, const Cycle& cycle);

/// Cycles of m distinct indices out of n, one per cyclic class up to
/// reversal: smallest index first and, for m >= 3, second < last.
std::vector<Cycle> distinct_cycles(Eigen::Index n, int m);

/// Reduced products of all distinct-index m-cycles, clustered to tolerance.
struct ProductClass {
  ReducedProduct value;
  std::size_t count = 0;
};
std::map<int, std::vector<ProductClass>> product_spectrum(const Frame& f, int max_m);

/// Equal frame graphs, equal 1- and 2-products, and equal reduced products
/// on every cycle of a cycle basis. False certifies inequivalence.
bool necessary_projective_equivalent(const Frame& f, const Frame& g);

/// Reduced products agree on every distinct-index cycle of length <= max_m.
bool ordered_products_agree(const Frame& f, const Frame& g, int max_m);

struct SearchOptions {
  int max_m = 0;                      // 0: min(n, 6)
  std::size_t node_cap = 50'000'000;  // backtracking nodes before giving up
};

/// All sigma under which every distinct-cycle reduced product of length
/// <= max_m is preserved, sorted lexicographically.
std::vector<Permutation> symmetry_candidates(const Frame& f, const SearchOptions& opts = {});

/// Three indices j, k, l with j fixed.
using Triple = std::array<Eigen::Index, 3>;

/// All triples (j, k, l), k < l distinct from j, whose 3-product is nonzero.
std::vector<Triple> default_triples(const Frame& f, Eigen::Index j);

/// Solution space of alpha Delta(w-cycle) = Delta(v-cycle) alpha over the triples,
/// with w_j = g_{sigma j}.
struct PhaseSystem {
  int nullity = 0;
  Eigen::Matrix4d null_basis;   // first `nullity` columns span the solutions
  Eigen::Vector4d singular_values;  // ascending
};

PhaseSystem phase_system(const Frame& f, const Frame& g, const Permutation& sigma,
                         const std::vector<Triple>& triples);

/// Unit alpha_j for the symmetry sigma of f. Throws CertificateError when
/// the system has only the zero solution and SingularError when the
/// solution is not unique up to sign.
Quatd recover_phase(const Frame& f, const Permutation& sigma, Eigen::Index j, const std::vector<Triple>& triples);

struct SymmetryCertificate {
  Permutation sigma;
  std::vector<Quatd> alphas;  // per index
  QMat unitary;
  double defect = 0.0;        // max(unitary defect, column residuals)
};

/// U = [w_j]_{j in J} [v_j alpha_j]_{j in J}^{-1} over the 2^d sign patterns of
/// the basis alphas; returns the first certificate satisfying
/// ||(U v_j) alpha_j - w_j|| < eps for every j, or nothing.
std::optional<SymmetryCertificate> recover_unitary(const Frame& f, const Frame& g, const Permutation& sigma,
                                                   const std::vector<Eigen::Index>& basis,
                                                   const std::vector<Quatd>& basis_alphas);
std::optional<SymmetryCertificate> recover_unitary(const Frame& f, const Permutation& sigma,
                                                   const std::vector<Eigen::Index>& basis,
                                                   const std::vector<Quatd>& basis_alphas);

/// First d columns that are linearly independent, greedily in index order.
std::vector<Eigen::Index> independent_columns(const Frame& f);

enum class Verdict { Inequivalent, Certified, Undetermined };

struct EquivalenceResult {
  Verdict verdict = Verdict::Undetermined;
  std::optional<SymmetryCertificate> certificate;
};

/// Decide whether g_{sigma j} = (U f_j) alpha_j for some unitary U and unit alphas.
EquivalenceResult certify_mapping(const Frame& f, const Frame& g, const Permutation& sigma);
inline EquivalenceResult certify_symmetry(const Frame& f, const Permutation& sigma) {
  return certify_mapping(f, f, sigma);
}
/// sigma = identity.
EquivalenceResult projective_equivalence(const Frame& f, const Frame& g);

struct SymmetryGroupReport {
  std::vector<Permutation> permutations;   // candidate permutation group
  std::size_t certified = 0;               // candidates with a certificate
  std::vector<SymmetryCertificate> generators;
  std::size_t unitary_order = 0;           // order of the group the generators' unitaries generate
  std::size_t reflections = 0;             // elements g with rank(g - I) = 1
  std::map<std::size_t, std::size_t> reflection_orders;  // element order -> count
  double max_defect = 0.0;
};

SymmetryGroupReport projective_symmetry_group(const Frame& f, const SearchOptions& opts = {},
                                              std::size_t group_cap = 100'000);

bool is_even(const Permutation& p);
/// Compose as functions: (a * b)[j] = a[b[j]].
Permutation compose(const Permutation& a, const Permutation& b);
/// Permutation from 1-based disjoint cycles, e.g. {{1,2},{3,4}}.
Permutation from_cycles(Eigen::Index n, const std::vector<std::vector<Eigen::Index>>& cycles);

}  // namespace qframes
