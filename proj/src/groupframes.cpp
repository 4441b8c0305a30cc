#include "qframes/groupframes.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <string>

namespace qframes {

namespace {

/// Fixed unit-norm linear functional on matrix entries. Two matrices within
/// Frobenius distance e have keys within e, so a sorted key index narrows
/// nearest-element searches to a thin window.
class KeyIndex {
 public:
  KeyIndex(Eigen::Index rows, Eigen::Index cols, double dedup_eps) : eps_(dedup_eps) {
    const auto n = rows * cols;
    for (int p = 0; p < 4; ++p) {
      weights_[p] = QMat::Real(rows, cols);
      for (Eigen::Index t = 0; t < n; ++t) {
        // irrational, pairwise distinct weights
        weights_[p](t % rows, t / rows) = std::sqrt(2.0 + static_cast<double>(4 * t + p)) - 1.0;
      }
    }
    double nrm = 0.0;
    for (const auto& w : weights_) nrm += w.squaredNorm();
    nrm = std::sqrt(nrm);
    for (auto& w : weights_) w /= nrm;
  }

  double key(const QMat& m) const {
    double k = 0.0;
    for (int p = 0; p < 4; ++p) k += weights_[p].cwiseProduct(m.part(p)).sum();
    return k;
  }

  /// Index of the stored matrix within eps of m, or npos. Throws on ambiguity.
  std::size_t find(const QMat& m, const std::vector<QMat>& store) const {
    const double k = key(m);
    std::size_t hit = npos;
    for (auto it = index_.lower_bound(k - eps_); it != index_.end() && it->first <= k + eps_; ++it) {
      if (frobenius_norm(store[it->second] - m) < eps_) {
        if (hit != npos) throw DomainError("group: two elements within dedup tolerance of a product");
        hit = it->second;
      }
    }
    return hit;
  }

  void insert(const QMat& m, std::size_t idx) { index_.emplace(key(m), idx); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  double eps_;
  std::array<QMat::Real, 4> weights_;
  std::multimap<double, std::size_t> index_;
};

void require_unitary_set(const std::vector<QMat>& ms, const Tolerance& tol) {
  if (ms.empty()) throw DomainError("group: no matrices supplied");
  const auto n = ms.front().rows();
  for (const auto& m : ms) {
    if (!m.is_square() || m.rows() != n) throw ShapeError("group: matrices must be square of equal size");
    if (unitary_defect(m) >= tol.eps) throw DomainError("group: matrix is not unitary");
  }
}

}  // namespace

std::size_t MatrixGroup::inverse_index(std::size_t g) const {
  const auto& row = mult_table.at(g);
  for (std::size_t h = 0; h < row.size(); ++h)
    if (row[h] == identity_index) return h;
  throw DomainError("group element has no inverse in the table");
}

std::size_t MatrixGroup::index_of(const QMat& m, double dedup_eps) const {
  for (std::size_t t = 0; t < elements.size(); ++t)
    if (frobenius_norm(elements[t] - m) < dedup_eps) return t;
  throw DomainError("matrix is not an element of the group");
}

MatrixGroup group_from_elements(std::vector<QMat> elements, double dedup_eps, const Tolerance& tol) {
  require_unitary_set(elements, tol);
  const auto d = elements.front().rows();
  KeyIndex index(d, d, dedup_eps);
  for (std::size_t t = 0; t < elements.size(); ++t) {
    if (index.find(elements[t], elements) != KeyIndex::npos) throw DomainError("group: duplicate element");
    index.insert(elements[t], t);
  }

  MatrixGroup g;
  g.elements = std::move(elements);
  const auto n = g.elements.size();
  const auto id = index.find(QMat::Identity(d), g.elements);
  if (id == KeyIndex::npos) throw DomainError("group: identity missing");
  g.identity_index = id;

  g.mult_table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = index.find(g.elements[a] * g.elements[b], g.elements);
      if (c == KeyIndex::npos) throw DomainError("group: set is not closed under multiplication");
      g.mult_table[a][b] = c;
    }
  return g;
}

MatrixGroup group_closure(const std::vector<QMat>& generators, std::size_t cap, double dedup_eps,
                          const Tolerance& tol) {
  require_unitary_set(generators, tol);
  const auto d = generators.front().rows();
  KeyIndex index(d, d, dedup_eps);

  std::vector<QMat> elements{QMat::Identity(d)};
  index.insert(elements.front(), 0);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const auto g = frontier.front();
    frontier.pop_front();
    for (const auto& h : generators) {
      QMat p = elements[g] * h;
      if (index.find(p, elements) != KeyIndex::npos) continue;
      if (elements.size() >= cap) throw DomainError("group_closure: order exceeds cap");
      elements.push_back(std::move(p));
      index.insert(elements.back(), elements.size() - 1);
      frontier.push_back(elements.size() - 1);
    }
  }
  return group_from_elements(std::move(elements), dedup_eps, tol);
}

Frame orbit_frame(const MatrixGroup& g, const QMat& v) {
  if (v.cols() != 1) throw ShapeError("orbit_frame: expected a column vector");
  if (v.squared_norm() == 0.0) throw DomainError("orbit_frame: zero vector");
  std::vector<QMat> cols;
  cols.reserve(g.order());
  for (const auto& e : g.elements) cols.push_back(e * v);
  return Frame(QMat::hstack(cols));
}

bool is_group_matrix(const QMat& m, const MatrixGroup& g, const Tolerance& tol) {
  const auto n = g.order();
  if (m.rows() != static_cast<Eigen::Index>(n) || m.cols() != static_cast<Eigen::Index>(n)) {
    throw ShapeError("is_group_matrix: matrix size differs from the group order");
  }
  // nu(h) = M(e, h)
  const auto e = static_cast<Eigen::Index>(g.identity_index);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ainv = g.inverse_index(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = static_cast<Eigen::Index>(g.mult_table[ainv][b]);
      const auto ia = static_cast<Eigen::Index>(a);
      const auto ib = static_cast<Eigen::Index>(b);
      if ((m(ia, ib) - m(e, c)).abs() >= tol.eps) return false;
    }
  }
  return true;
}

namespace {

const std::array<Quatd, 8>& q_elements() {
  static const std::array<Quatd, 8> q = {Quatd(1), Quatd(-1), Quatd::i(), -Quatd::i(),
                                         Quatd::j(), -Quatd::j(), Quatd::k(), -Quatd::k()};
  return q;
}

}  // namespace

MatrixGroup quaternion_group() {
  std::vector<QMat> els;
  for (const auto& q : q_elements()) els.push_back(QMat{{q}});
  return group_from_elements(std::move(els));
}

MatrixGroup monomial_q_group() {
  const QMat swap{{Quatd(0), Quatd(1)}, {Quatd(1), Quatd(0)}};
  const QMat di{{Quatd(1), Quatd(0)}, {Quatd(0), Quatd::i()}};
  const QMat dj{{Quatd(1), Quatd(0)}, {Quatd(0), Quatd::j()}};
  return group_closure({swap, di, dj}, 256);
}

const CharacterTable& q_character_table() {
  // chi_1..chi_4 factor through Q/{+-1}; chi_5..chi_8 are the automorphisms
  // of Q fixing (i, j, k) up to the listed images.
  static const CharacterTable table = [] {
    const Quatd o(1), i = Quatd::i(), j = Quatd::j(), k = Quatd::k();
    const auto row = [](Quatd a, Quatd b, Quatd c, Quatd d) {
      return std::array<Quatd, 8>{Quatd(1), Quatd(1), a, a, b, b, c, d};
    };
    const auto aut = [](Quatd fi, Quatd fj, Quatd fk) {
      return std::array<Quatd, 8>{Quatd(1), Quatd(-1), fi, -fi, fj, -fj, fk, -fk};
    };
    CharacterTable t{};
    t[0] = row(o, o, o, o);
    t[1] = row(o, -o, -o, -o);
    t[2] = row(-o, o, -o, -o);
    t[3] = row(-o, -o, o, o);
    t[4] = aut(i, j, k);
    t[5] = aut(j, i, -k);
    t[6] = aut(-i, -j, k);
    t[7] = aut(-j, -i, -k);
    return t;
  }();
  return table;
}

namespace {

void require_index_set(const std::vector<int>& idx, const char* who) {
  if (idx.empty()) throw DomainError(std::string(who) + ": nothing selected");
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 1 || idx[a] > 8) throw DomainError(std::string(who) + ": index must be in 1..8");
    if (std::find(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(a), idx[a]) != idx.begin() + static_cast<std::ptrdiff_t>(a))
      throw DomainError(std::string(who) + ": repeated index");
  }
}

}  // namespace

Frame harmonic_frame(const std::vector<int>& rows) {
  require_index_set(rows, "harmonic_frame");
  const auto& t = q_character_table();
  QMat v(static_cast<Eigen::Index>(rows.size()), 8);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (int q = 0; q < 8; ++q) v.set(static_cast<Eigen::Index>(a), q, t[static_cast<std::size_t>(rows[a] - 1)][static_cast<std::size_t>(q)]);
  }
  return Frame(v / std::sqrt(static_cast<double>(rows.size())));
}

Frame character_column_frame(const std::vector<int>& cols) {
  require_index_set(cols, "character_column_frame");
  const auto& t = q_character_table();
  QMat v(static_cast<Eigen::Index>(cols.size()), 8);
  for (std::size_t a = 0; a < cols.size(); ++a) {
    for (int r = 0; r < 8; ++r) v.set(static_cast<Eigen::Index>(a), r, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[a] - 1)].conj());
  }
  return Frame(v / std::sqrt(static_cast<double>(cols.size())));
}

}  // namespace qframes
