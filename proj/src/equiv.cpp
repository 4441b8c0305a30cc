#include "qframes/equiv.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include <Eigen/Eigenvalues>

#include "qframes/groupframes.hpp"

namespace qframes {

using Index = Eigen::Index;

// ---------------------------------------------------------------- graph

bool FrameGraph::has_edge(Index j, Index k) const {
  const auto& adj = adjacency.at(static_cast<std::size_t>(j));
  return std::binary_search(adj.begin(), adj.end(), k);
}

std::size_t FrameGraph::component_count() const {
  std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
  std::size_t count = 0;
  for (Index s = 0; s < vertex_count; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    std::deque<Index> q{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto w : adjacency[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          q.push_back(w);
        }
      }
    }
  }
  return count;
}

FrameGraph frame_graph(const Frame& f) {
  const QMat g = gramian(f);
  FrameGraph out;
  out.vertex_count = f.size();
  out.adjacency.resize(static_cast<std::size_t>(f.size()));
  for (Index j = 0; j < f.size(); ++j)
    for (Index k = j + 1; k < f.size(); ++k)
      if (g(j, k).abs() >= f.tol.eps) {
        out.edges.emplace_back(j, k);
        out.adjacency[static_cast<std::size_t>(j)].push_back(k);
        out.adjacency[static_cast<std::size_t>(k)].push_back(j);
      }
  for (auto& a : out.adjacency) std::sort(a.begin(), a.end());
  return out;
}

std::vector<Cycle> cycle_basis(const FrameGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count);
  std::vector<Index> parent(n, -1);
  std::vector<Index> depth(n, -1);
  std::set<std::pair<Index, Index>> tree;

  for (Index s = 0; s < g.vertex_count; ++s) {
    if (depth[static_cast<std::size_t>(s)] >= 0) continue;
    depth[static_cast<std::size_t>(s)] = 0;
    std::deque<Index> q{s};
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto w : g.adjacency[static_cast<std::size_t>(u)]) {
        if (depth[static_cast<std::size_t>(w)] >= 0) continue;
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(w)] = u;
        tree.emplace(std::min(u, w), std::max(u, w));
        q.push_back(w);
      }
    }
  }

  std::vector<Cycle> out;
  for (const auto& e : g.edges) {
    if (tree.count(e)) continue;
    // walk both ends up to the lowest common ancestor
    Cycle up{e.first};
    Cycle down{e.second};
    Index a = e.first;
    Index b = e.second;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
        a = parent[static_cast<std::size_t>(a)];
        up.push_back(a);
      } else {
        b = parent[static_cast<std::size_t>(b)];
        down.push_back(b);
      }
    }
    down.pop_back();  // lca already ends `up`
    up.insert(up.end(), down.rbegin(), down.rend());
    out.push_back(std::move(up));
  }
  return out;
}

// ---------------------------------------------------------------- products

namespace {

ReducedProduct reduce(const Quatd& q) { return {q.re(), q.abs()}; }

bool same_reduced(const ReducedProduct& a, const ReducedProduct& b, double eps) {
  const double scale = 1.0 + std::max(a.abs, b.abs);
  return std::abs(a.re - b.re) < eps * scale && std::abs(a.abs - b.abs) < eps * scale;
}

void check_cycle(const Cycle& c, Index n) {
  if (c.empty()) throw DomainError("m-product: empty cycle");
  for (auto j : c)
    if (j < 0 || j >= n) throw DomainError("m-product: index out of range");
}

}  // namespace

Quatd m_product_value(const QMat& gram, const Cycle& cycle) {
  check_cycle(cycle, gram.cols());
  // <v_{j_{t+1}}, v_{j_t}> = G(j_t, j_{t+1})
  Quatd p(1);
  const auto m = cycle.size();
  for (std::size_t t = 0; t < m; ++t) p = p * gram(cycle[t], cycle[(t + 1) % m]);
  return p;
}

MProduct m_product(const Frame& f, const Cycle& cycle) {
  MProduct out;
  out.cycle = cycle;
  out.value = m_product_value(gramian(f), cycle);
  out.reduced = reduce(out.value);
  return out;
}

ReducedProduct reduced_m_product(const Frame& f, const Cycle& cycle) { return m_product(f, cycle).reduced; }

std::vector<Cycle> distinct_cycles(Index n, int m) {
  std::vector<Cycle> out;
  if (m < 1 || m > n) return out;
  Cycle c(static_cast<std::size_t>(m));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == c.size()) {
      if (m < 3 || c[1] < c.back()) out.push_back(c);
      return;
    }
    for (Index v = c[0] + 1; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      c[t] = v;
      rec(t + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  for (Index s = 0; s < n; ++s) {
    c[0] = s;
    used[static_cast<std::size_t>(s)] = true;
    rec(1);
    used[static_cast<std::size_t>(s)] = false;
  }
  return out;
}

std::map<int, std::vector<ProductClass>> product_spectrum(const Frame& f, int max_m) {
  const QMat g = gramian(f);
  std::map<int, std::vector<ProductClass>> out;
  for (int m = 1; m <= std::min<Index>(max_m, f.size()); ++m) {
    std::vector<ReducedProduct> vals;
    for (const auto& c : distinct_cycles(f.size(), m)) vals.push_back(reduce(m_product_value(g, c)));
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
      return a.re != b.re ? a.re < b.re : a.abs < b.abs;
    });
    auto& classes = out[m];
    for (const auto& v : vals) {
      auto it = std::find_if(classes.begin(), classes.end(),
                             [&](const ProductClass& pc) { return same_reduced(pc.value, v, f.tol.eps); });
      if (it == classes.end()) {
        classes.push_back({v, 1});
      } else {
        ++it->count;
      }
    }
  }
  return out;
}

bool necessary_projective_equivalent(const Frame& f, const Frame& g) {
  if (f.size() != g.size()) throw ShapeError("necessary_projective_equivalent: frames differ in size");
  const double eps = f.tol.eps;
  const auto gf = frame_graph(f);
  const auto gg = frame_graph(g);
  if (gf.edges != gg.edges) return false;

  const QMat a = gramian(f);
  const QMat b = gramian(g);
  for (Index j = 0; j < f.size(); ++j)
    for (Index k = j; k < f.size(); ++k)
      if (std::abs(a(j, k).norm2() - b(j, k).norm2()) >= eps * (1.0 + a(j, k).norm2())) return false;

  for (const auto& c : cycle_basis(gf))
    if (!same_reduced(reduce(m_product_value(a, c)), reduce(m_product_value(b, c)), eps)) return false;
  return true;
}

bool ordered_products_agree(const Frame& f, const Frame& g, int max_m) {
  if (f.size() != g.size()) throw ShapeError("ordered_products_agree: frames differ in size");
  const QMat a = gramian(f);
  const QMat b = gramian(g);
  for (int m = 1; m <= std::min<Index>(max_m, f.size()); ++m)
    for (const auto& c : distinct_cycles(f.size(), m))
      if (!same_reduced(reduce(m_product_value(a, c)), reduce(m_product_value(b, c)), f.tol.eps)) return false;
  return true;
}

// ---------------------------------------------------------------- search

std::vector<Permutation> symmetry_candidates(const Frame& f, const SearchOptions& opts) {
  const Index n = f.size();
  const int max_m = opts.max_m > 0 ? static_cast<int>(std::min<Index>(opts.max_m, n))
                                   : static_cast<int>(std::min<Index>(n, 6));
  const QMat g = gramian(f);
  const double eps = f.tol.eps;

  // order vertices by decreasing number of distinct 3-product classes through them
  std::vector<std::vector<ReducedProduct>> classes(static_cast<std::size_t>(n));
  if (n >= 3) {
    for (const auto& c : distinct_cycles(n, 3)) {
      const auto r = reduce(m_product_value(g, c));
      for (auto v : c) {
        auto& cl = classes[static_cast<std::size_t>(v)];
        if (std::none_of(cl.begin(), cl.end(), [&](const auto& x) { return same_reduced(x, r, eps); })) cl.push_back(r);
      }
    }
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return classes[static_cast<std::size_t>(a)].size() > classes[static_cast<std::size_t>(b)].size();
  });
  std::vector<std::size_t> step(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < order.size(); ++t) step[static_cast<std::size_t>(order[t])] = t;

  // every cycle is checked once, at the step assigning its last vertex
  struct Check {
    Cycle cycle;
    ReducedProduct value;
  };
  std::vector<std::vector<Check>> buckets(static_cast<std::size_t>(n));
  for (int m = 1; m <= max_m; ++m) {
    for (auto& c : distinct_cycles(n, m)) {
      std::size_t last = 0;
      for (auto v : c) last = std::max(last, step[static_cast<std::size_t>(v)]);
      const auto r = reduce(m_product_value(g, c));
      buckets[last].push_back({std::move(c), r});
    }
  }

  std::vector<Permutation> out;
  Permutation sigma(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t nodes = 0;
  Cycle image;

  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == static_cast<std::size_t>(n)) {
      out.push_back(sigma);
      return;
    }
    const auto p = static_cast<std::size_t>(order[t]);
    for (Index c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      if (++nodes > opts.node_cap) throw DomainError("symmetry_candidates: search node cap exceeded");
      sigma[p] = c;
      bool ok = true;
      for (const auto& chk : buckets[t]) {
        image.resize(chk.cycle.size());
        for (std::size_t s = 0; s < chk.cycle.size(); ++s) image[s] = sigma[static_cast<std::size_t>(chk.cycle[s])];
        if (!same_reduced(chk.value, reduce(m_product_value(g, image)), eps)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[static_cast<std::size_t>(c)] = true;
        rec(t + 1);
        used[static_cast<std::size_t>(c)] = false;
      }
      sigma[p] = -1;
    }
  };
  if (n > 0) rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- phases

std::vector<Triple> default_triples(const Frame& f, Index j) {
  const QMat g = gramian(f);
  std::vector<Triple> out;
  for (Index k = 0; k < f.size(); ++k)
    for (Index l = k + 1; l < f.size(); ++l) {
      if (k == j || l == j) continue;
      if (m_product_value(g, {j, k, l}).abs() >= f.tol.eps) out.push_back({j, k, l});
    }
  return out;
}

namespace {

void check_permutation(const Permutation& sigma, Index n) {
  if (static_cast<Index>(sigma.size()) != n) throw ShapeError("permutation length differs from frame size");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (auto s : sigma) {
    if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)]) throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

Frame permuted(const Frame& g, const Permutation& sigma) {
  return Frame(g.synthesis.select_columns(std::vector<Index>(sigma.begin(), sigma.end())), g.tol);
}

}  // namespace

PhaseSystem phase_system(const Frame& f, const Frame& g, const Permutation& sigma, const std::vector<Triple>& triples) {
  check_permutation(sigma, f.size());
  if (g.size() != f.size()) throw ShapeError("phase_system: frames differ in size");
  const QMat gf = gramian(f);
  const QMat gg = gramian(g);

  // alpha D - alpha Dw = 0 in coordinates: (L(D) - R(Dw)) coords(alpha) = 0
  Eigen::Matrix4d normal = Eigen::Matrix4d::Zero();
  for (const auto& t : triples) {
    const Quatd d = m_product_value(gf, {t[0], t[1], t[2]});
    const Cycle img{sigma[static_cast<std::size_t>(t[0])], sigma[static_cast<std::size_t>(t[1])],
                    sigma[static_cast<std::size_t>(t[2])]};
    const Quatd dw = m_product_value(gg, img);
    const Eigen::Matrix4d block = left_mult_matrix(d) - right_mult_matrix(dw);
    normal.noalias() += block.transpose() * block;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(normal);
  PhaseSystem out;
  out.null_basis = es.eigenvectors();
  out.singular_values = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const double smax = out.singular_values(3);
  const double thresh = std::sqrt(f.tol.eps) * (1.0 + smax);
  for (int c = 0; c < 4; ++c)
    if (out.singular_values(c) < thresh) ++out.nullity;
  return out;
}

namespace {

/// Unit vector of the null space closest to 1, sign-normalised.
Quatd pick_phase(const PhaseSystem& s) {
  Eigen::Vector4d v = Eigen::Vector4d::Zero();
  for (int c = 0; c < s.nullity; ++c) v += s.null_basis(0, c) * s.null_basis.col(c);
  if (v.norm() < 1e-6) v = s.null_basis.col(0);
  v.normalize();
  for (int c = 0; c < 4; ++c) {
    if (std::abs(v(c)) > 1e-12) {
      if (v(c) < 0) v = -v;
      break;
    }
  }
  return Quatd::from_coords(v);
}

}  // namespace

Quatd recover_phase(const Frame& f, const Permutation& sigma, Index j, const std::vector<Triple>& triples) {
  for (const auto& t : triples)
    if (t[0] != j) throw DomainError("recover_phase: every triple must start with j");
  const auto s = phase_system(f, f, sigma, triples);
  if (s.nullity == 0) throw CertificateError("recover_phase: no unit scalar satisfies the 3-product constraints");
  if (s.nullity >= 2) throw SingularError("recover_phase: phase is underdetermined by the supplied triples");
  return pick_phase(s);
}

// ---------------------------------------------------------------- unitaries

std::vector<Index> independent_columns(const Frame& f) {
  std::vector<Index> out;
  std::vector<QMat> basis;
  const double thresh = std::sqrt(f.tol.eps);
  for (Index j = 0; j < f.size() && static_cast<Index>(out.size()) < f.dim(); ++j) {
    QMat r = f.vec(j);
    const double nv = frobenius_norm(r);
    if (nv == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : basis) r -= u * inner(r, u);
    const double nr = frobenius_norm(r);
    if (nr < thresh * nv) continue;
    basis.push_back(r / nr);
    out.push_back(j);
  }
  return out;
}

namespace {

/// Fit alpha_j and the residual ||(U v_j) alpha_j - w_j|| for every column.
std::optional<SymmetryCertificate> check_unitary(const Frame& f, const Frame& w, QMat u, const Permutation& sigma) {
  const double eps = f.tol.eps;
  SymmetryCertificate cert;
  cert.defect = unitary_defect(u);
  if (!(cert.defect < eps)) return std::nullopt;
  cert.alphas.resize(static_cast<std::size_t>(f.size()));
  for (Index j = 0; j < f.size(); ++j) {
    const QMat uv = u * f.vec(j);
    const QMat wj = w.vec(j);
    const double n2 = uv.squared_norm();
    Quatd alpha(1);
    if (n2 > 0.0) {
      const Quatd a = inner(wj, uv);
      if (a.norm2() > 0.0) alpha = a.normalized();
    }
    const double res = frobenius_norm(uv * alpha - wj);
    if (!(res < eps * (1.0 + frobenius_norm(wj)))) return std::nullopt;
    cert.alphas[static_cast<std::size_t>(j)] = alpha;
    cert.defect = std::max(cert.defect, res);
  }
  cert.sigma = sigma;
  cert.unitary = std::move(u);
  return cert;
}

std::optional<SymmetryCertificate> unitary_from_basis(const Frame& f, const Frame& w, const Permutation& sigma,
                                                      const std::vector<Index>& basis,
                                                      const std::vector<Quatd>& alphas) {
  const auto d = static_cast<Index>(basis.size());
  QMat x(f.dim(), d);
  for (Index t = 0; t < d; ++t) x.set_col(t, f.vec(basis[static_cast<std::size_t>(t)]) * alphas[static_cast<std::size_t>(t)]);
  const QMat y = w.synthesis.select_columns(basis);
  QMat xinv;
  try {
    xinv = solve_inverse(x, f.tol);
  } catch (const SingularError&) {
    return std::nullopt;
  }
  return check_unitary(f, w, y * xinv, sigma);
}

}  // namespace

std::optional<SymmetryCertificate> recover_unitary(const Frame& f, const Frame& g, const Permutation& sigma,
                                                   const std::vector<Index>& basis,
                                                   const std::vector<Quatd>& basis_alphas) {
  check_permutation(sigma, f.size());
  if (g.size() != f.size() || g.dim() != f.dim()) throw ShapeError("recover_unitary: frames differ in shape");
  if (static_cast<Index>(basis.size()) != f.dim() || basis_alphas.size() != basis.size()) {
    throw ShapeError("recover_unitary: need d basis indices and d alphas");
  }
  const Frame w = permuted(g, sigma);
  const auto d = basis.size();
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << d); ++pattern) {
    std::vector<Quatd> a = basis_alphas;
    for (std::size_t t = 0; t < d; ++t)
      if (pattern & (std::size_t{1} << t)) a[t] = -a[t];
    if (auto cert = unitary_from_basis(f, w, sigma, basis, a)) return cert;
  }
  return std::nullopt;
}

std::optional<SymmetryCertificate> recover_unitary(const Frame& f, const Permutation& sigma,
                                                   const std::vector<Index>& basis,
                                                   const std::vector<Quatd>& basis_alphas) {
  return recover_unitary(f, f, sigma, basis, basis_alphas);
}

EquivalenceResult certify_mapping(const Frame& f, const Frame& g, const Permutation& sigma) {
  check_permutation(sigma, f.size());
  if (g.size() != f.size() || g.dim() != f.dim()) throw ShapeError("certify_mapping: frames differ in shape");
  const Frame w = permuted(g, sigma);
  Permutation id(sigma.size());
  std::iota(id.begin(), id.end(), Index{0});

  EquivalenceResult out;
  if (!necessary_projective_equivalent(f, w)) {
    out.verdict = Verdict::Inequivalent;
    return out;
  }
  const auto basis = independent_columns(f);
  if (static_cast<Index>(basis.size()) < f.dim()) return out;  // f does not span: U is not pinned down

  std::vector<Quatd> alphas;
  bool determined = true;
  for (auto j : basis) {
    const auto s = phase_system(f, w, id, default_triples(f, j));
    if (s.nullity == 0) {
      out.verdict = Verdict::Inequivalent;
      return out;
    }
    if (s.nullity >= 2) determined = false;
    alphas.push_back(pick_phase(s));
  }

  if (determined) {
    // each basis alpha is fixed up to sign, so failure of every sign pattern is conclusive
    out.certificate = recover_unitary(f, g, sigma, basis, alphas);
    out.verdict = out.certificate ? Verdict::Certified : Verdict::Inequivalent;
    return out;
  }

  // Underdetermined phases: fix one root per component and propagate along a
  // spanning tree with alpha_k = <v_k,v_j>^{-1} alpha_j <w_k,w_j>.
  const auto graph = frame_graph(f);
  const QMat gf = gramian(f);
  const QMat gw = gramian(w);
  std::vector<Quatd> all(static_cast<std::size_t>(f.size()));
  std::vector<int> component(static_cast<std::size_t>(f.size()), -1);
  int ncomp = 0;
  for (Index r = 0; r < f.size(); ++r) {
    if (component[static_cast<std::size_t>(r)] >= 0) continue;
    const auto s = phase_system(f, w, id, default_triples(f, r));
    if (s.nullity == 0) {
      out.verdict = Verdict::Inequivalent;
      return out;
    }
    all[static_cast<std::size_t>(r)] = pick_phase(s);
    component[static_cast<std::size_t>(r)] = ncomp;
    std::deque<Index> q{r};
    while (!q.empty()) {
      const auto j = q.front();
      q.pop_front();
      for (auto k : graph.adjacency[static_cast<std::size_t>(j)]) {
        if (component[static_cast<std::size_t>(k)] >= 0) continue;
        component[static_cast<std::size_t>(k)] = ncomp;
        const Quatd a = gram_inner(gf, k, j).inverse() * all[static_cast<std::size_t>(j)] * gram_inner(gw, k, j);
        all[static_cast<std::size_t>(k)] = a.normalized();
        q.push_back(k);
      }
    }
    ++ncomp;
  }
  if (ncomp > 20) return out;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << ncomp); ++pattern) {
    std::vector<Quatd> a;
    for (auto j : basis) {
      const auto c = static_cast<std::size_t>(component[static_cast<std::size_t>(j)]);
      const Quatd base = all[static_cast<std::size_t>(j)];
      a.push_back((pattern >> c) & 1U ? -base : base);
    }
    if (auto cert = unitary_from_basis(f, w, sigma, basis, a)) {
      out.certificate = std::move(cert);
      out.verdict = Verdict::Certified;
      return out;
    }
  }
  return out;
}

EquivalenceResult projective_equivalence(const Frame& f, const Frame& g) {
  Permutation id(static_cast<std::size_t>(f.size()));
  std::iota(id.begin(), id.end(), Index{0});
  return certify_mapping(f, g, id);
}

// ---------------------------------------------------------------- groups

bool is_even(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (auto t = s; !seen[t]; t = static_cast<std::size_t>(p[t])) {
      seen[t] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeError("compose: permutations differ in length");
  Permutation out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[static_cast<std::size_t>(b[j])];
  return out;
}

Permutation from_cycles(Index n, const std::vector<std::vector<Index>>& cycles) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), Index{0});
  for (const auto& c : cycles)
    for (std::size_t t = 0; t < c.size(); ++t) {
      const auto from = c[t] - 1;
      const auto to = c[(t + 1) % c.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw DomainError("from_cycles: index out of range");
      p[static_cast<std::size_t>(from)] = to;
    }
  check_permutation(p, n);
  return p;
}

namespace {

std::set<Permutation> permutation_closure(const std::vector<Permutation>& gens, std::size_t n) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), Index{0});
  std::set<Permutation> out{id};
  std::deque<Permutation> q{id};
  while (!q.empty()) {
    const auto p = q.front();
    q.pop_front();
    for (const auto& g : gens) {
      auto c = compose(g, p);
      if (out.insert(c).second) q.push_back(std::move(c));
    }
  }
  return out;
}

std::size_t element_order(const MatrixGroup& g, std::size_t e) {
  std::size_t k = 1;
  for (auto p = e; p != g.identity_index; p = g.mult_table[p][e]) ++k;
  return k;
}

}  // namespace

SymmetryGroupReport projective_symmetry_group(const Frame& f, const SearchOptions& opts, std::size_t group_cap) {
  SymmetryGroupReport rep;
  rep.permutations = symmetry_candidates(f, opts);

  std::vector<SymmetryCertificate> certs;
  for (const auto& sigma : rep.permutations) {
    auto r = certify_symmetry(f, sigma);
    if (r.verdict == Verdict::Certified) {
      rep.max_defect = std::max(rep.max_defect, r.certificate->defect);
      certs.push_back(std::move(*r.certificate));
    }
  }
  rep.certified = certs.size();
  if (certs.empty()) return rep;

  std::vector<Permutation> gens;
  std::set<Permutation> generated = permutation_closure({}, static_cast<std::size_t>(f.size()));
  for (const auto& c : certs) {
    if (generated.size() == certs.size()) break;
    if (generated.count(c.sigma)) continue;
    gens.push_back(c.sigma);
    rep.generators.push_back(c);
    generated = permutation_closure(gens, static_cast<std::size_t>(f.size()));
  }

  std::vector<QMat> unitaries;
  for (const auto& c : rep.generators) unitaries.push_back(c.unitary);
  if (unitaries.empty()) unitaries.push_back(QMat::Identity(f.dim()));
  const auto group = group_closure(unitaries, group_cap);
  rep.unitary_order = group.order();

  const QMat id = QMat::Identity(f.dim());
  for (std::size_t e = 0; e < group.order(); ++e) {
    if (e == group.identity_index) continue;
    if (rank(group.elements[e] - id, Tolerance(1e-8)) == 1) {
      ++rep.reflections;
      ++rep.reflection_orders[element_order(group, e)];
    }
  }
  return rep;
}

}  // namespace qframes
