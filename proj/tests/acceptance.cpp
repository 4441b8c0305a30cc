// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "qframes/qframes.hpp"

using namespace qframes;

namespace {

// Pinned tolerances.
constexpr double kAngleTol = 1e-8;         // AC1, AC2
constexpr double kRuntimeAc1 = 1.0;        // seconds
constexpr double kCentralTol = 1e-7;       // AC3: U^2 = -I, U^4 = -I
constexpr double kRuntimeAc3 = 60.0;       // seconds
constexpr double kComplementTol = 1e-9;    // AC4, AC5
constexpr double kGramRelationTol = 1e-12; // AC4
constexpr double kDirectTight = 1e-8;      // AC6 oracle, relative to the frame bound
constexpr double kWelchSlack = 1e-12;      // AC7, relative to (sum ||v||^2)^2
constexpr double kWelchEquality = 1e-9;    // AC7, relative to (sum ||v||^2)^2
constexpr double kOperatorTight = 1e-7;    // AC7, relative to the frame bound
constexpr double kUnitaryTol = 1e-12;      // AC10
constexpr double kMinOffset = 0.01;        // AC11, |(a, b)| >= this
constexpr int kRandomFrames = 1000;        // AC6, AC7

const Quatd I1(1), Ii = Quatd::i(), Ij = Quatd::j(), Ik = Quatd::k(), O(0);

std::mt19937_64 gen(987654321ULL);
std::normal_distribution<double> normal(0.0, 1.0);

QMat random_matrix(Eigen::Index r, Eigen::Index c, int field_dim) {
  QMat m(r, c);
  for (int p = 0; p < field_dim; ++p)
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m.part(p)(i, j) = normal(gen);
  return m;
}

QMat random_tight(Eigen::Index d, Eigen::Index n, int field_dim) {
  return gram_schmidt_extend(random_matrix(n, n, field_dim), n).block(0, 0, d, n);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_off_diagonal_deviation(const Frame& f, double lambda) {
  const QMat g = gramian(f);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < f.size(); ++j)
    for (Eigen::Index k = j + 1; k < f.size(); ++k) worst = std::max(worst, std::abs(g(j, k).norm2() - lambda));
  return worst;
}

bool directly_tight(const QMat& v) {
  const QMat s = v * adjoint(v);
  const double a = v.squared_norm() / static_cast<double>(v.rows());
  return (s - QMat::Identity(v.rows()) * a).max_abs() < kDirectTight * a;
}

QMat power(const QMat& u, int k) {
  QMat out = QMat::Identity(u.rows());
  for (int t = 0; t < k; ++t) out = out * u;
  return out;
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("AC%-2d %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !pass;
}

void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

void ac1() {
  const auto t0 = std::chrono::steady_clock::now();
  const Frame f = catalog::six_h2();
  const auto t = tightness(f);
  const double dev = max_off_diagonal_deviation(f, 0.4);
  const double secs = seconds_since(t0);
  report(1, t.is_tight && std::abs(t.frame_bound - 3.0) < kAngleTol && dev < kAngleTol && secs < kRuntimeAc1,
         fmt("six lines in H^2: bound %.12g, max |lambda - 2/5| %.2e, %.3f s", t.frame_bound, dev, secs));
}

void ac2() {
  const Frame f = catalog::six_h2();
  const std::pair<int, double> expected[] = {{1, 1.0}, {2, 0.4}, {3, 0.1}, {4, -0.02}, {6, -11.0 / 250}};
  double worst = 0.0;
  for (const auto& [m, re] : expected)
    for (const Cycle& c : distinct_cycles(6, m)) worst = std::max(worst, std::abs(reduced_m_product(f, c).re - re));
  const double lo = -(25 + 9 * std::sqrt(5.0)) / 500, hi = -(25 - 9 * std::sqrt(5.0)) / 500;
  int n_lo = 0, n_hi = 0, stray = 0;
  for (const Cycle& c : distinct_cycles(6, 5)) {
    const double re = reduced_m_product(f, c).re;
    if (std::abs(re - lo) < kAngleTol) ++n_lo;
    else if (std::abs(re - hi) < kAngleTol) ++n_hi;
    else ++stray;
  }
  report(2, worst < kAngleTol && stray == 0 && n_lo > 0 && n_hi > 0,
         fmt("m-products: max deviation %.2e (m = 1..4, 6); 5-cycles %g low, %g high, %g other", worst, n_lo, n_hi,
             stray));
}

void ac3() {
  const auto t0 = std::chrono::steady_clock::now();
  const Frame f = catalog::six_h2();
  const auto group = projective_symmetry_group(f);
  const bool even = std::all_of(group.permutations.begin(), group.permutations.end(), is_even);
  const auto ra = certify_symmetry(f, from_cycles(6, {{1, 2}, {3, 4}}));
  const auto rb = certify_symmetry(f, from_cycles(6, {{1, 2, 3, 5}, {4, 6}}));
  const double secs = seconds_since(t0);
  double da = INFINITY, db = INFINITY;
  if (ra.verdict == Verdict::Certified) da = (power(ra.certificate->unitary, 2) + QMat::Identity(2)).max_abs();
  if (rb.verdict == Verdict::Certified) db = (power(rb.certificate->unitary, 4) + QMat::Identity(2)).max_abs();
  const bool pass = group.permutations.size() == 360 && even && group.certified == 360 && group.unitary_order == 720 &&
                    da < kCentralTol && db < kCentralTol && secs < kRuntimeAc3;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "symmetries: %zu permutations (%s), %zu certified, unitary order %zu, |U_a^2 + I| %.1e, "
                "|U_b^4 + I| %.1e, %.2f s",
                group.permutations.size(), even ? "all even" : "not all even", group.certified, group.unitary_order,
                da, db, secs);
  report(3, pass, buf);
}

void ac4() {
  const Frame v = catalog::b20_five_h2();
  const bool v_ok = is_tight(v) && max_off_diagonal_deviation(v, 0.375) < kComplementTol;
  const Frame w = normalised(complement_synthesis(v));
  bool unit = true;
  for (Eigen::Index j = 0; j < w.size(); ++j) unit = unit && std::abs(w.vec(j).squared_norm() - 1.0) < kComplementTol;
  const double dev = max_off_diagonal_deviation(w, 1.0 / 6.0);
  const double rel =
      (complement_gramian(v) - (QMat::Identity(5) * (5.0 / 3.0) - gramian(v) * (2.0 / 3.0))).max_abs();
  report(4, v_ok && w.dim() == 3 && w.size() == 5 && unit && is_tight(w) && dev < kComplementTol &&
                rel < kGramRelationTol,
         fmt("complement in H^%g: max |lambda - 1/6| %.2e, Gramian relation defect %.2e", double(w.dim()), dev, rel));
}

void ac5() {
  const Field expected[] = {Field::Real, Field::Complex, Field::Quaternionic, Field::Quaternionic};
  bool pass = true;
  std::string detail = "Hopf lines:";
  for (int n = 3; n <= 6; ++n) {
    const Frame f = hopf_lines(n);
    const double lambda = double(n - 2) / (2.0 * (n - 1));
    const double dev = max_off_diagonal_deviation(f, lambda);
    const Field field = classify_field(f);
    pass = pass && is_tight(f) && dev < kComplementTol && field == expected[n - 3];
    detail += fmt(" n=%g %.0e", n, dev) + " " + to_string(field) + ";";
  }
  report(5, pass, detail);
}

void ac6() {
  int agree_r = 0, agree_c = 0, pos_r = 0, pos_c = 0;
  for (int t = 0; t < kRandomFrames; ++t) {
    const Eigen::Index d = 1 + t % 3, n = 2 * d + 1 + t % 4;
    const bool build_positive = (t / 2) % 2 == 1;
    // over C: either a generic tight frame or a tight real frame of R^2d read as complex vectors
    QMat c;
    if (!build_positive) {
      c = random_tight(d, n, 2);
    } else {
      const QMat r = random_tight(2 * d, n, 1);
      c = QMat(d, n);
      for (Eigen::Index j = 0; j < n; ++j) c.set_col(j, real_to_cvec(r.col(j)));
    }
    const bool vr = descends_to_real(Frame(c)).descends;
    agree_r += vr == directly_tight(cmat_to_real(c).block(0, 0, 2 * d, n));
    pos_r += vr;
    // over H: likewise with C^2d
    QMat h;
    if (!build_positive) {
      h = random_tight(d, n, 4);
    } else {
      const QMat cc = random_tight(2 * d, n, 2);
      h = QMat(d, n);
      for (Eigen::Index j = 0; j < n; ++j) h.set_col(j, complex_to_qvec(cc.col(j)));
    }
    const bool vc = descends_to_complex(Frame(h)).descends;
    agree_c += vc == directly_tight(qmat_to_complex(h).block(0, 0, 2 * d, n));
    pos_c += vc;
  }
  report(6, agree_r == kRandomFrames && agree_c == kRandomFrames,
         fmt("descent verdicts agree with the embedded frame: R %g/%g (%g descend), C %g/1000", agree_r,
             kRandomFrames, pos_r, agree_c) +
             fmt(" (%g descend)", pos_c));
}

void ac7() {
  int violations = 0, mismatches = 0, equalities = 0;
  double worst = 0.0;
  for (int t = 0; t < kRandomFrames; ++t) {
    const Eigen::Index d = 1 + t % 4, n = d + 1 + t % 5;
    const int field_dim = t % 3 == 0 ? 1 : t % 3 == 1 ? 2 : 4;
    const double scale = 0.1 + 3.0 * std::abs(normal(gen));
    const QMat v = (t % 2 == 0 ? random_matrix(d, n, field_dim) : random_tight(d, n, field_dim)) * scale;
    const auto r = tightness(Frame(v));
    worst = std::min(worst, r.variational_defect / r.scale);
    violations += r.variational_defect < -kWelchSlack * r.scale;
    const bool equality = std::abs(r.variational_defect) < kWelchEquality * r.scale;
    const bool tight = r.operator_defect < kOperatorTight * r.frame_bound;
    equalities += equality;
    mismatches += equality != tight;
  }
  report(7, violations == 0 && mismatches == 0,
         fmt("Welch inequality: %g violations (most negative relative defect %.1e), %g equality cases, "
             "%g disagreements with the operator test",
             violations, worst, equalities, mismatches));
}

void ac8() {
  const Frame f = harmonic_frame({1, 5});
  const QMat g = gramian(f);
  bool rows_ok = true;
  for (Eigen::Index r = 0; r < 8; ++r) {
    int zeros = 0;
    std::set<long> units;
    for (Eigen::Index c = 0; c < 8; ++c) {
      if (c == r) continue;
      const Quatd e = g(r, c);
      if (e.abs() < kAngleTol) {
        ++zeros;
        continue;
      }
      // (1 +- u) / 2 for a unit u in {i, j, k}
      const Quatd u = (e * 2.0) - I1;
      const bool axis = (u - Ii).abs() < kAngleTol || (u + Ii).abs() < kAngleTol || (u - Ij).abs() < kAngleTol ||
                        (u + Ij).abs() < kAngleTol || (u - Ik).abs() < kAngleTol || (u + Ik).abs() < kAngleTol;
      rows_ok = rows_ok && axis;
      units.insert(std::lround(u.x) + 3 * std::lround(u.y) + 9 * std::lround(u.z));
    }
    rows_ok = rows_ok && zeros == 1 && units.size() == 6;
  }
  report(8, f.dim() == 2 && is_tight(f) && rows_ok,
         std::string("harmonic frame from rows {1, 5}: ") + (is_tight(f) ? "tight" : "not tight") +
             (rows_ok ? ", every row has one orthogonal partner and (1 +- i, j, k)/2 once each"
                      : ", row pattern broken"));
}

void ac9() {
  const long h2 = max_lines(2, Field::Quaternionic), c2 = max_lines(2, Field::Complex),
             h3 = max_lines(3, Field::Quaternionic);
  const bool r5 = etf_size_range(3, Field::Real).admits(5), c5 = etf_size_range(3, Field::Complex).admits(5),
             q5 = etf_size_range(3, Field::Quaternionic).admits(5);
  char buf[256];
  std::snprintf(buf, sizeof buf, "bounds: max lines H^2 %ld, C^2 %ld, H^3 %ld; n=5 in d=3 admitted R %d, C %d, H %d", h2,
                c2, h3, r5, c5, q5);
  report(9, h2 == 6 && c2 == 4 && h3 == 15 && !r5 && !c5 && q5, buf);
}

void ac10() {
  const QMat u = QMat{{I1, Ii}, {Ij, Ik}} / std::sqrt(2.0);
  const double du = unitary_defect(u);
  const QMat ut = u.transpose();
  const double dt = unitary_defect(ut);
  const double gram = (adjoint(ut) * ut - QMat{{I1, Ij}, {-Ij, I1}}).max_abs();
  report(10, du < kUnitaryTol && dt >= 1.0 && gram < kUnitaryTol,
         fmt("unitary defect %.1e, transpose defect %.3g, transpose Gram vs [[1,j],[-j,1]] %.1e", du, dt, gram));
}

ProjectionSet two_planes(double a, double b) {
  const QMat v1 = QMat::column({I1, O, O});
  const QMat v2 = QMat::column({Quatd(std::sqrt(1 - a * a - b * b)), Quatd(a), Quatd(b)});
  ProjectionSet lines;
  lines.subspace_dim = 1;
  lines.projections = {v1 * adjoint(v1), v2 * adjoint(v2)};
  return complement_projections(lines);
}

void ac11() {
  int tested = 0, wrong = 0;
  auto probe = [&](double a, double b) {
    if (std::hypot(a, b) < kMinOffset || a * a + b * b > 0.98) return;
    ++tested;
    wrong += is_equiisoclinic(two_planes(a, b)).holds;
  };
  for (int p = -9; p <= 9; ++p)
    for (int q = -9; q <= 9; ++q) probe(0.1 * p, 0.1 * q);
  for (double s : {0.01, -0.01}) {
    probe(s, 0.0);
    probe(0.0, s);
  }
  std::uniform_real_distribution<double> unif(-0.99, 0.99);
  for (int t = 0; t < 500; ++t) probe(unif(gen), unif(gen));
  report(11, tested > 0 && wrong == 0,
         fmt("two planes in R^3: %g offsets tested, %g equi-isoclinic", tested, wrong));
}

}  // namespace

int main() {
  guarded(1, ac1);
  guarded(2, ac2);
  guarded(3, ac3);
  guarded(4, ac4);
  guarded(5, ac5);
  guarded(6, ac6);
  guarded(7, ac7);
  guarded(8, ac8);
  guarded(9, ac9);
  guarded(10, ac10);
  guarded(11, ac11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
