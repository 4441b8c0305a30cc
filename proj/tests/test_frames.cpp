#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace qtest;

namespace {

const Quatd I1(1), Ii = Quatd::i(), Ij = Quatd::j(), Ik = Quatd::k(), O(0);

// Direct tightness of an embedded frame: ||S - A I|| against the frame bound.
bool directly_tight(const QMat& v) {
  const QMat s = v * adjoint(v);
  const double a = v.squared_norm() / static_cast<double>(v.rows());
  return (s - QMat::Identity(v.rows()) * a).max_abs() < 1e-8 * a;
}

QMat real_image(const QMat& v) { return cmat_to_real(v).block(0, 0, 2 * v.rows(), v.cols()); }

// [v_j]_C for every column, without the [v_j j]_C half.
QMat complex_image(const QMat& v) { return qmat_to_complex(v).block(0, 0, 2 * v.rows(), v.cols()); }

QMat swap_columns(const QMat& v, Eigen::Index a, Eigen::Index b) {
  QMat out = v;
  out.set_col(a, v.col(b));
  out.set_col(b, v.col(a));
  return out;
}

}  // namespace

TEST_CASE("Gramian and frame operator") {
  const Frame e(QMat::Identity(3));
  CHECK(max_abs_diff(gramian(e), QMat::Identity(3)) == 0.0);
  CHECK(max_abs_diff(frame_operator(e), QMat::Identity(3)) == 0.0);

  const Frame f(QMat{{I1, Ii, Ij, Ik}});
  const QMat expected{{I1, Ii, Ij, Ik}, {-Ii, I1, -Ik, Ij}, {-Ij, Ik, I1, -Ii}, {-Ik, -Ij, Ii, I1}};
  CHECK(max_abs_diff(gramian(f), expected) == 0.0);
  CHECK(gram_inner(gramian(f), 1, 0) == Ii);  // <v_2, v_1> = conj(1) i

  for (int t = 0; t < 10; ++t) {
    const Frame r(random_matrix(3, 5));
    const QMat g = gramian(r), s = frame_operator(r);
    CHECK(max_abs_diff(adjoint(g), g) < 1e-12);
    CHECK(max_abs_diff(adjoint(s), s) < 1e-12);
    QMat gk = g, sk = s;
    for (int k = 1; k <= 3; ++k) {
      CHECK(re_trace(gk) == doctest::Approx(re_trace(sk)).epsilon(1e-10));
      gk = gk * g;
      sk = sk * s;
    }
    CHECK(re_trace(g) == doctest::Approx(r.synthesis.squared_norm()).epsilon(1e-12));
  }
}

TEST_CASE("tightness certificates") {
  const auto onb = tightness(catalog::onb(3));
  CHECK(onb.is_tight);
  CHECK(onb.frame_bound == 1.0);
  CHECK(onb.variational_defect == doctest::Approx(0.0));
  CHECK(onb.operator_defect == 0.0);

  const auto six = tightness(catalog::six_h2());
  CHECK(six.is_tight);
  CHECK(six.frame_bound == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(six.gramian_projection_defect < 1e-12);

  // five lines at angle 1/2 exceed the tight angle 3/8 and cannot be tight
  const auto five = tightness(catalog::five_h2());
  CHECK_FALSE(five.is_tight);
  CHECK(five.variational_defect > 1.0);
  CHECK(five.operator_defect > 0.1);

  CHECK_THROWS_AS(tightness(Frame(QMat(2, 3))), DomainError);
}

TEST_CASE("variational inequality on random frames") {
  for (int t = 0; t < 50; ++t) {
    const Frame r(random_matrix(2 + t % 3, 3 + t % 5));
    const auto rep = tightness(r);
    CHECK(rep.variational_defect >= -1e-12 * rep.scale);
    CHECK_FALSE(rep.is_tight);
    const auto tr = tightness(random_tight_frame(2 + t % 3, 6, 4, 1.0 + t));
    CHECK(tr.is_tight);
    CHECK(std::abs(tr.variational_defect) < 1e-12 * tr.scale);
    CHECK(tr.operator_defect < 1e-10 * tr.frame_bound);
  }
}

TEST_CASE("Plancherel identity for a tight frame") {
  const Frame f = random_tight_frame(3, 7, 4, 2.0);
  REQUIRE(is_tight(f));
  const double a = tightness(f).frame_bound;
  for (int t = 0; t < 10; ++t) {
    const QMat v = random_matrix(3, 1), w = random_matrix(3, 1);
    double sum = 0.0;
    Quatd recon;
    for (Eigen::Index j = 0; j < f.size(); ++j) {
      sum += inner(v, f.vec(j)).norm2();
      recon += inner(f.vec(j), w) * inner(v, f.vec(j));
    }
    CHECK(sum == doctest::Approx(a * v.squared_norm()).epsilon(1e-10));
    CHECK((recon - inner(v, w) * a).abs() < 1e-10);
  }
}

TEST_CASE("unitary equivalence") {
  const Frame f = random_tight_frame(2, 4);
  CHECK(unitarily_equivalent(f, Frame(random_unitary(2) * f.synthesis)));
  QMat p = f.synthesis;
  p.set(0, 0, p(0, 0) + Quatd(1e-3));
  CHECK_FALSE(unitarily_equivalent(f, Frame(p)));
  CHECK_THROWS_AS(unitarily_equivalent(f, random_tight_frame(2, 5)), ShapeError);

  // Hoggar's lines share the SIC Gramian once its 2nd and 3rd vectors trade places
  const Frame sic = catalog::wh_sic2();
  CHECK(unitarily_equivalent(catalog::hoggar4(), Frame(swap_columns(sic.synthesis, 1, 2))));
  const QMat u = catalog::hoggar_to_sic_unitary();
  CHECK(max_abs_diff(u * catalog::hoggar4().synthesis, swap_columns(sic.synthesis, 1, 2)) < 1e-12);
}

TEST_CASE("field classification") {
  CHECK(classify_field(catalog::onb(3)) == Field::Real);
  CHECK(classify_field(catalog::simplex(3)) == Field::Real);
  CHECK(classify_field(catalog::hoggar4()) == Field::Complex);
  CHECK(classify_field(catalog::wh_sic2()) == Field::Complex);
  CHECK(classify_field(catalog::five_h2()) == Field::Quaternionic);
  CHECK(classify_field(catalog::six_h2()) == Field::Quaternionic);
  // the field of the Gramian, not of the entries: a real frame rotated by i is still real
  CHECK(classify_field(Frame(catalog::simplex(2).synthesis * Ii)) == Field::Real);

  CHECK(parse_field("H") == Field::Quaternionic);
  CHECK(parse_field("complex") == Field::Complex);
  CHECK(to_string(Field::Real) == "real");
  CHECK(parse_field(to_string(Field::Quaternionic)) == Field::Quaternionic);
  CHECK_THROWS_AS(parse_field("O"), DomainError);
}

TEST_CASE("complement of the simplex is a line") {
  const Frame s = catalog::simplex(3);
  const QMat gc = complement_gramian(s);
  CHECK(rank(gc) == 1);
  for (Eigen::Index j = 0; j < 4; ++j)
    for (Eigen::Index k = 0; k < 4; ++k) CHECK(gc(j, k).abs() == doctest::Approx(1.0));
  const Frame w = complement_synthesis(s);
  CHECK(w.dim() == 1);
  CHECK(max_abs_diff(gramian(s) + gramian(w), QMat::Identity(4) * (4.0 / 3.0)) < 1e-12);
}

TEST_CASE("complement of five lines in H^2") {
  const Frame v = catalog::b20_five_h2();
  REQUIRE(is_tight(v));
  const QMat g = gramian(v);
  const QMat gc = complement_gramian(v);
  CHECK(max_abs_diff(gc, QMat::Identity(5) * (5.0 / 3.0) - g * (2.0 / 3.0)) < 1e-14);
  // (1 - d/n) G_c is a rank n - d projection
  const QMat p = gc * 0.6;
  CHECK(max_abs_diff(p * p, p) < 1e-12);
  CHECK(re_trace(p) == doctest::Approx(3.0));

  const Frame w = normalised(complement_synthesis(v));
  CHECK(w.dim() == 3);
  CHECK(is_tight(w));
  CHECK(max_abs_diff(gramian(w), gc) < 1e-12);
  for (Eigen::Index j = 0; j < 5; ++j)
    for (Eigen::Index k = j + 1; k < 5; ++k) CHECK(g(j, k).norm2() == doctest::Approx(0.375));
  for (Eigen::Index j = 0; j < 5; ++j)
    for (Eigen::Index k = j + 1; k < 5; ++k) CHECK(gc(j, k).norm2() == doctest::Approx(1.0 / 6.0));
  // the printed presentation of the complement
  CHECK(unitarily_equivalent(w, catalog::five_h3()));
}

TEST_CASE("complement of six lines in H^2") {
  const Frame w = catalog::six_h4();
  CHECK(w.dim() == 4);
  CHECK(is_tight(w));
  for (Eigen::Index j = 0; j < 6; ++j)
    for (Eigen::Index k = j + 1; k < 6; ++k) CHECK(gramian(w)(j, k).norm2() == doctest::Approx(0.1));
}

TEST_CASE("complement twice returns the original Gramian") {
  for (const Frame& f : {catalog::six_h2(), catalog::b20_five_h2(), normalised(hopf_lines(5))}) {
    const Frame back = normalised(complement_synthesis(normalised(complement_synthesis(f))));
    CHECK(unitarily_equivalent(f, back));
  }
  for (int t = 0; t < 5; ++t) {
    const Frame f = random_tight_frame(3, 7, 4, 1.5);
    const Frame w = complement_synthesis(f);
    const double a = tightness(f).frame_bound;
    CHECK(max_abs_diff(gramian(f) + gramian(w), QMat::Identity(7) * a) < 1e-10);
    CHECK(max_abs_diff(frame_operator(w), QMat::Identity(4) * a) < 1e-10);
  }
}

TEST_CASE("complement preconditions") {
  CHECK_THROWS_AS(complement_gramian(catalog::onb(3)), DomainError);
  CHECK_THROWS_AS(complement_synthesis(catalog::onb(3)), DomainError);
  CHECK_THROWS_AS(complement_gramian(catalog::five_h2()), CertificateError);
  CHECK_THROWS_AS(complement_synthesis(catalog::five_h2()), CertificateError);
  CHECK_THROWS_AS(complement_gramian(random_tight_frame(2, 5, 4, 2.0)), DomainError);
}

TEST_CASE("descent to R^2d") {
  // in C^1 the condition is sum z_j^2 = 0
  CHECK(descends_to_real(Frame(QMat{{I1, Ii}})).descends);
  CHECK_FALSE(descends_to_real(Frame(QMat{{I1, I1}})).descends);

  // rescaled SIC: V = [v, iSv, i Omega v, -S Omega v]
  const QMat v = catalog::wh_fiducial();
  const QMat s{{O, I1}, {I1, O}}, omega{{I1, O}, {O, -I1}};
  const Frame sic(QMat::hstack({v, s * v * Ii, omega * v * Ii, -(s * omega * v)}));
  const auto rd = descends_to_real(sic);
  CHECK(rd.descends);
  CHECK(rd.re_norm == doctest::Approx(rd.im_norm));
  const double a = std::sqrt(3.0 + std::sqrt(3.0)) / std::sqrt(6.0);
  const double b = std::sqrt(3.0 - std::sqrt(3.0)) / (2.0 * std::sqrt(3.0));
  const Eigen::Matrix4d printed{{a, -b, 0, b}, {b, 0, b, -a}, {0, b, a, b}, {b, a, -b, 0}};
  const QMat image = real_image(sic.synthesis);
  CHECK((image.part(0) - printed).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(max_abs_diff(adjoint(image) * image, QMat::Identity(4)) < 1e-14);
  CHECK_FALSE(descends_to_real(catalog::wh_sic2()).descends);

  CHECK_THROWS_AS(descends_to_real(catalog::six_h2()), DomainError);
  CHECK_THROWS_AS(descends_to_real(Frame(random_matrix(2, 4, 2))), CertificateError);
}

TEST_CASE("descent to R^2d agrees with the embedded frame") {
  int positives = 0;
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index d = 1 + t % 3, n = 2 * d + 1 + t % 4;
    Frame f;
    if (t % 2 == 0) {
      f = random_tight_frame(d, n, 2);
    } else {
      // a tight real frame for R^2d read back as complex vectors
      const QMat r = random_tight_frame(2 * d, n, 1).synthesis;
      QMat c(d, n);
      for (Eigen::Index j = 0; j < n; ++j) c.set_col(j, real_to_cvec(r.col(j)));
      f = Frame(c);
    }
    const bool verdict = descends_to_real(f).descends;
    CHECK(verdict == directly_tight(real_image(f.synthesis)));
    positives += verdict;
  }
  CHECK(positives == 50);
}

TEST_CASE("descent to C^2d") {
  const auto q = descends_to_complex(Frame(QMat{{I1, Ii, Ij, Ik}}));
  CHECK(q.descends);
  CHECK(q.co1_sq == doctest::Approx(q.co2_sq));
  CHECK(q.split_operator_defect < 1e-15);
  CHECK(q.image_gramian_defect < 1e-15);

  const auto onb = descends_to_complex(catalog::onb(2));
  CHECK_FALSE(onb.descends);
  CHECK(onb.co2_sq == 0.0);
  CHECK(onb.co1_sq == doctest::Approx(2.0));

  CHECK_THROWS_AS(descends_to_complex(catalog::five_h2()), CertificateError);
}

TEST_CASE("descent to C^2d agrees with the embedded frame") {
  int positives = 0;
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index d = 1 + t % 3, n = 2 * d + 1 + t % 4;
    Frame f;
    if (t % 2 == 0) {
      f = random_tight_frame(d, n, 4);
    } else {
      const QMat c = random_tight_frame(2 * d, n, 2).synthesis;
      QMat h(d, n);
      for (Eigen::Index j = 0; j < n; ++j) h.set_col(j, complex_to_qvec(c.col(j)));
      f = Frame(h);
    }
    const auto rep = descends_to_complex(f);
    const bool direct = directly_tight(complex_image(f.synthesis));
    CHECK(rep.descends == direct);
    // the equivalent forms vanish together with the condition
    CHECK((rep.split_operator_defect < 1e-8) == direct);
    CHECK((rep.image_gramian_defect < 1e-8) == direct);
    positives += rep.descends;
  }
  CHECK(positives == 50);
}

TEST_CASE("polarisation recovers the inner product") {
  for (int t = 0; t < 20; ++t) {
    const QMat v = random_matrix(3, 1), w = random_matrix(3, 1);
    CHECK((polarisation_inner(v, w, Field::Quaternionic) - inner(v, w)).abs() < 1e-12);
    const QMat vc = random_matrix(3, 1, 2), wc = random_matrix(3, 1, 2);
    CHECK((polarisation_inner(vc, wc, Field::Complex) - inner(vc, wc)).abs() < 1e-12);
    const QMat vr = random_matrix(3, 1, 1), wr = random_matrix(3, 1, 1);
    CHECK((polarisation_inner(vr, wr, Field::Real) - inner(vr, wr)).abs() < 1e-12);
  }
  CHECK_THROWS_AS(polarisation_inner(random_matrix(2, 1), random_matrix(3, 1), Field::Real), ShapeError);
}

TEST_CASE("normalisation") {
  const Frame f = normalised(Frame(random_matrix(3, 4)));
  for (Eigen::Index j = 0; j < 4; ++j) CHECK(f.vec(j).squared_norm() == doctest::Approx(1.0));
  QMat z = random_matrix(2, 2);
  z.set_col(1, QMat(2, 1));
  CHECK_THROWS_AS(normalised(Frame(z)), DomainError);
}
