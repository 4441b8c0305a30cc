#include "qframes/catalog.hpp"

#include <cmath>

#include "qframes/lines.hpp"

namespace qframes::catalog {

namespace {

const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);
const double s5 = std::sqrt(5.0);
const double s6 = std::sqrt(6.0);

QMat from_columns(std::initializer_list<std::initializer_list<Quatd>> cols) {
  std::vector<QMat> blocks;
  for (const auto& c : cols) blocks.push_back(QMat::column(c));
  return QMat::hstack(blocks);
}

}  // namespace

Frame onb(int d) {
  if (d < 1) throw DomainError("onb: need d >= 1");
  return Frame(QMat::Identity(d));
}

Frame simplex(int d) {
  if (d < 1) throw DomainError("simplex: need d >= 1");
  // Helmert rows 1..d span the complement of (1,...,1) in R^{d+1}
  QMat::Real h = QMat::Real::Zero(d, d + 1);
  for (int k = 1; k <= d; ++k) {
    const double c = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    for (int j = 0; j < k; ++j) h(k - 1, j) = c;
    h(k - 1, k) = -k * c;
  }
  h *= std::sqrt(static_cast<double>(d + 1) / static_cast<double>(d));
  return Frame(QMat::from_real(h));
}

Frame hoggar4() {
  const Quatd i = Quatd::i(), j = Quatd::j(), k = Quatd::k();
  const double c3 = 1.0 / (2.0 * s3);
  return Frame(from_columns({
      {Quatd(1) / s2, j / s2},
      {(Quatd(1) - i * s2) / s6, (j - k * s2) / s6},
      {(Quatd(s2 + s3) + i) * c3, (j * (s2 - s3) + k) * c3},
      {(Quatd(s2 - s3) + i) * c3, (j * (s2 + s3) + k) * c3},
  }));
}

QMat wh_fiducial() {
  const double a = std::sqrt(3.0 + s3) / s6;
  const double b = std::sqrt(3.0 - s3) / (s2 * s6);
  return QMat::column({Quatd(a), Quatd(b, b)});
}

Frame wh_sic2() {
  const QMat v = wh_fiducial();
  const QMat s{{Quatd(0), Quatd(1)}, {Quatd(1), Quatd(0)}};
  const QMat omega{{Quatd(1), Quatd(0)}, {Quatd(0), Quatd(-1)}};
  const QMat is = Quatd::i() * s;
  return Frame(QMat::hstack({v, s * v, omega * v, is * (omega * v)}));
}

QMat hoggar_to_sic_unitary() {
  const Quatd z1(std::sqrt(3.0 + s3) / (2.0 * s3), std::sqrt(3.0 - s3) / (2.0 * s3));
  const Quatd z2(std::sqrt(3.0 + s6) / (2.0 * s3), -std::sqrt(3.0 - s6) / (2.0 * s3));
  return QMat{{z1, -(Quatd::j() * z1)}, {z2, -(Quatd::k() * z2)}};
}

Frame five_h2(double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("five_h2: t must lie in (0, 1)");
  const double u = std::sqrt(1.0 - t * t);
  return Frame(from_columns({
      {Quatd(t), Quatd(u)},
      {Quatd(t), Quatd::i() * u},
      {Quatd(t), Quatd::j() * u},
      {Quatd(t), Quatd::k() * u},
      {Quatd(1), Quatd(0)},
  }));
}

Frame b20_five_h2() {
  const double r = s3 / (2.0 * s2);
  const double c = -s5 / (6.0 * s2);
  return Frame(from_columns({
      {Quatd(1), Quatd(0)},
      {Quatd(r), Quatd(s5 / (2.0 * s2))},
      {Quatd(r), Quatd(c, s5 / 3.0)},
      {Quatd(r), Quatd(c, -s5 / 6.0, s5 / (2.0 * s3))},
      {Quatd(r), Quatd(c, -s5 / 6.0, -s5 / (2.0 * s3))},
  }));
}

Frame five_h3() {
  const double x = -1.0 / s6;
  const double c = -s5 / (3.0 * s6);
  const double e = s5 / (6.0 * s3);
  return Frame(from_columns({
      {Quatd(1), Quatd(0), Quatd(0)},
      {Quatd(x), Quatd(s5 / s6), Quatd(0)},
      {Quatd(x), Quatd(c, -s5 / (3.0 * s3)), Quatd(s5 / 3.0)},
      {Quatd(x), Quatd(c, e, -s5 / 6.0), Quatd(-s5 / 6.0, 0, 0, s5 / (2.0 * s3))},
      {Quatd(x), Quatd(c, e, s5 / 6.0), Quatd(-s5 / 6.0, 0, 0, -s5 / (2.0 * s3))},
  }));
}

Frame six_h2() {
  const double a = s2 / s5;
  const double c = -s3 / (4.0 * s5);
  // v5 and v6 differ from each other in the sign of the k term
  return Frame(from_columns({
      {Quatd(1), Quatd(0)},
      {Quatd(a), Quatd(s3 / s5)},
      {Quatd(a), Quatd(c, 0.75)},
      {Quatd(a), Quatd(c, -0.25, 1.0 / s2)},
      {Quatd(a), Quatd(c, -0.25, -1.0 / (2.0 * s2), s3 / (2.0 * s2))},
      {Quatd(a), Quatd(c, -0.25, -1.0 / (2.0 * s2), -s3 / (2.0 * s2))},
  }));
}

Frame six_h4() { return normalised(complement_synthesis(six_h2())); }

QMat six_h2_ua() {
  const Quatd p(0, 2.0 / std::sqrt(15.0), -s2 / std::sqrt(15.0), 0);
  const Quatd q(0, s2 / s5, -1.0 / s5, 0);
  return QMat{{p, q}, {q, -p}};
}

QMat six_h2_ub() {
  const double s10 = std::sqrt(10.0);
  const double s30 = std::sqrt(30.0);
  return QMat{
      {Quatd(1.0 / (2.0 * s5), 1.0 / (2.0 * s3), (3.0 - s5) / (2.0 * s30), (s5 + 1.0) / (2.0 * s10)),
       Quatd(s3 / (2.0 * s10), -1.0 / (2.0 * s2), (3.0 + s5) / (4.0 * s5), -s3 / (5.0 + s5))},
      {Quatd(s3 / (2.0 * s10), 1.0 / (2.0 * s2), (3.0 - s5) / (4.0 * s5), s3 / (5.0 - s5)),
       Quatd(-1.0 / (2.0 * s5), 1.0 / (2.0 * s3), -(3.0 * s5 + 5.0) / (10.0 * s6), (s5 - 1.0) / (2.0 * s10))},
  };
}

std::vector<std::string> names() {
  return {"onb", "simplex", "hoggar4", "wh_sic2", "five_h2", "b20_five_h2",
          "five_h3", "six_h2", "six_h4", "hopf"};
}

Frame by_name(const std::string& name, const std::map<std::string, double>& params) {
  const auto param = [&](const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  const auto int_param = [&](const std::string& key, double fallback) {
    const double v = param(key, fallback);
    if (v != std::floor(v)) throw DomainError("parameter " + key + " must be an integer");
    return static_cast<int>(v);
  };
  if (name == "onb") return onb(int_param("d", 2));
  if (name == "simplex") return simplex(int_param("d", 2));
  if (name == "hoggar4") return hoggar4();
  if (name == "wh_sic2") return wh_sic2();
  if (name == "five_h2") return five_h2(param("t", 1.0 / s2));
  if (name == "b20_five_h2") return b20_five_h2();
  if (name == "five_h3") return five_h3();
  if (name == "six_h2") return six_h2();
  if (name == "six_h4") return six_h4();
  if (name == "hopf") return hopf_lines(int_param("n", 6));
  throw DomainError("unknown catalog entry '" + name + "'");
}

}  // namespace qframes::catalog
