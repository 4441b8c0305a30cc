#include "qframes/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qframes {

using nlohmann::json;

std::string field_tag(const QMat& m) {
  const auto zero = [&](int p) { return m.part(p).size() == 0 || m.part(p).cwiseAbs().maxCoeff() == 0.0; };
  if (zero(1) && zero(2) && zero(3)) return "R";
  if (zero(2) && zero(3)) return "C";
  return "H";
}

std::string to_json_string(const QMat& m, int indent) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto q = m(i, j);
      entries.push_back({q.w, q.x, q.y, q.z});
    }
  const json doc = {{"version", 1},
                    {"field", field_tag(m)},
                    {"rows", m.rows()},
                    {"cols", m.cols()},
                    {"entries", std::move(entries)}};
  return doc.dump(indent);
}

QMat from_json_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("parse error: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw FormatError("unsupported version");
    const auto tag = doc.at("field").get<std::string>();
    if (tag != "R" && tag != "C" && tag != "H") throw FormatError("field must be R, C or H");
    const auto rows = doc.at("rows").get<long long>();
    const auto cols = doc.at("cols").get<long long>();
    if (rows < 1 || cols < 1) throw ShapeError("rows and cols must be positive");
    const auto& entries = doc.at("entries");
    if (!entries.is_array() || static_cast<long long>(entries.size()) != rows * cols) {
      throw ShapeError("entries length differs from rows * cols");
    }
    QMat m(rows, cols);
    for (long long t = 0; t < rows * cols; ++t) {
      const auto& e = entries[static_cast<std::size_t>(t)];
      if (!e.is_array() || e.size() != 4) throw ShapeError("each entry must be a 4-array [w, x, y, z]");
      m.set(t / cols, t % cols, Quatd(e[0].get<double>(), e[1].get<double>(), e[2].get<double>(), e[3].get<double>()));
    }
    const auto support = field_tag(m);
    if ((tag == "R" && support != "R") || (tag == "C" && support == "H")) {
      throw DomainError("entries are not supported on the declared field " + tag);
    }
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

void save_qmat(const std::string& path, const QMat& m) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << to_json_string(m, 1) << '\n';
  if (!out) throw FormatError("failed writing " + path);
}

QMat load_qmat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_string(ss.str());
}

}  // namespace qframes
