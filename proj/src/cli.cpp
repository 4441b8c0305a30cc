#include "qframes/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "qframes/catalog.hpp"
#include "qframes/embed.hpp"
#include "qframes/equiv.hpp"
#include "qframes/frames.hpp"
#include "qframes/io.hpp"
#include "qframes/lines.hpp"

namespace qframes::cli {

namespace {

using Report = nlohmann::ordered_json;

void print_flat(const Report& r, const std::string& prefix, std::ostream& out) {
  for (auto it = r.begin(); it != r.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      print_flat(*it, key, out);
    } else if (it->is_string()) {
      out << key << ": " << it->get<std::string>() << '\n';
    } else {
      out << key << ": " << it->dump() << '\n';
    }
  }
}

void emit(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << r.dump(2) << '\n';
  } else {
    print_flat(r, "", out);
  }
}

Report one_based(const std::vector<Eigen::Index>& v) {
  Report a = Report::array();
  for (auto x : v) a.push_back(x + 1);
  return a;
}

Report quat_json(const Quatd& q) { return Report::array({q.w, q.x, q.y, q.z}); }

Report tightness_json(const TightnessReport& t) {
  return {{"frame_bound", t.frame_bound},
          {"variational_defect", t.variational_defect},
          {"operator_defect", t.operator_defect},
          {"gramian_projection_defect", t.gramian_projection_defect},
          {"is_tight", t.is_tight}};
}

Report angle_json(const AngleReport& a) {
  Report r = {{"mean_lambda", a.mean_lambda},
              {"max_deviation", a.max_deviation},
              {"is_equiangular", a.is_equiangular},
              {"theta_degrees", a.theta_degrees}};
  r["common_lambda"] = a.common_lambda ? Report(*a.common_lambda) : Report(nullptr);
  return r;
}

bool all_unit(const Frame& f) {
  for (Eigen::Index j = 0; j < f.size(); ++j)
    if (std::abs(frobenius_norm(f.vec(j)) - 1.0) >= f.tol.eps) return false;
  return true;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, double> out;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--param", "expected key=value, got '" + s + "'");
    try {
      out[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--param", "value of '" + s + "' is not a number");
    }
  }
  return out;
}

struct Options {
  bool json = false;
  double eps = 0.0;  // 0: not given on the command line

  std::string input;
  std::string output;

  std::string name;
  std::vector<std::string> params;

  bool want_tight = false;
  bool want_equiangular = false;
  bool want_field = false;

  long dim = 0;
  std::string field = "H";

  std::string to;
  bool descent_tight = false;
  bool raw = false;

  int max_m = 6;
  bool certify = false;
  int n = 6;
};

Tolerance resolve_tolerance(const Options& o) {
  if (o.eps > 0.0) return Tolerance(o.eps);
  if (const char* env = std::getenv("QFRAMES_EPS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw CLI::ValidationError("QFRAMES_EPS", "must be a positive number");
    return Tolerance(v);
  }
  return Tolerance();
}

int cmd_construct(const Options& o, std::ostream& out) {
  const Frame f = catalog::by_name(o.name, parse_params(o.params));
  save_qmat(o.output, f.synthesis);
  emit(Report{{"name", o.name}, {"dim", f.dim()}, {"size", f.size()}, {"output", o.output}}, o.json, out);
  return kPass;
}

int cmd_verify(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Frame f(load_qmat(o.input), tol);
  const bool none = !o.want_tight && !o.want_equiangular && !o.want_field;
  bool pass = true;
  Report r = {{"dim", f.dim()}, {"size", f.size()}};
  if (o.want_tight || none) {
    const auto t = tightness(f);
    r["tightness"] = tightness_json(t);
    if (o.want_tight) pass = pass && t.is_tight;
  }
  if (o.want_equiangular || (none && all_unit(f))) {
    if (all_unit(f)) {
      const auto a = angle_report(f);
      r["angles"] = angle_json(a);
      if (o.want_equiangular) pass = pass && a.is_equiangular;
    } else {
      r["angles"] = {{"error", "columns are not unit vectors"}};
      pass = false;
    }
  }
  if (o.want_field || none) r["field"] = to_string(classify_field(f));
  r["pass"] = pass;
  emit(r, o.json, out);
  return pass ? kPass : kCertificateFailure;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const Field field = parse_field(o.field);
  Report r = {{"dim", o.dim}, {"field", to_string(field)}};
  if (o.dim > 1) {
    r["max_lines"] = max_lines(o.dim, field);
    r["max_angle"] = max_angle(o.dim, field);
  }
  const auto range = etf_size_range(o.dim, field);
  r["etf_n_min"] = range.n_min;
  r["etf_n_max"] = range.n_max;
  Report table = Report::array();
  for (long n = o.dim + 1; n <= std::max(range.n_max, o.dim + 1); ++n) {
    table.push_back({{"n", n}, {"welch_angle", welch_angle(n, o.dim)}, {"etf_admissible", range.admits(n)}});
  }
  r["welch"] = std::move(table);
  emit(r, o.json, out);
  return kPass;
}

int cmd_complement(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Frame f(load_qmat(o.input), tol);
  Frame c = complement_synthesis(f);
  const bool unit_input = all_unit(f);
  if (unit_input && !o.raw) c = normalised(c);
  save_qmat(o.output, c.synthesis);
  Report r = {{"dim", c.dim()}, {"size", c.size()}, {"normalised", unit_input && !o.raw},
              {"tightness", tightness_json(tightness(c))}, {"output", o.output}};
  emit(r, o.json, out);
  return kPass;
}

int cmd_embed(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Frame f(load_qmat(o.input), tol);
  Report r = {{"to", o.to}};
  QMat image;
  if (o.to == "real") {
    if (o.descent_tight) {
      const auto d = descends_to_real(f);
      r["descent"] = {{"sum_squares", d.sum_squares}, {"re_norm", d.re_norm}, {"im_norm", d.im_norm}, {"descends", d.descends}};
      if (!d.descends) {
        r["pass"] = false;
        emit(r, o.json, out);
        return kCertificateFailure;
      }
    }
    image = cmat_to_real(f.synthesis, tol).block(0, 0, 2 * f.dim(), f.size());
  } else if (o.to == "complex") {
    if (o.descent_tight) {
      const auto d = descends_to_complex(f);
      r["descent"] = {{"co1_sq", d.co1_sq}, {"co2_sq", d.co2_sq},
                      {"split_operator_defect", d.split_operator_defect},
                      {"image_gramian_defect", d.image_gramian_defect}, {"descends", d.descends}};
      if (!d.descends) {
        r["pass"] = false;
        emit(r, o.json, out);
        return kCertificateFailure;
      }
    }
    image = qmat_to_complex(f.synthesis).block(0, 0, 2 * f.dim(), f.size());
  } else {
    throw CLI::ValidationError("--to", "must be real or complex");
  }
  save_qmat(o.output, image);
  r["dim"] = image.rows();
  r["size"] = image.cols();
  r["output"] = o.output;
  r["pass"] = true;
  emit(r, o.json, out);
  return kPass;
}

int cmd_mproducts(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Frame f(load_qmat(o.input), tol);
  Report basis = Report::array();
  for (const auto& c : cycle_basis(frame_graph(f))) {
    const auto p = m_product(f, c);
    basis.push_back({{"cycle", one_based(c)}, {"value", quat_json(p.value)}, {"re", p.reduced.re}, {"abs", p.reduced.abs}});
  }
  Report spectrum = Report::object();
  for (const auto& [m, classes] : product_spectrum(f, o.max_m)) {
    Report list = Report::array();
    for (const auto& pc : classes) list.push_back({{"re", pc.value.re}, {"abs", pc.value.abs}, {"count", pc.count}});
    spectrum[std::to_string(m)] = std::move(list);
  }
  emit(Report{{"size", f.size()}, {"cycle_basis", std::move(basis)}, {"spectrum", std::move(spectrum)}}, o.json, out);
  return kPass;
}

int cmd_symmetry(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Frame f(load_qmat(o.input), tol);
  SearchOptions so;
  so.max_m = o.max_m;
  Report r;
  bool pass = true;
  if (!o.certify) {
    const auto perms = symmetry_candidates(f, so);
    r["permutation_order"] = perms.size();
    r["all_even"] = std::all_of(perms.begin(), perms.end(), is_even);
  } else {
    const auto rep = projective_symmetry_group(f, so);
    r["permutation_order"] = rep.permutations.size();
    r["all_even"] = std::all_of(rep.permutations.begin(), rep.permutations.end(), is_even);
    r["certified"] = rep.certified;
    r["unitary_order"] = rep.unitary_order;
    r["reflections"] = rep.reflections;
    Report orders = Report::object();
    for (const auto& [ord, count] : rep.reflection_orders) orders[std::to_string(ord)] = count;
    r["reflection_orders"] = std::move(orders);
    r["max_defect"] = rep.max_defect;
    Report gens = Report::array();
    for (const auto& g : rep.generators) gens.push_back({{"sigma", one_based(g.sigma)}, {"defect", g.defect}});
    r["generators"] = std::move(gens);
    pass = rep.certified == rep.permutations.size();
    r["pass"] = pass;
  }
  emit(r, o.json, out);
  return pass ? kPass : kCertificateFailure;
}

int cmd_hopf(const Options& o, std::ostream& out) {
  const Frame f = hopf_lines(o.n);
  save_qmat(o.output, f.synthesis);
  emit(Report{{"n", o.n}, {"lambda", angle_report(f).mean_lambda}, {"field", to_string(classify_field(f))},
              {"output", o.output}},
       o.json, out);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight frames and equiangular lines over the quaternions", "qframes"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output")->configurable(false);
  app.add_option("--eps", o.eps, "absolute tolerance (default 1e-9, or QFRAMES_EPS)")->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "write a catalog frame");
  construct->add_option("name", o.name, "catalog entry")->required();
  construct->add_option("--param", o.params, "parameter key=value")->take_all();
  construct->add_option("-o,--output", o.output, "output file")->required();

  auto* verify = app.add_subcommand("verify", "check tightness, equiangularity and field");
  verify->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  verify->add_flag("--tight", o.want_tight);
  verify->add_flag("--equiangular", o.want_equiangular);
  verify->add_flag("--field", o.want_field);

  auto* bounds = app.add_subcommand("bounds", "line-count bounds and Welch angles");
  bounds->add_option("--dim", o.dim)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--field", o.field)->check(CLI::IsMember({"R", "C", "H"}));

  auto* complement = app.add_subcommand("complement", "complementary tight frame");
  complement->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  complement->add_option("-o,--output", o.output)->required();
  complement->add_flag("--raw", o.raw, "do not normalise the complement of a unit-norm frame");

  auto* embed = app.add_subcommand("embed", "map columns to R^{2d} or C^{2d}");
  embed->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  embed->add_option("--to", o.to)->required()->check(CLI::IsMember({"real", "complex"}));
  embed->add_flag("--tight", o.descent_tight, "refuse unless the image is a tight frame");
  embed->add_option("-o,--output", o.output)->required();

  auto* mproducts = app.add_subcommand("mproducts", "reduced m-products");
  mproducts->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  mproducts->add_option("--max-m", o.max_m)->check(CLI::Range(1, 12));

  auto* symmetry = app.add_subcommand("symmetry", "projective symmetry group");
  symmetry->add_option("input", o.input)->required()->check(CLI::ExistingFile);
  symmetry->add_flag("--certify", o.certify, "recover unitaries and close them");
  symmetry->add_option("--max-m", o.max_m)->check(CLI::Range(1, 12));

  auto* hopf_cmd = app.add_subcommand("hopf", "tight equiangular lines in H^2 via the Hopf map");
  hopf_cmd->add_option("--n", o.n)->required()->check(CLI::Range(3, 6));
  hopf_cmd->add_option("-o,--output", o.output)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const Tolerance tol = resolve_tolerance(o);
    if (*construct) return cmd_construct(o, out);
    if (*verify) return cmd_verify(o, tol, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*complement) return cmd_complement(o, tol, out);
    if (*embed) return cmd_embed(o, tol, out);
    if (*mproducts) return cmd_mproducts(o, tol, out);
    if (*symmetry) return cmd_symmetry(o, tol, out);
    if (*hopf_cmd) return cmd_hopf(o, out);
  } catch (const CertificateError& e) {
    err << "certificate failure: " << e.what() << '\n';
    return kCertificateFailure;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qframes::cli
