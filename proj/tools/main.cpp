#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slicecalc/errors.hpp"
#include "slicecalc/io.hpp"
#include "slicecalc/suites.hpp"
#include "slicecalc/zeros.hpp"

namespace {

using namespace slicecalc;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

Octonion parse_point(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad point: ") + e.what());
  }
  return octonion_from_json(j);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SLICECALC_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw ParseError("SLICECALC_SEED must be an unsigned integer");
    }
  }
  return 42;
}

struct VerifyOptions {
  SuiteConfig config;
  std::vector<std::string> suites;
  bool json = false;
};

int cmd_verify(const VerifyOptions& opt) {
  const std::vector<std::string> suites =
      opt.suites.empty() ? std::vector<std::string>{"all"} : opt.suites;
  bool pass = true;
  Json out = Json::array();
  for (const std::string& name : suites) {
    const Report report = run_suite(name, opt.config);
    pass = pass && report.pass;
    if (opt.json)
      out.push_back(report_to_json(report));
    else
      std::cout << format_report_table(report);
  }
  if (opt.json)
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return pass ? kExitOk : kExitVerificationFailure;
}

int cmd_eval(const std::string& file, const std::string& point) {
  const AnyFunction f = load_function(file);
  const Octonion w = parse_point(point);
  const Octonion value = std::visit(
      [&](const auto& fn) { return eval(fn, w); }, f);
  std::cout << to_json(value).dump() << "\n";
  return kExitOk;
}

int cmd_star(const std::string& a, const std::string& b,
             const std::string& out) {
  const AnyFunction fa = load_function(a);
  const AnyFunction fb = load_function(b);
  if (std::holds_alternative<SliceSeries>(fa) &&
      std::holds_alternative<SliceSeries>(fb)) {
    save_json(out, to_json(star(std::get<SliceSeries>(fa),
                                std::get<SliceSeries>(fb))));
  } else {
    save_json(out, to_json(star(as_rational(fa), as_rational(fb))));
  }
  return kExitOk;
}

int cmd_recip(const std::string& file, const std::string& out, int degree,
              bool series_form) {
  const AnyFunction f = load_function(file);
  if (series_form) {
    if (!std::holds_alternative<SliceSeries>(f))
      throw ParseError("series-form reciprocal needs a series input");
    save_json(out, to_json(reciprocal_series(std::get<SliceSeries>(f), degree)));
  } else if (std::holds_alternative<SliceSeries>(f)) {
    save_json(out, to_json(reciprocal(std::get<SliceSeries>(f))));
  } else {
    save_json(out, to_json(reciprocal(std::get<RegularRational>(f))));
  }
  return kExitOk;
}

struct ConstructOptions {
  std::string family;
  std::string out;
  double a = 0.0;
  double theta = 0.0;
  int n = 1;
  std::string xi = "[1,0,0,0,0,0,0,0]";
  std::string u = "[0,0,0,0,0,0,0,0]";
  std::string v = "[1,0,0,0,0,0,0,0]";
  std::string i = "[0,1,0,0,0,0,0,0]";
  std::string j = "[0,0,1,0,0,0,0,0]";
};

int cmd_construct(const ConstructOptions& opt) {
  RegularRational f;
  if (opt.family == "extremal") {
    f = make_extremal(opt.a, parse_point(opt.xi));
  } else if (opt.family == "mobius") {
    f = make_mobius(parse_point(opt.u), parse_point(opt.v));
  } else if (opt.family == "koebe") {
    f = make_koebe(UnitImaginary(parse_point(opt.i)), opt.theta);
  } else if (opt.family == "monomial_rotation") {
    f = make_monomial_rotation(opt.n, parse_point(opt.u));
  } else if (opt.family == "example_3_3") {
    f = make_example_3_3(UnitImaginary(parse_point(opt.i)),
                         UnitImaginary(parse_point(opt.j)));
  } else {
    throw BadParameter("unknown family: " + opt.family);
  }
  save_json(opt.out, to_json(f));
  return kExitOk;
}

struct ZerosOptions {
  std::string file;
  double x0 = 0.0, y0 = 0.0, delta = 0.1;
  std::string slice = "[0,1,0,0,0,0,0,0]";
  int nodes = 4096;
};

int cmd_zeros(const ZerosOptions& opt) {
  const AnyFunction f = load_function(opt.file);
  const ContourSpec spec(opt.x0, opt.y0, opt.delta,
                         UnitImaginary(parse_point(opt.slice)), opt.nodes);
  const CountResult r = contour_count(as_rational(f), spec);
  Json j;
  j["spec"] = to_json(spec);
  j["result"] = to_json(r);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_report(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
  if (!j.contains("suite") || !j.contains("cases") || !j.contains("pass"))
    throw ParseError("not a verification report");
  Report rep;
  rep.suite = j["suite"].get<std::string>();
  rep.pass = j["pass"].get<bool>();
  for (const Json& c : j["cases"])
    rep.cases.push_back({c.at("name").get<std::string>(),
                         c.at("pass").get<bool>(),
                         c.at("margin").get<double>(),
                         c.value("details", std::string{})});
  std::cout << format_report_table(rep);
  return rep.pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice-regular function calculus and verification"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  ConstructOptions copt;
  ZerosOptions zopt;
  std::string eval_file, eval_point;
  std::string star_a, star_b, star_out;
  std::string recip_file, recip_out, report_file;
  int recip_degree = 64;
  bool recip_series_form = false;

  try {
    vopt.config.seed = default_seed();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", vopt.suites,
                     "suite name(s), repeatable; default 'all'");
  verify->add_option("--seed", vopt.config.seed, "master seed");
  verify->add_option("--degree", vopt.config.degree, "series truncation degree");
  verify->add_option("--samples", vopt.config.samples, "per-check sample count");
  verify->add_option("--tol-alg", vopt.config.tol_alg, "algebra tolerance");
  verify->add_option("--tol-series", vopt.config.tol_series, "series tolerance");
  verify->add_option("--tol-sample", vopt.config.tol_sample, "sampling tolerance");
  verify->add_flag("--json", vopt.json, "machine-readable report");

  auto* ev = app.add_subcommand("eval", "evaluate a function file at a point");
  ev->add_option("file", eval_file)->required();
  ev->add_option("--point", eval_point, "JSON array of 8 reals")->required();

  auto* st = app.add_subcommand("star", "*-product of two function files");
  st->add_option("a", star_a)->required();
  st->add_option("b", star_b)->required();
  st->add_option("--out", star_out)->required();

  auto* rc = app.add_subcommand("recip", "regular reciprocal");
  rc->add_option("file", recip_file)->required();
  rc->add_option("--out", recip_out)->required();
  rc->add_option("--degree", recip_degree, "output degree for --series");
  rc->add_flag("--series", recip_series_form, "Taylor form instead of rational");

  auto* cs = app.add_subcommand("construct", "build a named rational family");
  cs->add_option("family", copt.family,
                 "extremal | mobius | koebe | monomial_rotation | example_3_3")
      ->required();
  cs->add_option("--out", copt.out)->required();
  cs->add_option("--a", copt.a, "extremal parameter in [-1,1)");
  cs->add_option("--theta", copt.theta, "koebe rotation angle");
  cs->add_option("--n", copt.n, "monomial degree");
  cs->add_option("--xi", copt.xi, "boundary point (8 reals)");
  cs->add_option("--u", copt.u, "mobius zero / monomial rotation unit");
  cs->add_option("--v", copt.v, "mobius unit constant");
  cs->add_option("--slice-i", copt.i, "imaginary unit I");
  cs->add_option("--slice-j", copt.j, "imaginary unit J");

  auto* zr = app.add_subcommand("zeros", "argument-principle zero-sphere count");
  zr->add_option("file", zopt.file)->required();
  zr->add_option("--x0", zopt.x0)->required();
  zr->add_option("--y0", zopt.y0)->required();
  zr->add_option("--delta", zopt.delta)->required();
  zr->add_option("--slice", zopt.slice, "integration slice (8 reals)");
  zr->add_option("--nodes", zopt.nodes, "trapezoid nodes (>= 64)");

  auto* rp = app.add_subcommand("report", "pretty-print a JSON report");
  rp->add_option("file", report_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(vopt);
    if (ev->parsed()) return cmd_eval(eval_file, eval_point);
    if (st->parsed()) return cmd_star(star_a, star_b, star_out);
    if (rc->parsed())
      return cmd_recip(recip_file, recip_out, recip_degree, recip_series_form);
    if (cs->parsed()) return cmd_construct(copt);
    if (zr->parsed()) return cmd_zeros(zopt);
    if (rp->parsed()) return cmd_report(report_file);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
