#include "slicecalc/io.hpp"

#include <fstream>

#include "slicecalc/errors.hpp"

namespace slicecalc {

namespace {

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number in ") + what);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string("non-finite value in ") + what);
  return v;
}

}  // namespace

Json to_json(const Octonion& w) {
  Json j = Json::array();
  for (int k = 0; k < 8; ++k) j.push_back(w[k]);
  return j;
}

Octonion octonion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8)
    throw ParseError("octonion must be an array of 8 numbers");
  Octonion w;
  for (int k = 0; k < 8; ++k) w[k] = finite_number(j[k], "octonion");
  return w;
}

Json to_json(const SliceSeries& f) {
  Json j;
  j["degree"] = f.degree();
  Json coeffs = Json::array();
  for (const Octonion& a : f.coeffs()) coeffs.push_back(to_json(a));
  j["coeffs"] = coeffs;
  return j;
}

SliceSeries series_from_json(const Json& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
    throw ParseError("series needs a non-empty coeffs array");
  std::vector<Octonion> coeffs;
  for (const Json& c : j["coeffs"]) coeffs.push_back(octonion_from_json(c));
  if (j.contains("degree") &&
      j["degree"].get<int>() != static_cast<int>(coeffs.size()) - 1)
    throw ParseError("degree does not match coefficient count");
  return SliceSeries(std::move(coeffs));
}

Json to_json(const RegularRational& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = f.den();
  return j;
}

RegularRational rational_from_json(const Json& j) {
  if (!j.contains("num") || !j.contains("den"))
    throw ParseError("rational needs num and den");
  if (!j["den"].is_array() || j["den"].empty())
    throw ParseError("den must be a non-empty array of reals");
  std::vector<double> den;
  for (const Json& c : j["den"]) den.push_back(finite_number(c, "den"));
  return RegularRational(series_from_json(j["num"]), std::move(den));
}

Json to_json(const BoundaryReport& r) {
  Json j;
  j["delta"] = r.delta;
  j["lower_bound_eq11"] = r.lower_bound_eq11;
  j["sharp_bound"] = r.sharp_bound;
  j["osserman_bound"] = r.osserman_bound;
  j["fixed_point_bound"] = r.fixed_point_bound;
  j["part_ii_bound"] = r.part_ii_bound;
  j["vanishing_order"] = r.vanishing_order;
  j["extremal_monomial"] = r.extremal_monomial;
  j["imag_residual"] = r.imag_residual;
  j["fd_crosscheck"] = r.fd_crosscheck;
  j["raw"] = to_json(r.raw);
  return j;
}

Json to_json(const DiameterEstimate& e) {
  Json j;
  switch (e.kind) {
    case DiameterEstimate::Kind::kRegular: j["kind"] = "regular"; break;
    case DiameterEstimate::Kind::kSlice: j["kind"] = "slice"; break;
    case DiameterEstimate::Kind::kEuclidean: j["kind"] = "euclidean"; break;
  }
  j["r"] = e.r;
  j["value"] = e.value;
  j["n_samples"] = e.n_samples;
  return j;
}

Json to_json(const ContourSpec& s) {
  Json j;
  j["x0"] = s.x0;
  j["y0"] = s.y0;
  j["delta"] = s.delta;
  j["slice"] = to_json(s.i.value());
  j["nodes"] = s.nodes;
  return j;
}

Json to_json(const CountResult& r) {
  Json j;
  j["raw"] = Json::array({r.raw.real(), r.raw.imag()});
  j["count"] = r.count;
  j["guard"] = r.guard;
  j["slice_deviation"] = r.slice_deviation;
  return j;
}

AnyFunction function_from_json(const Json& j) {
  if (j.contains("num")) return rational_from_json(j);
  return series_from_json(j);
}

AnyFunction load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return function_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad function file: ") + e.what());
  }
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

RegularRational as_rational(const AnyFunction& f) {
  if (std::holds_alternative<RegularRational>(f))
    return std::get<RegularRational>(f);
  return RegularRational(std::get<SliceSeries>(f));
}

}  // namespace slicecalc
