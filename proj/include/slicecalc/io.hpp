#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "slicecalc/geometry.hpp"
#include "slicecalc/series.hpp"
#include "slicecalc/zeros.hpp"

namespace slicecalc {

using Json = nlohmann::ordered_json;

// Octonion <-> JSON array of 8 numbers, basis order [1, e1, ..., e7].
Json to_json(const Octonion& w);
Octonion octonion_from_json(const Json& j);  // ParseError

// SliceSeries <-> {"degree": N, "coeffs": [[8 reals], ...]}.
Json to_json(const SliceSeries& f);
SliceSeries series_from_json(const Json& j);

// RegularRational <-> {"num": <series>, "den": [reals]}.
Json to_json(const RegularRational& f);
RegularRational rational_from_json(const Json& j);

Json to_json(const BoundaryReport& r);
Json to_json(const DiameterEstimate& e);
Json to_json(const ContourSpec& s);
Json to_json(const CountResult& r);

using AnyFunction = std::variant<SliceSeries, RegularRational>;

AnyFunction function_from_json(const Json& j);
AnyFunction load_function(const std::string& path);  // ParseError
void save_json(const std::string& path, const Json& j);

RegularRational as_rational(const AnyFunction& f);

}  // namespace slicecalc
