#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicecalc/geometry.hpp"
#include "slicecalc/io.hpp"

namespace slicecalc {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int degree = 64;
  int samples = 1000;
  double tol_alg = 1e-12;
  double tol_series = 1e-8;
  double tol_sample = 1e-2;
};

struct CaseResult {
  std::string name;
  bool pass = false;
  double margin = 0.0;  // signed; negative means violation
  std::string details;
};

struct Report {
  std::string suite;
  std::vector<CaseResult> cases;
  bool pass = false;
  double runtime_ms = 0.0;
};

// name in {algebra, series, schwarz, quaternion, diameters, zeros, growth,
// all}; throws UnknownSuite otherwise.  Deterministic for a fixed config.
Report run_suite(const std::string& name, const SuiteConfig& config);

const std::vector<std::string>& suite_names();

// JSON form; timing is left out so identical configs give identical bytes.
Json report_to_json(const Report& report);
std::string format_report_table(const Report& report);

// --- constructed test maps ---------------------------------------------------

// Self-map of the ball with a certified contact point: products of w^n, one
// Blaschke factor with zero in a slice plane, and a unit constant, so
// |f(xi)| = 1 holds by construction rather than by rejection.
struct ContactMap {
  RegularRational f;
  Octonion xi;
};

ContactMap sample_contact_self_map(Rng& rng, bool quaternionic);

// Extremal family of the sharp quaternionic boundary estimate, pinned by
// f(0) = f0 and f(xi) = fxi on the boundary.
RegularRational make_sharp_extremal(double a, const Octonion& f0,
                                    const Octonion& fxi, const Octonion& xi);

// (q(d-1) - xi(d+1))^{-*} * (xi(d-1) - q(d+1)) f(xi), the inner-estimate
// equality case.
RegularRational make_minda_extremal(double delta, const Octonion& xi,
                                    const Octonion& fxi);

}  // namespace slicecalc
