#pragma once

#include <stdexcept>
#include <string>

namespace slicecalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// algebra
struct ZeroDivisor : Error { using Error::Error; };
struct BadFrame : Error { using Error::Error; };

// series / rationals
struct PoleAtPoint : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };
struct RealPoint : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };

// geometry
struct NotContactPoint : Error { using Error::Error; };
struct NonQuaternionic : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct ZeroAtPoint : Error { using Error::Error; };
struct ZeroOfSymmetrization : Error { using Error::Error; };

// zeros
struct ZeroOnContour : Error { using Error::Error; };
struct NonIntegerCount : Error { using Error::Error; };
struct IdenticallyZero : Error { using Error::Error; };

// cli
struct UnknownSuite : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace slicecalc
