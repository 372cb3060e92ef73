#pragma once

#include <json.hpp>

#include <string>

#include "cantor/oscillator.hpp"
#include "cantor/pl_function.hpp"

namespace cantor {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultFloatDigits = 12;

/// CSV with header `x_exact,y_exact,x_float,y_float`, one row per breakpoint.
std::string to_csv(const PLFunction& f, int float_digits = kDefaultFloatDigits);
/// Reads back the exact columns of to_csv output.
PLFunction parse_breakpoint_csv(const std::string& text);

Json to_json(const PLFunction& f, int float_digits = kDefaultFloatDigits);

/// 1000x600 plot of [0,1]x[-1.3,1.3] (y up), axes at y = 0 and
/// x in {0, 1/3, 2/3, 1}, one polyline through every breakpoint.
std::string to_svg(const PLFunction& f);

/// Certificate: the family, the challenged epsilon and the re-check verdict.
Json to_json(const WitnessFamily& w, const Rational& epsilon, const WitnessVerdict& verdict,
             int float_digits = kDefaultFloatDigits);

struct ParsedCertificate {
  WitnessFamily family;
  Rational epsilon;
};

/// Rebuilds a family from to_json(WitnessFamily, ...) output using the exact
/// fields only. Throws ValidationError/ParseError on malformed input.
ParsedCertificate witness_from_json(const Json& j);

Json to_json(const CutReport& report, int float_digits = kDefaultFloatDigits);

Json location_to_json(const Rational& x, const CantorLocation& loc);

}  // namespace cantor
