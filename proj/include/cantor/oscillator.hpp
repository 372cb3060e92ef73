#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/cantor_geometry.hpp"
#include "cantor/pl_function.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Sign assigned to the fixed triangle sitting on each gap.
enum class OrientationPolicy {
  PaperLiteral,       // every gap triangle is lower (negative)
  AlternatingLevels,  // odd levels lower, even levels upper
};

std::string_view to_string(OrientationPolicy policy);
/// Accepts "literal" and "alternating".
OrientationPolicy parse_policy(std::string_view text);

/// Sign of the fixed triangle on a level-k gap.
int gap_sign(unsigned level, OrientationPolicy policy);

struct TriangleParams {
  Rational height;  // h_k = 1/k + 1/(2*3^k)
  Rational slope;   // m_k = 2*3^k*h_k = (2*3^k + k)/k
};

TriangleParams triangle_params(unsigned level);

/// Isosceles triangle of the construction: zero at both base ends, apex
/// sign*height at the base midpoint.
struct TriangleSpec {
  unsigned level;
  Interval base;
  Rational height;
  Rational slope;
  int sign;

  Rational apex_value() const { return sign > 0 ? height : -height; }
  /// Value at x in the closed base.
  Rational value_at(const Rational& x) const;
};

/// Triangles of step n, left to right: a fixed triangle on every gap of
/// level <= n and a transient upper triangle of height h_n on every
/// surviving level-n interval. 2^(n+1) - 1 triangles in total.
std::vector<TriangleSpec> approximant_triangles(unsigned n, OrientationPolicy policy);

/// f_n as a PL function with 2^(n+2) - 1 breakpoints.
PLFunction approximant(unsigned n, OrientationPolicy policy);

struct TriangleCensus {
  std::size_t upper = 0;
  std::size_t lower = 0;
  std::size_t lower_with_top_height = 0;  // lower triangles of height h_n
};

TriangleCensus triangle_census(unsigned n, OrientationPolicy policy);

/// Exact value of the limit function: 0 on the Cantor set, the fixed gap
/// triangle elsewhere. No limiting process involved.
Rational eval_limit(const Rational& x, OrientationPolicy policy);

struct CauchyCertificate {
  unsigned n;
  unsigned m;
  Rational exact;        // sup |f_n - f_m|
  Rational bound;        // h_n + h_m, as stated for the construction
  bool holds;            // exact <= bound
  Rational sharp_bound;  // h_lo + h_(lo+1) for n != m, else 0
  bool sharp_holds;
};

CauchyCertificate cauchy_gap(unsigned n, unsigned m, OrientationPolicy policy);
/// Same certificate from already-built approximants.
CauchyCertificate cauchy_gap(unsigned n, const PLFunction& fn, unsigned m, const PLFunction& fm);

/// V(f_n) = sum_{k<=n} 2^k h_k + 2^(n+1) h_n.
Rational variation_closed_form(unsigned n);

struct WitnessInterval {
  unsigned level;
  Rational a;  // left end of the leftmost level gap
  Rational b;  // its midpoint
};

/// Finite certificate that absolute continuity fails for one (epsilon, delta).
struct WitnessFamily {
  Rational delta;
  Rational delta_bar;  // 1/(2*3^k)
  unsigned k = 1;
  unsigned m = 1;
  OrientationPolicy policy = OrientationPolicy::PaperLiteral;
  std::vector<WitnessInterval> intervals;
  Rational length_sum;
  Rational variation_sum;
};

/// Picks the smallest k with (3/4)*3^-k < delta and the smallest m >= k with
/// sum_{i=k}^m h_i > epsilon; interval i is the left half of the leftmost
/// level-i gap. Requires delta > 0 and epsilon > 0 (PreconditionError).
///
/// Cost grows like k*e^epsilon levels, so large epsilon is slow.
WitnessFamily witness_family(const Rational& delta, const Rational& epsilon, OrientationPolicy policy);

struct WitnessVerdict {
  bool length_sum_matches = false;
  bool length_below_delta = false;
  bool left_ends_vanish = false;
  bool midpoints_at_height = false;
  bool variation_sum_matches = false;
  bool exceeds_harmonic = false;  // variation_sum > sum_{i=k}^m 1/i
  bool exceeds_epsilon = false;

  bool passed() const {
    return length_sum_matches && length_below_delta && left_ends_vanish && midpoints_at_height &&
           variation_sum_matches && exceeds_harmonic && exceeds_epsilon;
  }
};

/// Re-checks a family using eval_limit only. Structural problems (empty,
/// degenerate or overlapping intervals, level tags not k..m, intervals off
/// [0, 1]) throw ValidationError; value mismatches show up in the verdict.
WitnessVerdict check_witness(const WitnessFamily& w, const Rational& epsilon, OrientationPolicy policy);

inline bool verify_witness(const WitnessFamily& w, const Rational& epsilon, OrientationPolicy policy) {
  return check_witness(w, epsilon, policy).passed();
}

struct SignedPoint {
  Rational x;
  Rational value;
  GapAddress gap;
};

struct RadiusFinding {
  unsigned exponent;  // radius = 3^-exponent
  Rational radius;
  std::optional<SignedPoint> negative;
  std::optional<SignedPoint> positive;
};

struct CutReport {
  Rational x;
  unsigned depth;
  OrientationPolicy policy;
  std::vector<RadiusFinding> findings;
  /// False under PaperLiteral: every gap triangle is lower, so f <= 0 on [0, 1].
  bool positive_values_exist;
  /// Both signs found at every radius.
  bool cuts_at_every_radius;
};

/// Searches gaps up to level j+2 meeting (x - 3^-j, x + 3^-j) for points of
/// each sign, j = 1..depth. x must be a Cantor point (PreconditionError).
CutReport verify_cut(const Rational& x, unsigned depth, OrientationPolicy policy);

struct MidpointScan {
  std::size_t negative = 0;
  std::size_t positive = 0;
  std::size_t zero = 0;
};

/// Signs of eval_limit at every gap midpoint up to max_level.
MidpointScan scan_gap_midpoints(unsigned max_level, OrientationPolicy policy);

}  // namespace cantor
