#include "cantor/oscillator.hpp"

#include <algorithm>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

void collect_triangles(unsigned level, const Rational& left, unsigned n, OrientationPolicy policy,
                       const std::vector<TriangleParams>& params, std::vector<TriangleSpec>& out) {
  const Rational width = inverse_pow3(level);
  if (level == n) {
    out.push_back({n, Interval(left, left + width), params[n].height, params[n].slope, +1});
    return;
  }
  const Rational third = width / 3;
  const unsigned k = level + 1;
  collect_triangles(k, left, n, policy, params, out);
  out.push_back({k, Interval(left + third, left + third * 2), params[k].height, params[k].slope,
                 gap_sign(k, policy)});
  collect_triangles(k, left + third * 2, n, policy, params, out);
}

// Gaps of level <= max_level meeting the open window (lo, hi), by level then
// left endpoint.
std::vector<std::pair<GapAddress, Interval>> gaps_meeting(const Rational& lo, const Rational& hi,
                                                          unsigned max_level) {
  std::vector<std::pair<GapAddress, Interval>> out;
  auto visit = [&](auto& self, unsigned level, const Integer& index, const Rational& left) -> void {
    const Rational width = inverse_pow3(level);
    if (left + width <= lo || left >= hi || level == max_level) return;
    const Rational third = width / 3;
    const Rational gap_left = left + third;
    const Rational gap_right = left + third * 2;
    if (gap_right > lo && gap_left < hi) {
      out.emplace_back(GapAddress{level + 1, index}, Interval(gap_left, gap_right));
    }
    self(self, level + 1, Integer(2 * index), left);
    self(self, level + 1, Integer(2 * index + 1), gap_right);
  };
  visit(visit, 0, Integer(0), Rational(0));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first.level < b.first.level; });
  return out;
}

}  // namespace

std::string_view to_string(OrientationPolicy policy) {
  return policy == OrientationPolicy::PaperLiteral ? "literal" : "alternating";
}

OrientationPolicy parse_policy(std::string_view text) {
  if (text == "literal") return OrientationPolicy::PaperLiteral;
  if (text == "alternating") return OrientationPolicy::AlternatingLevels;
  throw ParseError("unknown policy '" + std::string(text) + "' (expected literal or alternating)");
}

int gap_sign(unsigned level, OrientationPolicy policy) {
  if (policy == OrientationPolicy::PaperLiteral) return -1;
  return level % 2 == 1 ? -1 : +1;
}

TriangleParams triangle_params(unsigned level) {
  if (level == 0) throw DomainError("triangle level must be >= 1");
  const Integer p3 = pow3(level);
  const Integer k = level;
  return {Rational(Integer(1), k) + Rational(Integer(1), Integer(2 * p3)),
          Rational(Integer(2 * p3 + k), k)};
}

Rational TriangleSpec::value_at(const Rational& x) const {
  if (!base.contains_closed(x)) return Rational(0);
  const Rational v = slope * min(x - base.left(), base.right() - x);
  return sign > 0 ? v : -v;
}

std::vector<TriangleSpec> approximant_triangles(unsigned n, OrientationPolicy policy) {
  if (n == 0) throw DomainError("approximant level must be >= 1");
  std::vector<TriangleParams> params;
  params.reserve(n + 1);
  params.push_back({Rational(0), Rational(0)});
  for (unsigned k = 1; k <= n; ++k) params.push_back(triangle_params(k));
  std::vector<TriangleSpec> out;
  out.reserve((std::size_t{1} << (n + 1)) - 1);
  collect_triangles(0, Rational(0), n, policy, params, out);
  return out;
}

PLFunction approximant(unsigned n, OrientationPolicy policy) {
  const auto triangles = approximant_triangles(n, policy);
  std::vector<Breakpoint> pts;
  pts.reserve(2 * triangles.size() + 1);
  pts.push_back({Rational(0), Rational(0)});
  for (const auto& t : triangles) {
    pts.push_back({t.base.midpoint(), t.apex_value()});
    pts.push_back({t.base.right(), Rational(0)});
  }
  return PLFunction::make(std::move(pts));
}

TriangleCensus triangle_census(unsigned n, OrientationPolicy policy) {
  const Rational top = triangle_params(n).height;
  TriangleCensus census;
  for (const auto& t : approximant_triangles(n, policy)) {
    if (t.sign > 0) {
      ++census.upper;
    } else {
      ++census.lower;
      if (t.height == top) ++census.lower_with_top_height;
    }
  }
  return census;
}

Rational eval_limit(const Rational& x, OrientationPolicy policy) {
  const CantorLocation loc = cantor_membership(x);
  if (in_cantor(loc)) return Rational(0);
  const auto& gap = std::get<InGap>(loc);
  const unsigned k = gap.address.level;
  const Rational v = triangle_params(k).slope * min(gap.offset, inverse_pow3(k) - gap.offset);
  return gap_sign(k, policy) > 0 ? v : -v;
}

CauchyCertificate cauchy_gap(unsigned n, const PLFunction& fn, unsigned m, const PLFunction& fm) {
  CauchyCertificate c{n, m, pl_sup_norm_diff(fn, fm), triangle_params(n).height + triangle_params(m).height,
                      false, Rational(0), false};
  c.holds = c.exact <= c.bound;
  if (n != m) {
    const unsigned lo = std::min(n, m);
    c.sharp_bound = triangle_params(lo).height + triangle_params(lo + 1).height;
  }
  c.sharp_holds = c.exact <= c.sharp_bound;
  return c;
}

CauchyCertificate cauchy_gap(unsigned n, unsigned m, OrientationPolicy policy) {
  return cauchy_gap(n, approximant(n, policy), m, approximant(m, policy));
}

Rational variation_closed_form(unsigned n) {
  if (n == 0) throw DomainError("variation level must be >= 1");
  Rational total(0);
  for (unsigned k = 1; k <= n; ++k) total += Rational(pow2(k), Integer(1)) * triangle_params(k).height;
  return total + Rational(pow2(n + 1), Integer(1)) * triangle_params(n).height;
}

WitnessFamily witness_family(const Rational& delta, const Rational& epsilon, OrientationPolicy policy) {
  if (delta.sign() <= 0) throw PreconditionError("witness_family: delta must be positive");
  if (epsilon.sign() <= 0) throw PreconditionError("witness_family: epsilon must be positive");

  WitnessFamily w;
  w.delta = delta;
  w.policy = policy;
  // Tail of all half-gap lengths from level k on: sum_{i>=k} 3^-i/2 = (3/4)*3^-k.
  const Rational tail_factor(3, 4);
  unsigned k = 1;
  while (tail_factor * inverse_pow3(k) >= delta) ++k;
  w.k = k;
  w.delta_bar = inverse_pow3(k) / 2;

  Rational variation(0);
  for (unsigned i = k;; ++i) {
    const Interval gap = gap_interval({i, 0});
    w.intervals.push_back({i, gap.left(), gap.midpoint()});
    w.length_sum += gap.midpoint() - gap.left();
    variation += triangle_params(i).height;
    if (variation > epsilon) {
      w.m = i;
      break;
    }
  }
  w.variation_sum = variation;
  return w;
}

WitnessVerdict check_witness(const WitnessFamily& w, const Rational& epsilon, OrientationPolicy policy) {
  if (w.intervals.empty()) throw ValidationError("witness family has no intervals");
  if (w.k == 0 || w.m < w.k || w.intervals.size() != w.m - w.k + 1) {
    throw ValidationError("witness levels k..m do not match the interval count");
  }
  if (w.delta_bar != inverse_pow3(w.k) / 2) throw ValidationError("delta_bar is not 1/(2*3^k)");
  for (std::size_t i = 0; i < w.intervals.size(); ++i) {
    const auto& iv = w.intervals[i];
    if (iv.level != w.k + i) throw ValidationError("witness level tags are not k, k+1, ..., m");
    if (!(Rational(0) <= iv.a && iv.a < iv.b && iv.b <= Rational(1))) {
      throw ValidationError("witness interval (" + iv.a.to_string() + ", " + iv.b.to_string() +
                            ") is not a subinterval of [0, 1]");
    }
  }
  std::vector<const WitnessInterval*> sorted;
  for (const auto& iv : w.intervals) sorted.push_back(&iv);
  std::sort(sorted.begin(), sorted.end(), [](const auto* x, const auto* y) { return x->a < y->a; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1]->b > sorted[i]->a) {
      throw ValidationError("witness intervals at levels " + std::to_string(sorted[i - 1]->level) + " and " +
                            std::to_string(sorted[i]->level) + " overlap");
    }
  }

  WitnessVerdict v;
  Rational lengths(0);
  Rational variation(0);
  Rational harmonic(0);
  v.left_ends_vanish = true;
  v.midpoints_at_height = true;
  for (const auto& iv : w.intervals) {
    const Rational fa = eval_limit(iv.a, policy);
    const Rational fb = eval_limit(iv.b, policy);
    lengths += iv.b - iv.a;
    variation += (fb - fa).abs();
    harmonic += Rational(1, iv.level);
    v.left_ends_vanish = v.left_ends_vanish && fa.is_zero();
    v.midpoints_at_height = v.midpoints_at_height && fb.abs() == triangle_params(iv.level).height;
  }
  v.length_sum_matches = lengths == w.length_sum;
  v.length_below_delta = lengths < w.delta;
  v.variation_sum_matches = variation == w.variation_sum;
  v.exceeds_harmonic = variation > harmonic;
  v.exceeds_epsilon = variation > epsilon;
  return v;
}

CutReport verify_cut(const Rational& x, unsigned depth, OrientationPolicy policy) {
  if (depth == 0) throw PreconditionError("verify_cut: depth must be >= 1");
  if (!in_cantor(cantor_membership(x))) {
    throw PreconditionError("verify_cut: " + x.to_string() + " is not in the Cantor set");
  }
  CutReport report{x, depth, policy, {}, policy == OrientationPolicy::AlternatingLevels, true};
  for (unsigned j = 1; j <= depth; ++j) {
    RadiusFinding finding{j, inverse_pow3(j), std::nullopt, std::nullopt};
    const Rational lo = x - finding.radius;
    const Rational hi = x + finding.radius;
    for (const auto& [addr, gap] : gaps_meeting(lo, hi, j + 2)) {
      const Rational point = (max(gap.left(), lo) + min(gap.right(), hi)) / 2;
      const Rational value = eval_limit(point, policy);
      auto& slot = value.sign() < 0 ? finding.negative : finding.positive;
      if (!slot && !value.is_zero()) slot = SignedPoint{point, value, addr};
      if (finding.negative && finding.positive) break;
    }
    report.cuts_at_every_radius = report.cuts_at_every_radius && finding.negative && finding.positive;
    report.findings.push_back(std::move(finding));
  }
  return report;
}

MidpointScan scan_gap_midpoints(unsigned max_level, OrientationPolicy policy) {
  MidpointScan scan;
  for (const auto& [addr, gap] : enumerate_gaps(max_level)) {
    const int s = eval_limit(gap.midpoint(), policy).sign();
    if (s < 0) ++scan.negative;
    else if (s > 0) ++scan.positive;
    else ++scan.zero;
  }
  return scan;
}

}  // namespace cantor
