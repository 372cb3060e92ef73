#include "cantor/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

constexpr OrientationPolicy kPolicies[] = {OrientationPolicy::PaperLiteral,
                                           OrientationPolicy::AlternatingLevels};

// All reduced p/q in [0, 1] with q <= max_den.
std::vector<Rational> farey_points(int max_den) {
  std::vector<Rational> out;
  for (int q = 1; q <= max_den; ++q) {
    for (int p = 0; p <= q; ++p) {
      const Rational r(p, q);
      if (r.denominator() == q) out.push_back(r);
    }
  }
  return out;
}

// Points strictly inside a gap, including its midpoint.
std::vector<Rational> gap_probes(const Interval& gap) {
  const Rational len = gap.length();
  return {gap.left() + len / 4, gap.midpoint(), gap.left() + len * Rational(5, 7),
          gap.left() + len / 1000};
}

SuiteResult geometry_suite(unsigned L) {
  SuiteResult s{"cantor_geometry", 0, {}};
  const auto gaps = enumerate_gaps(L);
  s.expect(gaps.size() == (std::size_t{1} << L) - 1, "gap count is 2^L - 1");

  Rational total(0);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const auto& [addr, iv] = gaps[i];
    s.expect(iv.length() == inverse_pow3(addr.level), "gap " + addr.to_string() + " has length 3^-level");
    s.expect(gap_interval(addr) == iv, "gap_interval agrees with enumerate_gaps at " + addr.to_string());
    if (i > 0) s.expect(gaps[i - 1].second.right() < iv.left(), "gaps sorted and disjoint");
    total += iv.length();
  }
  Rational survive(1);
  for (unsigned k = 0; k < L; ++k) survive *= Rational(2, 3);
  s.expect(total == Rational(1) - survive, "total gap length is 1 - (2/3)^L");

  for (const auto& iv : level_intervals(L)) {
    s.expect(in_cantor(cantor_membership(iv.left())) && in_cantor(cantor_membership(iv.right())),
             "level-L endpoints are Cantor points");
  }

  // Partition: a point is either a Cantor point or in exactly one gap.
  for (const auto& x : farey_points(60)) {
    const auto loc = cantor_membership(x);
    const auto containing = std::count_if(gaps.begin(), gaps.end(),
                                          [&](const auto& g) { return g.second.contains_open(x); });
    if (const auto* gap = std::get_if<InGap>(&loc)) {
      const Interval iv = gap_interval(gap->address);
      s.expect(iv.contains_open(x) && gap->offset == x - iv.left(),
               "InGap(" + gap->address.to_string() + ") contains " + x.to_string());
      s.expect(gap->offset.sign() > 0 && gap->offset < inverse_pow3(gap->address.level),
               "offset strictly inside the gap");
      s.expect(containing == (gap->address.level <= L ? 1 : 0), "partition at " + x.to_string());
    } else {
      s.expect(containing == 0, "Cantor point " + x.to_string() + " lies in no gap");
    }
  }
  return s;
}

SuiteResult pl_suite(unsigned L) {
  SuiteResult s{"pl_function", 0, {}};
  const unsigned top = std::min(L, 8u);
  std::vector<PLFunction> fs;
  for (unsigned n = 1; n <= top; ++n) fs.push_back(approximant(n, OrientationPolicy::AlternatingLevels));

  for (const auto& f : fs) {
    for (const auto& p : f.breakpoints()) s.expect(f(p.x) == p.y, "eval at breakpoint is exact");
    const Rational c(1, 3);
    s.expect(pl_total_variation(f) == pl_total_variation(f, 0, c) + pl_total_variation(f, c, 1),
             "variation is additive at a breakpoint");
    for (const auto& si : pl_sign_changes(f)) {
      s.expect(f(si.interval.midpoint()).sign() == si.sign, "sign interval carries its sign");
    }
  }

  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i; j < fs.size(); ++j) {
      const Rational d = pl_sup_norm_diff(fs[i], fs[j]);
      s.expect(d == pl_sup_norm_diff(fs[j], fs[i]) && d.sign() >= 0, "sup norm symmetric and >= 0");
      s.expect((d.is_zero()) == (i == j), "sup norm zero iff identical");
      Rational sampled(0);
      for (int t = 0; t <= 256; ++t) {
        const Rational x(t, 256);
        sampled = max(sampled, (fs[i](x) - fs[j](x)).abs());
      }
      s.expect(sampled <= d, "sampled maximum never exceeds the sup norm");
      const PLFunction diff = pl_combine(fs[i], fs[j], true);
      Rational on_merged(0);
      for (const auto& p : diff.breakpoints()) on_merged = max(on_merged, p.y.abs());
      s.expect(on_merged == d, "sup norm attained on merged breakpoints");
      const PLFunction sum = pl_combine(fs[i], fs[j]);
      s.expect(pl_total_variation(sum) <= pl_total_variation(fs[i]) + pl_total_variation(fs[j]),
               "variation triangle inequality");
    }
  }
  return s;
}

SuiteResult oscillator_suite(unsigned L, std::vector<Finding>& findings) {
  SuiteResult s{"oscillator", 0, {}};
  std::mt19937_64 rng(20261015);

  s.expect(triangle_params(1).height == Rational(7, 6) && triangle_params(1).slope == Rational(7),
           "level 1 triangle is 7x with height 7/6");
  s.expect(triangle_params(2).height == Rational(5, 9) && triangle_params(2).slope == Rational(10),
           "level 2 triangle is 10x with height 5/9");
  for (unsigned k = 1; k <= 30; ++k) {
    const auto p = triangle_params(k);
    s.expect(p.slope * inverse_pow3(k) / 2 == p.height, "apex of slope m_k over half a gap is h_k");
  }

  std::map<std::pair<int, unsigned>, PLFunction> cache;
  auto f = [&](OrientationPolicy pol, unsigned n) -> const PLFunction& {
    auto key = std::make_pair(static_cast<int>(pol), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, approximant(n, pol)).first;
    return it->second;
  };

  Json violations = Json::array();
  for (auto pol : kPolicies) {
    const auto pname = std::string(to_string(pol));
    for (unsigned n = 1; n <= L; ++n) {
      const auto& fn = f(pol, n);
      s.expect(fn.size() == (std::size_t{1} << (n + 2)) - 1, "approximant breakpoint census");
      s.expect(variation_closed_form(n) == pl_total_variation(fn), "variation closed form matches");
      if (n > 1) s.expect(variation_closed_form(n) > variation_closed_form(n - 1), "variation increases");
      Rational harmonic(0);
      for (unsigned k = 1; k <= n; ++k) harmonic += Rational(pow2(k), Integer(k));
      s.expect(variation_closed_form(n) > harmonic, "variation exceeds sum 2^k/k");

      const auto census = triangle_census(n, pol);
      if (pol == OrientationPolicy::PaperLiteral) {
        const auto signs = pl_sign_changes(fn);
        const auto pos = std::count_if(signs.begin(), signs.end(), [](const auto& si) { return si.sign > 0; });
        s.expect(static_cast<std::size_t>(pos) == (std::size_t{1} << n) &&
                     signs.size() - pos == (std::size_t{1} << n) - 1,
                 "literal sign intervals: 2^n positive, 2^n - 1 negative");
        s.expect(census.upper == (std::size_t{1} << n) && census.lower == (std::size_t{1} << n) - 1 &&
                     census.lower_with_top_height == (std::size_t{1} << (n - 1)),
                 "literal triangle census");
      } else {
        s.expect(census.upper + census.lower == (std::size_t{1} << (n + 1)) - 1, "triangle count");
      }

      // Refinement stability on every gap of level <= n.
      if (n < L) {
        const auto& next = f(pol, n + 1);
        for (const auto& [addr, gap] : enumerate_gaps(n)) {
          for (const auto& x : gap_probes(gap)) {
            const Rational lim = eval_limit(x, pol);
            s.expect(fn(x) == lim && next(x) == lim, "fixed triangles never change (" + pname + ")");
          }
        }
      }

      for (unsigned m = n + 1; m <= L; ++m) {
        const auto c = cauchy_gap(n, fn, m, f(pol, m));
        s.expect(c.sharp_holds, "sharp Cauchy bound h_n + h_(n+1) at (" + std::to_string(n) + "," +
                                    std::to_string(m) + ", " + pname + ")");
        if (m == n + 1) s.expect(c.holds, "stated Cauchy bound on adjacent levels");
        if (!c.holds) {
          violations.push_back({{"policy", pname}, {"n", n}, {"m", m}, {"exact", c.exact.to_string()},
                                {"bound", c.bound.to_string()}, {"sharp_bound", c.sharp_bound.to_string()}});
        }
      }
    }
  }
  if (!violations.empty()) {
    findings.push_back({"cauchy_bound_h_n_plus_h_m",
                        "sup|f_n - f_m| exceeds h_n + h_m for some m >= n + 2; h_n + h_(n+1) holds",
                        std::move(violations)});
  }

  // Zero set, sandwich, policy and mirror symmetry on random gap points.
  for (const auto& iv : level_intervals(L)) {
    for (auto pol : kPolicies) {
      s.expect(eval_limit(iv.left(), pol).is_zero() && eval_limit(iv.right(), pol).is_zero(),
               "limit vanishes on Cantor endpoints");
    }
  }
  const auto gaps = enumerate_gaps(L);
  std::uniform_int_distribution<std::size_t> pick(0, gaps.size() - 1);
  std::uniform_int_distribution<long> numer(1, 999);
  for (int t = 0; t < 400; ++t) {
    const auto& [addr, gap] = gaps[pick(rng)];
    const Rational x = t % 10 == 0 ? gap.midpoint() : gap.left() + gap.length() * Rational(numer(rng), 1000);
    const Rational h = triangle_params(addr.level).height;
    const Rational lit = eval_limit(x, OrientationPolicy::PaperLiteral);
    const Rational alt = eval_limit(x, OrientationPolicy::AlternatingLevels);
    s.expect(!lit.is_zero() && lit.sign() < 0, "literal limit is negative inside gaps");
    s.expect(lit.abs() == alt.abs(), "policies agree in absolute value");
    s.expect(lit.abs() <= h && ((lit.abs() == h) == (x == gap.midpoint())), "bound sandwich");
    s.expect(eval_limit(Rational(1) - x, OrientationPolicy::PaperLiteral) == lit &&
                 eval_limit(Rational(1) - x, OrientationPolicy::AlternatingLevels) == alt,
             "mirror symmetry");
  }

  for (const auto& [delta, eps] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1, 2), Rational(11, 6)}, {Rational(1, 10), Rational(2)}, {Rational(1, 100), Rational(1)}}) {
    for (auto pol : kPolicies) {
      s.expect(verify_witness(witness_family(delta, eps, pol), eps, pol), "witness family verifies");
    }
  }

  const unsigned depth = std::min(L, 6u);
  bool literal_positive_found = false;
  for (const auto& iv : level_intervals(3)) {
    for (const Rational& x : {iv.left(), iv.right()}) {
      s.expect(verify_cut(x, depth, OrientationPolicy::AlternatingLevels).cuts_at_every_radius,
               "alternating limit cuts the axis at " + x.to_string());
      const auto lit = verify_cut(x, depth, OrientationPolicy::PaperLiteral);
      for (const auto& r : lit.findings) literal_positive_found = literal_positive_found || r.positive;
    }
  }
  s.expect(!literal_positive_found, "literal limit never positive");
  const auto scan = scan_gap_midpoints(L, OrientationPolicy::PaperLiteral);
  s.expect(scan.positive == 0 && scan.zero == 0, "literal gap midpoints are all negative");
  findings.push_back({"literal_policy_does_not_cut",
                      "with every gap triangle lower the limit is <= 0, so no point cuts the axis",
                      {{"gap_midpoints_scanned", scan.negative + scan.positive + scan.zero},
                       {"positive_midpoints", scan.positive}}});
  return s;
}

}  // namespace

void SuiteResult::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok && failures.size() < 20) failures.push_back(what);
  if (!ok && failures.size() == 20) failures.push_back("...");
}

bool VerificationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
}

VerificationReport run_verification(unsigned max_level) {
  if (max_level < 1 || max_level > 10) throw PreconditionError("verification max level must be in 1..10");
  VerificationReport report{max_level, {}, {}};
  report.suites.push_back(geometry_suite(max_level));
  report.suites.push_back(pl_suite(max_level));
  report.suites.push_back(oscillator_suite(max_level, report.findings));
  return report;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["max_level"] = report.max_level;
  j["passed"] = report.passed();
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    suites.push_back({{"name", s.name}, {"passed", s.passed()}, {"checks", s.checks}, {"failures", s.failures}});
  }
  j["suites"] = std::move(suites);
  Json findings = Json::array();
  for (const auto& f : report.findings) {
    findings.push_back({{"name", f.name}, {"summary", f.summary}, {"details", f.details}});
  }
  j["findings"] = std::move(findings);
  return j;
}

}  // namespace cantor
