#include "cantor/pl_function.hpp"

#include <algorithm>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

// Values of f and g at every x in the union of their breakpoints.
struct MergedSample {
  Rational x;
  Rational f;
  Rational g;
};

std::vector<MergedSample> merge(const PLFunction& f, const PLFunction& g) {
  const auto fp = f.breakpoints();
  const auto gp = g.breakpoints();
  std::vector<MergedSample> out;
  out.reserve(fp.size() + gp.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fp.size() && j < gp.size()) {
    if (fp[i].x == gp[j].x) {
      out.push_back({fp[i].x, fp[i].y, gp[j].y});
      ++i;
      ++j;
    } else if (fp[i].x < gp[j].x) {
      // j > 0 because both start at 0.
      out.push_back({fp[i].x, fp[i].y, interpolate(gp[j - 1], gp[j], fp[i].x)});
      ++i;
    } else {
      out.push_back({gp[j].x, interpolate(fp[i - 1], fp[i], gp[j].x), gp[j].y});
      ++j;
    }
  }
  return out;
}

}  // namespace

PLFunction PLFunction::make(std::vector<Breakpoint> points) {
  if (points.empty()) throw ValidationError("PL function needs at least one breakpoint");
  auto by_x = [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; };
  if (!std::is_sorted(points.begin(), points.end(), by_x)) {
    std::stable_sort(points.begin(), points.end(), by_x);
  }
  std::vector<Breakpoint> unique;
  unique.reserve(points.size());
  for (auto& p : points) {
    if (!unique.empty() && unique.back().x == p.x) {
      if (unique.back().y != p.y) {
        throw ValidationError("conflicting values at x = " + p.x.to_string() + ": " +
                              unique.back().y.to_string() + " and " + p.y.to_string());
      }
      continue;
    }
    unique.push_back(std::move(p));
  }
  if (unique.size() < 2 || unique.front().x != Rational(0) || unique.back().x != Rational(1)) {
    throw ValidationError("breakpoints must span exactly [0, 1] (got [" + unique.front().x.to_string() +
                          ", " + unique.back().x.to_string() + "])");
  }
  return PLFunction(std::move(unique));
}

Rational PLFunction::operator()(const Rational& x) const {
  if (x < Rational(0) || x > Rational(1)) {
    throw DomainError("PL evaluation at " + x.to_string() + " outside [0, 1]");
  }
  const auto it = std::lower_bound(points_.begin(), points_.end(), x,
                                   [](const Breakpoint& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  return interpolate(*(it - 1), *it, x);
}

Rational pl_sup_norm_diff(const PLFunction& f, const PLFunction& g) {
  Rational best(0);
  for (const auto& s : merge(f, g)) {
    best = max(best, (s.f - s.g).abs());
  }
  return best;
}

PLFunction pl_combine(const PLFunction& f, const PLFunction& g, bool subtract) {
  std::vector<Breakpoint> pts;
  for (auto& s : merge(f, g)) {
    pts.push_back({std::move(s.x), subtract ? s.f - s.g : s.f + s.g});
  }
  return PLFunction::make(std::move(pts));
}

Rational pl_total_variation(const PLFunction& f) {
  const auto p = f.breakpoints();
  Rational total(0);
  for (std::size_t i = 1; i < p.size(); ++i) total += (p[i].y - p[i - 1].y).abs();
  return total;
}

Rational pl_total_variation(const PLFunction& f, const Rational& from, const Rational& to) {
  if (from < Rational(0) || to > Rational(1) || to < from) {
    throw DomainError("variation window [" + from.to_string() + ", " + to.to_string() +
                      "] is not inside [0, 1]");
  }
  Rational total(0);
  Rational prev_y = f(from);
  for (const auto& p : f.breakpoints()) {
    if (p.x <= from) continue;
    if (p.x >= to) break;
    total += (p.y - prev_y).abs();
    prev_y = p.y;
  }
  total += (f(to) - prev_y).abs();
  return total;
}

Rational pl_max_abs_slope(const PLFunction& f) {
  const auto p = f.breakpoints();
  Rational best(0);
  for (std::size_t i = 1; i < p.size(); ++i) {
    best = max(best, ((p[i].y - p[i - 1].y) / (p[i].x - p[i - 1].x)).abs());
  }
  return best;
}

std::vector<SignInterval> pl_sign_changes(const PLFunction& f) {
  // Pieces are open sub-intervals of one segment with constant sign.
  struct Piece {
    Rational left;
    Rational right;
    int sign;
  };
  std::vector<Piece> pieces;
  const auto p = f.breakpoints();
  for (std::size_t i = 1; i < p.size(); ++i) {
    const auto& a = p[i - 1];
    const auto& b = p[i];
    const int sa = a.y.sign();
    const int sb = b.y.sign();
    if (sa == 0 && sb == 0) continue;
    if (sa * sb < 0) {
      const Rational root = a.x - a.y * (b.x - a.x) / (b.y - a.y);
      pieces.push_back({a.x, root, sa});
      pieces.push_back({root, b.x, sb});
    } else {
      pieces.push_back({a.x, b.x, sa != 0 ? sa : sb});
    }
  }

  std::vector<SignInterval> out;
  Rational left;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0 || pieces[i - 1].right != pieces[i].left || pieces[i - 1].sign != pieces[i].sign ||
        f(pieces[i].left).is_zero()) {
      left = pieces[i].left;
    }
    const bool closes = i + 1 == pieces.size() || pieces[i + 1].left != pieces[i].right ||
                        pieces[i + 1].sign != pieces[i].sign || f(pieces[i].right).is_zero();
    if (closes) out.push_back({Interval(left, pieces[i].right), pieces[i].sign});
  }
  return out;
}

}  // namespace cantor
