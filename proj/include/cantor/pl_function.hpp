#pragma once

#include <span>
#include <vector>

#include "cantor/cantor_geometry.hpp"
#include "cantor/rational.hpp"

namespace cantor {

struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear function on [0, 1], stored as its breakpoints.
///
/// Invariants: at least two breakpoints, strictly increasing x, first x = 0,
/// last x = 1. Collinear interior breakpoints are kept as given.
class PLFunction {
 public:
  /// Sorts and deduplicates `points`. Throws ValidationError on duplicate x
  /// with different y, or when the points do not span exactly [0, 1].
  static PLFunction make(std::vector<Breakpoint> points);

  std::span<const Breakpoint> breakpoints() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Exact value at x. Throws DomainError outside [0, 1].
  Rational operator()(const Rational& x) const;

 private:
  explicit PLFunction(std::vector<Breakpoint> points) : points_(std::move(points)) {}

  std::vector<Breakpoint> points_;
};

/// Exact sup over [0, 1] of |f - g|: the maximum over the merged breakpoints.
Rational pl_sup_norm_diff(const PLFunction& f, const PLFunction& g);

/// f + g (or f - g with `subtract`) on the union of both breakpoint sets.
PLFunction pl_combine(const PLFunction& f, const PLFunction& g, bool subtract = false);

/// Sum of |dy| over consecutive breakpoints.
Rational pl_total_variation(const PLFunction& f);

/// Variation restricted to [from, to], 0 <= from <= to <= 1.
Rational pl_total_variation(const PLFunction& f, const Rational& from, const Rational& to);

/// Largest |slope| over all segments.
Rational pl_max_abs_slope(const PLFunction& f);

struct SignInterval {
  Interval interval;  // open
  int sign;           // +1 or -1

  friend bool operator==(const SignInterval&, const SignInterval&) = default;
};

/// Maximal open intervals on which f > 0 or f < 0, left to right.
std::vector<SignInterval> pl_sign_changes(const PLFunction& f);

}  // namespace cantor
