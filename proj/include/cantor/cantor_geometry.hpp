#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

/// Sub-interval of [0, 1] with 0 <= left < right <= 1.
///
/// Whether the ends are open or closed is up to the caller: gaps are open,
/// surviving Cantor intervals are closed.
class Interval {
 public:
  Interval(Rational left, Rational right);

  const Rational& left() const { return left_; }
  const Rational& right() const { return right_; }
  Rational length() const { return right_ - left_; }
  Rational midpoint() const { return (left_ + right_) / 2; }

  bool contains_open(const Rational& x) const { return left_ < x && x < right_; }
  bool contains_closed(const Rational& x) const { return left_ <= x && x <= right_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational left_;
  Rational right_;
};

/// Removed middle third number `index` (left to right) among the 2^(level-1)
/// gaps created at step `level`.
struct GapAddress {
  unsigned level = 1;
  Integer index = 0;

  /// "level:index", the JSON form.
  std::string to_string() const;
  static GapAddress parse(const std::string& text);

  friend bool operator==(const GapAddress& a, const GapAddress& b) {
    return a.level == b.level && a.index == b.index;
  }
};

struct InCantor {
  friend bool operator==(const InCantor&, const InCantor&) = default;
};

struct InGap {
  GapAddress address;
  Rational offset;  // x - gap.left, strictly inside (0, 3^-level)

  friend bool operator==(const InGap&, const InGap&) = default;
};

using CantorLocation = std::variant<InCantor, InGap>;

inline bool in_cantor(const CantorLocation& loc) { return std::holds_alternative<InCantor>(loc); }

/// Decides membership of a rational x in the middle-thirds Cantor set.
///
/// Iterates x -> 3x on [0, 1/3] and x -> 3x - 2 on [2/3, 1]. Landing in the
/// open middle (1/3, 2/3) at step j means x sits in a level j+1 gap whose
/// index is spelled by the branch digits taken so far. A canonical
/// denominator never grows under the map, so the orbit is eventually
/// periodic; a repeated state (Brent cycle detection) certifies membership.
/// Points at exactly 1/3 or 2/3 of the current scale stay on a surviving
/// branch, so gap endpoints are members.
///
/// Throws DomainError if x is outside [0, 1].
CantorLocation cantor_membership(const Rational& x);

/// Open interval of the given gap. Throws AddressError for a bad address.
Interval gap_interval(const GapAddress& address);

/// All 2^max_level - 1 gaps of level <= max_level, sorted by left endpoint.
std::vector<std::pair<GapAddress, Interval>> enumerate_gaps(unsigned max_level);

/// The 2^n closed surviving intervals of level n, sorted.
std::vector<Interval> level_intervals(unsigned n);

/// Left endpoint of surviving interval `index` at level `level`.
Rational surviving_left(unsigned level, const Integer& index);

}  // namespace cantor
