#include "cantor/cantor_geometry.hpp"

#include <stdexcept>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

const Rational kOneThird(1, 3);
const Rational kTwoThirds(2, 3);

bool in_open_middle(const Rational& y) { return kOneThird < y && y < kTwoThirds; }

// One step of the tripling map; `digit` records the branch (0 left, 1 right).
Rational triple(const Rational& y, int& digit) {
  if (y <= kOneThird) {
    digit = 0;
    return y * 3;
  }
  digit = 1;
  return y * 3 - 2;
}

void collect_gaps(unsigned level, const Integer& index, const Rational& left, unsigned max_level,
                  std::vector<std::pair<GapAddress, Interval>>& out) {
  if (level == max_level) return;
  const Rational third = inverse_pow3(level + 1);
  collect_gaps(level + 1, Integer(2 * index), left, max_level, out);
  out.emplace_back(GapAddress{level + 1, index}, Interval(left + third, left + third * 2));
  collect_gaps(level + 1, Integer(2 * index + 1), left + third * 2, max_level, out);
}

}  // namespace

Interval::Interval(Rational left, Rational right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(Rational(0) <= left_ && left_ < right_ && right_ <= Rational(1))) {
    throw ValidationError("interval [" + left_.to_string() + ", " + right_.to_string() +
                          "] is not a non-empty subinterval of [0, 1]");
  }
}

std::string GapAddress::to_string() const { return std::to_string(level) + ":" + index.get_str(); }

GapAddress GapAddress::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw ParseError("malformed gap address '" + text + "'");
  }
  GapAddress addr;
  try {
    const Rational level = Rational::parse(text.substr(0, colon));
    const Rational index = Rational::parse(text.substr(colon + 1));
    if (!level.is_integer() || !index.is_integer() || level.sign() <= 0 || index.sign() < 0 ||
        !level.numerator().fits_uint_p()) {
      throw ParseError("");
    }
    addr.level = static_cast<unsigned>(level.numerator().get_ui());
    addr.index = index.numerator();
  } catch (const ParseError&) {
    throw ParseError("malformed gap address '" + text + "'");
  }
  return addr;
}

Rational surviving_left(unsigned level, const Integer& index) {
  Integer acc = 0;
  for (unsigned t = level; t-- > 0;) {
    acc *= 3;
    if (mpz_tstbit(index.get_mpz_t(), t)) acc += 2;
  }
  return Rational(acc, pow3(level));
}

Interval gap_interval(const GapAddress& address) {
  if (address.level == 0) throw AddressError("gap level must be >= 1");
  if (address.index < 0 || address.index >= pow2(address.level - 1)) {
    throw AddressError("gap index " + address.index.get_str() + " out of range for level " +
                       std::to_string(address.level));
  }
  const Rational base = surviving_left(address.level - 1, address.index);
  const Rational third = inverse_pow3(address.level);
  return Interval(base + third, base + third * 2);
}

CantorLocation cantor_membership(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) {
    throw DomainError("cantor_membership: " + x.to_string() + " is outside [0, 1]");
  }

  Integer index = 0;
  unsigned steps = 0;
  auto gap_location = [&]() -> CantorLocation {
    GapAddress addr{steps + 1, index};
    const Interval gap = gap_interval(addr);
    return InGap{std::move(addr), x - gap.left()};
  };
  if (in_open_middle(x)) return gap_location();

  // At most denominator + 1 distinct states; Brent needs under 3x that many steps.
  const Integer step_budget = 3 * (x.denominator() + 1) + 4;

  int digit = 0;
  Rational tortoise = x;
  Rational hare = triple(x, digit);
  index = digit;
  steps = 1;
  unsigned long power = 1;
  unsigned long lam = 1;
  while (tortoise != hare) {
    if (in_open_middle(hare)) return gap_location();
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = triple(hare, digit);
    index = 2 * index + digit;
    ++steps;
    ++lam;
    if (Integer(steps) > step_budget) {
      throw std::logic_error("cantor_membership: orbit of " + x.to_string() +
                             " exceeded its state budget");
    }
  }
  return InCantor{};
}

std::vector<std::pair<GapAddress, Interval>> enumerate_gaps(unsigned max_level) {
  if (max_level == 0) throw DomainError("enumerate_gaps: max_level must be >= 1");
  std::vector<std::pair<GapAddress, Interval>> out;
  out.reserve((std::size_t{1} << max_level) - 1);
  collect_gaps(0, Integer(0), Rational(0), max_level, out);
  return out;
}

std::vector<Interval> level_intervals(unsigned n) {
  if (n == 0) throw DomainError("level_intervals: n must be >= 1");
  std::vector<Interval> current{Interval(Rational(0), Rational(1))};
  for (unsigned level = 1; level <= n; ++level) {
    const Rational third = inverse_pow3(level);
    std::vector<Interval> next;
    next.reserve(current.size() * 2);
    for (const auto& iv : current) {
      next.emplace_back(iv.left(), iv.left() + third);
      next.emplace_back(iv.right() - third, iv.right());
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace cantor
