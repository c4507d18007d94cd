#pragma once

#include "smtl/rational.hpp"

#include <optional>
#include <string>

namespace smtl {

/// Non-empty time interval over non-negative rationals. An absent upper
/// bound means +inf, which is always open.
class Interval {
public:
  /// Throws std::invalid_argument if the bounds describe an empty or
  /// negative interval, or a closed infinite end.
  Interval(Rational lower, std::optional<Rational> upper, bool lower_closed = true,
           bool upper_closed = true);

  static Interval closed(Rational lower, Rational upper) {
    return Interval(std::move(lower), std::move(upper), true, true);
  }
  static Interval unbounded(Rational lower = 0, bool lower_closed = true) {
    return Interval(std::move(lower), std::nullopt, lower_closed, false);
  }

  const Rational& lower() const noexcept { return lower_; }
  const std::optional<Rational>& upper() const noexcept { return upper_; }
  bool lower_closed() const noexcept { return lower_closed_; }
  bool upper_closed() const noexcept { return upper_closed_; }
  bool bounded() const noexcept { return upper_.has_value(); }

  bool contains(const Rational& d) const;
  /// d is past every point of the interval.
  bool below(const Rational& d) const;
  /// Some member of the interval is strictly greater than d.
  bool reaches_beyond(const Rational& d) const;

  /// "[0,1]", "(1/3,inf)".
  std::string to_string() const;

  friend bool operator==(const Interval& a, const Interval& b);

private:
  Rational lower_;
  std::optional<Rational> upper_;
  bool lower_closed_;
  bool upper_closed_;
};

} // namespace smtl
