#include "smtl/interval.hpp"

#include <stdexcept>

namespace smtl {

Interval::Interval(Rational lower, std::optional<Rational> upper, bool lower_closed,
                   bool upper_closed)
    : lower_(std::move(lower)), upper_(std::move(upper)), lower_closed_(lower_closed),
      upper_closed_(upper_closed) {
  if (sgn(lower_) < 0) throw std::invalid_argument("interval lower bound is negative");
  if (!upper_) {
    if (upper_closed_) throw std::invalid_argument("an infinite upper bound must be open");
    return;
  }
  if (*upper_ < lower_) throw std::invalid_argument("interval " + to_string() + " is empty");
  if (*upper_ == lower_ && !(lower_closed_ && upper_closed_))
    throw std::invalid_argument("interval " + to_string() + " is empty");
}

bool Interval::contains(const Rational& d) const {
  if (lower_closed_ ? d < lower_ : d <= lower_) return false;
  if (!upper_) return true;
  return upper_closed_ ? d <= *upper_ : d < *upper_;
}

bool Interval::below(const Rational& d) const {
  if (!upper_) return false;
  return upper_closed_ ? d > *upper_ : d >= *upper_;
}

bool Interval::reaches_beyond(const Rational& d) const {
  // Non-empty, so values arbitrarily close to the upper end are members.
  return !upper_ || *upper_ > d;
}

std::string Interval::to_string() const {
  std::string out;
  out += lower_closed_ ? '[' : '(';
  out += format_rational(lower_);
  out += ',';
  out += upper_ ? format_rational(*upper_) : std::string("inf");
  out += upper_closed_ ? ']' : ')';
  return out;
}

bool operator==(const Interval& a, const Interval& b) {
  return a.lower_ == b.lower_ && a.upper_ == b.upper_ && a.lower_closed_ == b.lower_closed_ &&
         a.upper_closed_ == b.upper_closed_;
}

} // namespace smtl
