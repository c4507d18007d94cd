#include "smtl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace smtl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text, bool allow_exponent) {
  std::string_view body = text;
  bool negative = false;
  if (allow_exponent && !body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad(text);
    Rational out{mpz_class(std::string(num), 10), d};
    out.canonicalize();
    return negative ? Rational(-out) : out;
  }

  long exponent = 0;
  if (allow_exponent) {
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = body.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      body = body.substr(0, e);
    }
  }

  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
    if (!all_digits(frac_part)) bad(text);
  }
  if (!all_digits(int_part)) bad(text);

  mpz_class digits(std::string(int_part) + std::string(frac_part), 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational out;
  if (exponent >= 0) {
    out = Rational(digits * pow10(static_cast<unsigned long>(exponent)));
  } else {
    out = Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
    out.canonicalize();
  }
  return negative ? Rational(-out) : out;
}

bool has_exact_decimal(const Rational& value) {
  mpz_class den = value.get_den();
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5;
  return den == 1;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  if (!has_exact_decimal(value)) return value.get_num().get_str() + "/" + value.get_den().get_str();

  // Scale by 10 until the value becomes an integer; that count is the
  // number of fractional digits.
  mpz_class abs_num = abs(value.get_num());
  const mpz_class den = value.get_den();
  std::size_t places = 0;
  mpz_class scaled = abs_num;
  while (!mpz_divisible_p(scaled.get_mpz_t(), den.get_mpz_t())) {
    scaled *= 10;
    ++places;
  }
  std::string digits = mpz_class(scaled / den).get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return (sgn(value) < 0 ? "-" : "") + digits;
}

double to_double(const Rational& value) { return value.get_d(); }

} // namespace smtl
