#include "netctrl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace netctrl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp_text = text.substr(epos + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
      exp_negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad(original);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, epos);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(original);
    if (!whole.empty() && !all_digits(whole)) bad(original);
    if (!frac.empty() && !all_digits(frac)) bad(original);
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) bad(original);
    digits = std::string(text);
  }
  Rational value(BigInt(digits, 10));
  if (exponent > 0) {
    value *= pow10(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    value /= pow10(static_cast<unsigned long>(-exponent));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad(original);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
      negative = num[0] == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad(original);
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(original) + "'");
    Rational value(BigInt(std::string(num), 10), d);
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }
  return parse_decimal(text, original);
}

std::string to_string(const Rational& value) {
  Rational c = value;
  c.canonicalize();
  return c.get_str(10);
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace netctrl
