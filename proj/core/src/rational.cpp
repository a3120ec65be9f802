#include "gperiod/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "gperiod/error.hpp"

namespace gperiod {

namespace {

[[noreturn]] void fail(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) fail(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail(text);
    mpz_class q = parse_integer(den);
    if (q == 0) fail(text);
    result = Rational(parse_integer(num), q);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) fail(text);
      if (exponent > 4096 || exponent < -4096) fail(text);
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) fail(text);
    if (!int_part.empty() && !all_digits(int_part)) fail(text);
    if (!frac_part.empty() && !all_digits(frac_part)) fail(text);

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa = parse_integer(digits);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) {
      result = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
    } else {
      result = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
      result.canonicalize();
    }
  }
  if (negative) result = -result;
  return result;
}

Rational exact_from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::BadParams, "non-finite value cannot be represented exactly");
  }
  // mpq_set_d is exact for finite doubles.
  Rational r(value);
  r.canonicalize();
  return r;
}

Rational rational_from_decimal(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::BadParams, "non-finite value cannot be represented exactly");
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw Error(ErrorCode::BadParams, "cannot format value");
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(end - buf)));
}

double to_double_toward_zero(const Rational& value) {
  // mpq_get_d truncates.
  return value.get_d();
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace gperiod
