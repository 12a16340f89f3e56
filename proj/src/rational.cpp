#include "jfactor/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace jfactor {

Rational rat(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  return Rational(BigInt(numerator), BigInt(denominator));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) { return r.str(); }

Rational rational_from_decimal(const std::string& text) {
  std::size_t i = 0;
  const std::size_t size = text.size();
  auto fail = [&text]() -> Rational {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  };

  bool negative = false;
  if (i < size && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }

  BigInt mantissa = 0;
  std::int64_t frac_digits = 0;
  bool any_digit = false;
  for (; i < size && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    mantissa = mantissa * 10 + (text[i] - '0');
    any_digit = true;
  }
  if (i < size && text[i] == '.') {
    ++i;
    for (; i < size && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      mantissa = mantissa * 10 + (text[i] - '0');
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) return fail();

  std::int64_t exponent = 0;
  if (i < size && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < size && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == size) return fail();
    for (; i < size && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      exponent = exponent * 10 + (text[i] - '0');
    }
    if (exp_negative) exponent = -exponent;
  }
  if (i != size) return fail();

  if (negative) mantissa = -mantissa;
  const std::int64_t net = exponent - frac_digits;
  BigInt numerator = mantissa;
  BigInt denominator = 1;
  if (net >= 0) {
    numerator *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net));
  } else {
    denominator = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-net));
  }
  return Rational(numerator, denominator);
}

Rational parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    try {
      return Rational(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
  }
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
      text.find('E') == std::string::npos) {
    try {
      return Rational(BigInt(text));
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
  }
  return rational_from_decimal(text);
}

std::string to_decimal_string(const Rational& r, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, to_double(r));
  return buffer;
}

}  // namespace jfactor
