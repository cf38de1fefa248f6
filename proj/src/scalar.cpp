#include "ivnsoft/scalar.hpp"

#include "ivnsoft/errors.hpp"

#include <cctype>
#include <string>

namespace ivnsoft {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr int kMaxExponent = 4096;

cpp_int pow10(unsigned k) { return boost::multiprecision::pow(cpp_int(10), k); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Boost reads a leading 0 as an octal prefix.
cpp_int decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return cpp_int(0);
  return cpp_int(std::string(digits.substr(first)));
}

[[noreturn]] void bad_number(std::string_view text) {
  throw SchemaError("not a number: \"" + std::string(text) + "\"");
}

cpp_int parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) bad_number(whole);
  cpp_int v = decimal_integer(text);
  return negative ? cpp_int(-v) : v;
}

cpp_rational parse_decimal(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const cpp_int exp_value = parse_integer(text.substr(e + 1), whole);
    if (exp_value > kMaxExponent || exp_value < -kMaxExponent) bad_number(whole);
    exponent = exp_value.convert_to<int>();
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(whole);
  if (!int_part.empty() && !all_digits(int_part)) bad_number(whole);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_number(whole);

  std::string digits(int_part);
  digits += frac_part;
  cpp_int mantissa = decimal_integer(digits);
  if (negative) mantissa = -mantissa;

  const int scale = exponent - static_cast<int>(frac_part.size());
  if (scale >= 0) return cpp_rational(mantissa * pow10(static_cast<unsigned>(scale)));
  return cpp_rational(mantissa, pow10(static_cast<unsigned>(-scale)));
}

// Number of fractional decimal digits needed to write `den` exactly, or -1
// when the expansion does not terminate.
int terminating_digits(cpp_int den) {
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return -1;
  return std::max(twos, fives);
}

std::string fixed_text(const cpp_rational& value, int digits, int min_digits) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  const int k = std::max(digits, min_digits);
  const cpp_int scale = pow10(static_cast<unsigned>(k));
  cpp_int scaled = num * scale / den;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string out = negative ? "-" : "";
  out += cpp_int(scaled / scale).str();
  if (k > 0) {
    std::string frac = cpp_int(scaled % scale).str();
    frac.insert(0, static_cast<std::size_t>(k) - frac.size(), '0');
    out += '.';
    out += frac;
  }
  return out;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("zero denominator");
  value_ = cpp_rational(num, den);
}

Scalar Scalar::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const cpp_int num = parse_integer(text.substr(0, slash), text);
    const cpp_int den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) bad_number(text);
    return Scalar(cpp_rational(num, den));
  }
  return Scalar(parse_decimal(text));
}

bool Scalar::is_zero() const { return value_ == 0; }

bool Scalar::is_terminating_decimal() const {
  return terminating_digits(boost::multiprecision::denominator(value_)) >= 0;
}

std::string Scalar::to_string() const {
  const int k = terminating_digits(boost::multiprecision::denominator(value_));
  if (k < 0) {
    return boost::multiprecision::numerator(value_).str() + "/" +
           boost::multiprecision::denominator(value_).str();
  }
  return fixed_text(value_, k, 0);
}

std::string Scalar::to_display(int digits, Rounding mode) const {
  const Scalar r = rounded(digits, mode);
  const int k = terminating_digits(boost::multiprecision::denominator(r.value_));
  return fixed_text(r.value_, k, 1);
}

Scalar Scalar::rounded(int digits, Rounding mode) const {
  const cpp_int scale = pow10(static_cast<unsigned>(std::max(digits, 0)));
  cpp_rational scaled = value_ * scale;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  if (mode == Rounding::half_up) scaled += cpp_rational(1, 2);
  cpp_int whole = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  if (negative) whole = -whole;
  return Scalar(cpp_rational(whole, scale));
}

// Cross-multiplication; boost's rational ordering goes through repeated
// division and dominates every kernel that compares endpoints.
std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const auto& x = a.value_.backend().data();
  const auto& y = b.value_.backend().data();
  const auto order = [](const cpp_int& l, const cpp_int& r) {
    if (l < r) return std::strong_ordering::less;
    if (r < l) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  };
  if (x.denominator() == y.denominator()) return order(x.numerator(), y.numerator());
  return order(x.numerator() * y.denominator(), y.numerator() * x.denominator());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error("division by zero");
  return Scalar(Scalar::rep(a.value_ / b.value_));
}

}  // namespace ivnsoft
