#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ivnsoft {

enum class Rounding { half_up, truncate };

/// Exact rational number used for every membership degree.
///
/// Decimal text parses to the exact decimal fraction ("0.55" is 11/20), so
/// comparisons at threshold boundaries never depend on binary rounding.
class Scalar {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Scalar() = default;
  Scalar(std::int64_t integer) : value_(integer) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(rep value) : value_(std::move(value)) {}

  /// Accepts "0.55", "-1.5", "1e-3", "2.5E+1" and fractions like "19/60".
  /// Throws SchemaError on anything else.
  static Scalar parse(std::string_view text);

  const rep& raw() const noexcept { return value_; }

  bool is_zero() const;
  bool is_terminating_decimal() const;

  /// Shortest exact text: minimal decimal digits when the value is a
  /// terminating decimal, "num/den" otherwise. parse(to_string()) == *this.
  std::string to_string() const;

  /// Fixed-point text with at most `digits` fractional digits, trailing zeros
  /// removed but at least one fractional digit kept ("1.0", "0.55", "0.8").
  std::string to_display(int digits, Rounding mode = Rounding::half_up) const;

  Scalar rounded(int digits, Rounding mode) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(rep(a.value_ + b.value_)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(rep(a.value_ - b.value_)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(rep(a.value_ * b.value_)); }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& other) {
    value_ += other.value_;
    return *this;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  rep value_{0};
};

inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace ivnsoft
