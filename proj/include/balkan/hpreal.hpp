#pragma once

// Fixed-point decimal reals.  A value is mant * 10^-(digits + guard), with a
// running worst-case error bound err (in units of the last place).  The value is
// trustworthy to `digits` places as long as err < 10^guard.

#include <string>

#include "balkan/exactnum.hpp"

namespace balkan {

class HPReal {
 public:
  static constexpr long kDefaultGuard = 10;

  HPReal() = default;
  HPReal(BigInt mant, long digits, BigInt err_ulps = 0, long guard = kDefaultGuard);

  static HPReal from_rational(const BigRational& q, long digits, long guard = kDefaultGuard);
  static HPReal from_integer(const BigInt& n, long digits, long guard = kDefaultGuard);

  long digits() const { return digits_; }
  long guard() const { return guard_; }
  long scale() const { return digits_ + guard_; }
  const BigInt& mantissa() const { return mant_; }
  const BigInt& error_ulps() const { return err_; }
  bool within_budget() const;

  /// Same value at a lower precision (truncating, one extra ulp of error).
  HPReal truncated(long digits) const;

  HPReal operator-() const;
  friend HPReal operator+(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const HPReal& b);
  friend HPReal operator/(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const BigInt& k);
  friend HPReal operator*(const HPReal& a, const BigRational& q);

  /// Rounded decimal string with `places` digits after the point.
  std::string to_string(long places) const;
  std::string to_string() const { return to_string(digits_); }
  double to_double() const;

  /// |a - b| < 10^-places, taking both error bounds into account.
  friend bool agree_to_places(const HPReal& a, const HPReal& b, long places);
  /// |a - b| as a fixed-point value at the lower of the two precisions.
  friend HPReal abs_diff(const HPReal& a, const HPReal& b);
  /// Number of leading decimal places on which a and b agree (floor of -log10|a-b|),
  /// capped by the precision of the less precise operand.
  friend long agreeing_places(const HPReal& a, const HPReal& b);
  /// a < 10^-places in absolute value (including the error bound).
  bool is_below(long places) const;

 private:
  BigInt mant_;
  long digits_ = 10;
  long guard_ = kDefaultGuard;
  BigInt err_;
};

BigInt pow10(long e);

/// floor(x * 10^scale) and round-half-away for rationals.
BigInt scaled_floor(const BigRational& x, long scale);
BigInt round_div(const BigInt& num, const BigInt& den);

}  // namespace balkan
