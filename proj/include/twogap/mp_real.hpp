#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <utility>

namespace twogap::mp {

/// Working precision for newly created values on the calling thread.
class ScopedPrecision {
 public:
  /// `digits` decimal digits; converted to bits with a few guard bits.
  explicit ScopedPrecision(int digits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  static mpfr_prec_t current_bits() noexcept;
  static int current_digits() noexcept;

 private:
  mpfr_prec_t saved_bits_;
  int saved_digits_;
};

/// Value type over mpfr_t. New values and arithmetic results take the
/// thread's working precision; copies keep the precision of their source.
class Real {
 public:
  Real();
  Real(double value);  // NOLINT(google-explicit-constructor)
  Real(int value);     // NOLINT(google-explicit-constructor)
  explicit Real(const std::string& decimal);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) noexcept {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cos(const Real& x);
Real pi();
/// 10^-digits at working precision.
Real pow10_neg(int digits);

}  // namespace twogap::mp
