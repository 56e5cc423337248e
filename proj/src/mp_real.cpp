#include "twogap/mp_real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace twogap::mp {
namespace {

constexpr int kDefaultDigits = 50;

thread_local mpfr_prec_t working_bits = 0;
thread_local int working_digits = kDefaultDigits;

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

mpfr_prec_t bits() {
  if (working_bits == 0) working_bits = digits_to_bits(kDefaultDigits);
  return working_bits;
}

}  // namespace

ScopedPrecision::ScopedPrecision(int digits)
    : saved_bits_(bits()), saved_digits_(working_digits) {
  if (digits < 1) throw std::invalid_argument("ScopedPrecision: digits must be positive");
  working_bits = digits_to_bits(digits);
  working_digits = digits;
}

ScopedPrecision::~ScopedPrecision() {
  working_bits = saved_bits_;
  working_digits = saved_digits_;
}

mpfr_prec_t ScopedPrecision::current_bits() noexcept { return bits(); }
int ScopedPrecision::current_digits() noexcept { return working_digits; }

Real::Real() {
  mpfr_init2(value_, bits());
  mpfr_set_zero(value_, 1);
}

Real::Real(double value) {
  mpfr_init2(value_, bits());
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(int value) {
  mpfr_init2(value_, bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const std::string& decimal) {
  mpfr_init2(value_, bits());
  if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("Real: cannot parse '" + decimal + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buffer = nullptr;
  const int len = mpfr_asprintf(&buffer, "%.*Re", digits - 1, value_);
  std::string out = len >= 0 ? std::string(buffer, static_cast<std::size_t>(len)) : "nan";
  if (buffer) mpfr_free_str(buffer);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r;
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) {
  Real r;
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r;
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r;
  mpfr_cos(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real pow10_neg(int digits) {
  Real r(10);
  mpfr_pow_si(r.get(), r.get(), -digits, MPFR_RNDN);
  return r;
}

}  // namespace twogap::mp
