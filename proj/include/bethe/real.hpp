#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace bethe {

// Thin RAII handle over an MPFR number. New values are created at the
// calling thread's default precision; copy-assignment adopts the source
// precision so long-lived objects never silently truncate.
class Real {
 public:
  Real() { mpfr_init2(v_, default_bits()); mpfr_set_zero(v_, 1); }
  Real(int x) { mpfr_init2(v_, default_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long x) { mpfr_init2(v_, default_bits()); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long long x) { mpfr_init2(v_, default_bits()); mpfr_set_si(v_, static_cast<long>(x), MPFR_RNDN); }
  Real(unsigned long x) { mpfr_init2(v_, default_bits()); mpfr_set_ui(v_, x, MPFR_RNDN); }
  explicit Real(double x) { mpfr_init2(v_, default_bits()); mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Real(const mpz_class& x) { mpfr_init2(v_, default_bits()); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
  explicit Real(const mpq_class& x) { mpfr_init2(v_, default_bits()); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
  explicit Real(const std::string& s);
  explicit Real(const char* s) : Real(std::string(s)) {}

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static long default_bits();
  static void set_default_bits(long bits);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  // Re-round in place to a new precision.
  void round_to(long bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator+=(int o) { return *this += static_cast<long>(o); }
  Real& operator-=(int o) { return *this -= static_cast<long>(o); }
  Real& operator*=(int o) { return *this *= static_cast<long>(o); }
  Real& operator/=(int o) { return *this /= static_cast<long>(o); }

  Real operator-() const { Real r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  // Binary exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
  long exponent2() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

  // Scientific notation with the requested number of significant digits.
  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);
inline Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
inline Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
inline Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
inline Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
inline Real operator+(int a, const Real& b) { return static_cast<long>(a) + b; }
inline Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
inline Real operator*(int a, const Real& b) { return static_cast<long>(a) * b; }
inline Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) < 0; }
inline bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) > 0; }
inline bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) <= 0; }
inline bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) >= 0; }
inline bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) == 0; }
inline bool operator<(const Real& a, int b) { return a < static_cast<long>(b); }
inline bool operator>(const Real& a, int b) { return a > static_cast<long>(b); }
inline bool operator<=(const Real& a, int b) { return a <= static_cast<long>(b); }
inline bool operator>=(const Real& a, int b) { return a >= static_cast<long>(b); }
inline bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log10(const Real& x);
Real atan(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tgamma(const Real& x);
Real lgamma(const Real& x);
Real digamma(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real ldexp(const Real& x, long e);
Real const_pi();
Real const_euler();
Real factorial(unsigned long k);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real sqr(const Real& x);
// a*b + c in one rounding
Real fma(const Real& a, const Real& b, const Real& c);

// log10 of |x| as a double; -inf for zero.
double log10_abs(const Real& x);

// Sets the calling thread's default precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(long bits) : saved_(Real::default_bits()) { Real::set_default_bits(bits); }
  ~PrecisionGuard() { Real::set_default_bits(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  long saved_;
};

inline long digits_to_bits(double digits) { return static_cast<long>(digits * 3.3219280948873623 + 0.999); }

// Minimal complex arithmetic over Real (only rational operations are needed).
struct Complex {
  Real re, im;
  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
  Complex& operator/=(const Complex& o);
  Real norm() const { return re * re + im * im; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);
Complex operator/(const Complex& a, const Complex& b);
Complex inverse(const Complex& a);

}  // namespace bethe
