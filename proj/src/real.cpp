#include "bethe/real.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bethe {

namespace {
thread_local long tls_bits = 128;
}

long Real::default_bits() { return tls_bits; }

void Real::set_default_bits(long bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw std::invalid_argument("precision out of range");
  tls_bits = bits;
}

Real::Real(const std::string& s) {
  mpfr_init2(v_, default_bits());
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a number: " + s);
  }
}

std::string Real::str(int digits) const {
  if (digits < 1) digits = 1;
  if (!is_finite() || is_zero()) {
    std::vector<char> buf(64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return buf.data();
  }
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

#define BETHE_BINOP(OP, FN)                                    \
  Real operator OP(const Real& a, const Real& b) {            \
    Real r;                                                    \
    FN(r.get(), a.get(), b.get(), MPFR_RNDN);                  \
    return r;                                                  \
  }
BETHE_BINOP(+, mpfr_add)
BETHE_BINOP(-, mpfr_sub)
BETHE_BINOP(*, mpfr_mul)
BETHE_BINOP(/, mpfr_div)
#undef BETHE_BINOP

Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN); return r; }
Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN); return r; }
Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN); return r; }
Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN); return r; }
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) { Real r; mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN); return r; }
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) { Real r; mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN); return r; }

#define BETHE_UNARY(NAME, FN)                 \
  Real NAME(const Real& x) {                  \
    Real r;                                   \
    FN(r.get(), x.get(), MPFR_RNDN);          \
    return r;                                 \
  }
BETHE_UNARY(abs, mpfr_abs)
BETHE_UNARY(sqrt, mpfr_sqrt)
BETHE_UNARY(exp, mpfr_exp)
BETHE_UNARY(expm1, mpfr_expm1)
BETHE_UNARY(log, mpfr_log)
BETHE_UNARY(log1p, mpfr_log1p)
BETHE_UNARY(log10, mpfr_log10)
BETHE_UNARY(atan, mpfr_atan)
BETHE_UNARY(sin, mpfr_sin)
BETHE_UNARY(cos, mpfr_cos)
BETHE_UNARY(tgamma, mpfr_gamma)
BETHE_UNARY(sqr, mpfr_sqr)
#undef BETHE_UNARY

Real lgamma(const Real& x) {
  Real r;
  int sgn = 0;
  mpfr_lgamma(r.get(), &sgn, x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) { Real r; mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN); return r; }
Real pow(const Real& x, long k) { Real r; mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN); return r; }
Real ldexp(const Real& x, long e) { Real r; mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN); return r; }
Real const_pi() { Real r; mpfr_const_pi(r.get(), MPFR_RNDN); return r; }
Real const_euler() { Real r; mpfr_const_euler(r.get(), MPFR_RNDN); return r; }
Real digamma(const Real& x) { Real r; mpfr_digamma(r.get(), x.get(), MPFR_RNDN); return r; }
Real factorial(unsigned long k) { Real r; mpfr_fac_ui(r.get(), k, MPFR_RNDN); return r; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real fma(const Real& a, const Real& b, const Real& c) {
  Real r;
  mpfr_fma(r.get(), a.get(), b.get(), c.get(), MPFR_RNDN);
  return r;
}

double log10_abs(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this *= inverse(o);
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) { Complex r(a); r *= b; return r; }
Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
Complex operator/(const Complex& a, const Complex& b) { return a * inverse(b); }

Complex inverse(const Complex& a) {
  Real d = a.norm();
  return {a.re / d, -a.im / d};
}

}  // namespace bethe
