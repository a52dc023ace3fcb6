#include "bethe/hydro.hpp"

#include "bethe/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace bethe {

namespace {

mpz_class binomial(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class fact(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

long exponent_of(const Complex& c) { return std::max(c.re.exponent2(), c.im.exponent2()); }

}  // namespace

BoundRadial::BoundRadial(const QuantumState& s) : state(s) {
  const int n = s.n(), l = s.l(), zeta = s.zeta();
  q.reserve(zeta);
  mpq_class two_over_n(2, n);
  two_over_n.canonicalize();
  mpq_class pw = 1;
  for (int i = 0; i < l; ++i) pw *= two_over_n;
  for (int j = 0; j < zeta; ++j) {
    mpq_class c(binomial(n + l, zeta - 1 - j) * pw);
    c /= fact(j);
    if (j % 2) c = -c;
    c.canonicalize();
    q.push_back(c);
    pw *= two_over_n;
  }
  norm2 = mpq_class(4 * fact(zeta - 1), mpz_class(n) * n * n * n * fact(n + l));
  norm2.canonicalize();
}

Real BoundRadial::norm() const { return sqrt(Real(norm2)); }

Real BoundRadial::operator()(const Real& r) const {
  Real poly;
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    poly *= r;
    poly += Real(*it);
  }
  return norm() * poly * pow(r, static_cast<long>(state.l())) * exp(-r / state.n());
}

std::shared_ptr<const BoundRadial> bound_radial(const QuantumState& s) {
  static std::shared_mutex lock;
  static std::map<std::pair<int, int>, std::shared_ptr<const BoundRadial>> memo;
  const auto key = std::make_pair(s.n(), s.l());
  {
    std::shared_lock<std::shared_mutex> rl(lock);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto built = std::make_shared<const BoundRadial>(s);
  std::unique_lock<std::shared_mutex> wl(lock);
  return memo.emplace(key, built).first->second;
}

Real radial_bound(const QuantumState& s, const Real& r) {
  if (r < 0) throw DomainError("radial_bound: r must be >= 0");
  return (*bound_radial(s))(r);
}

Real coulomb_regular(int l, const Real& eta, const Real& rho) {
  const long outer = Real::default_bits();
  const long extra = 64 + static_cast<long>(4.5 * std::fabs(rho.to_double()) + 2.5 * std::fabs(eta.to_double()));
  Real result;
  {
    PrecisionGuard guard(outer + extra);
    Real pi = const_pi();
    // C_l(eta) = 2^l exp(-pi eta / 2) |Gamma(l+1+i eta)| / (2l+1)!
    Real g2 = eta.is_zero() ? Real(1) : pi * eta / ((exp(pi * eta) - exp(-pi * eta)) / 2);
    for (int s = 1; s <= l; ++s) g2 *= s * s + sqr(eta);
    Real cl = ldexp(sqrt(g2), l) * exp(-pi * eta / 2) / factorial(2 * l + 1);
    // phi = sum_k A_k rho^(k-l-1), A_{l+1} = 1, A_{l+2} = eta/(l+1)
    Real a_prev(1), a_cur = eta / (l + 1);
    Real sum(1), pw(1);
    pw *= rho;  // at the raised precision; a copy would keep the caller's
    sum += a_cur * pw;
    const Real eps = ldexp(Real(1), -(outer + 16));
    int small = 0;
    for (long k = l + 3; k < 100000; ++k) {
      Real a_next = (2 * eta * a_cur - a_prev) / ((k + l) * (k - l - 1));
      pw *= rho;
      Real term = a_next * pw;
      sum += term;
      a_prev = std::move(a_cur);
      a_cur = std::move(a_next);
      if (k > rho.to_double() + l + 3 && abs(term) <= eps * abs(sum)) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
    result = cl * pow(rho, static_cast<long>(l + 1)) * sum;
  }
  result.round_to(outer);
  return result;
}

Real radial_continuum(const Real& energy, int l, const Real& r) {
  if (energy <= 0) throw DomainError("radial_continuum: energy must be positive");
  Real k = sqrt(2 * energy);
  Real eta = -1 / k;
  return sqrt(2 / (const_pi() * k)) * coulomb_regular(l, eta, k * r) / r;
}

Real channel_weight(int l, int L) {
  if (L == l + 1) return Real(l + 1) / (2 * l + 1);
  if (L == l - 1) return Real(l) / (2 * l + 1);
  throw DomainError("channel_weight: L must be l +- 1");
}

// ---- dipole kernel --------------------------------------------------------

DipoleKernel::DipoleKernel(const QuantumState& ref, int L) : ref_(ref), L_(L), bits_(Real::default_bits()) {
  const int l = ref.l();
  if (L != l + 1 && L != l - 1) throw DomainError("dipole: selection rule |l - l'| = 1 violated");
  if (L < 0) throw DomainError("dipole: negative channel angular momentum");
  auto br = bound_radial(ref);
  norm_ = br->norm();
  p0_ = 3 + l + L;
  const int zeta = ref.zeta();
  g_.reserve(zeta);
  e_.reserve(zeta);
  for (int j = 0; j < zeta; ++j) {
    const int p = p0_ + j;
    g_.push_back(norm_ * Real(br->q[j]) * factorial(p));
    e_.push_back(p + 1 - (2 * L + 2));
  }
  e_min_ = e_.front();
  e_max_ = e_.back();
}

Real DipoleKernel::bound(const Real& nprime, long* cancel_bits) const {
  const int n = ref_.n(), L = L_;
  if (nprime < L + 1) throw DomainError("dipole: n' must exceed the channel angular momentum");
  const long c = 2L * L + 2;

  // Normalization of the (n', L) state in the 1F1 form.
  Real norm_p = pow(2 / nprime, static_cast<long>(L + 1)) * sqrt(2 / nprime) / factorial(2 * L + 1);
  {
    Real prod = 1 / (2 * nprime);
    for (int s = -L; s <= L; ++s) prod *= nprime + s;
    norm_p *= sqrt(prod);
  }

  if (nprime == n) {
    // z = 1: terminating 2F1(-m, p+1; c; 1) = (-e)_m / (c)_m, m = n-L-1.
    const long m = n - L - 1;
    Real lam_inv(n);
    lam_inv /= 2;
    Real sum, maxterm;
    Real lp = pow(lam_inv, static_cast<long>(p0_ + 1));
    for (std::size_t j = 0; j < g_.size(); ++j) {
      const long e = e_[j];
      Real ratio(1);
      for (long i = 0; i < m; ++i) {
        ratio *= -e + i;
        ratio /= c + i;
        if (ratio.is_zero()) break;
      }
      Real term = g_[j] * lp * ratio;
      sum += term;
      if (abs(term) > maxterm) maxterm = abs(term);
      lp *= lam_inv;
    }
    if (cancel_bits) *cancel_bits = sum.is_zero() ? 0 : std::max(0L, maxterm.exponent2() - sum.exponent2());
    return norm_p * sum;
  }

  // Euler-transformed terminating series F_e = 2F1(-e, b; c; z),
  // b = L+1+n', z = 2n/(n+n'), via the contiguous recurrence in e.
  Real z = Real(2 * n) / (nprime + n);
  Real b = nprime + (L + 1);
  Real bz = b * z;
  Real zm1 = z - 1;
  Real f_prev(1);
  Real f_cur = 1 - bz / c;
  Real tmp, tmp2;
  int e_have = 1;  // f_cur holds F_1
  auto step = [&]() {
    // F_{e+1} = [(2e + c - (b+e) z) F_e + e (z-1) F_{e-1}] / (c+e)
    const long e = e_have;
    tmp = z;
    tmp *= e;
    tmp += bz;
    tmp = Real(2 * e + c) - tmp;
    tmp *= f_cur;
    tmp2 = zm1;
    tmp2 *= e;
    tmp2 *= f_prev;
    tmp += tmp2;
    tmp /= c + e;
    std::swap(f_prev, f_cur);
    std::swap(f_cur, tmp);
    ++e_have;
  };

  Real w = Real(n) * nprime / (nprime - n);
  Real wp = pow(w, static_cast<long>(p0_ + 1));
  Real sum, term;
  long max_exp = -(1L << 40);
  for (std::size_t j = 0; j < g_.size(); ++j) {
    const int e = e_[j];
    const Real* fe;
    if (e == 0) {
      fe = nullptr;
    } else {
      while (e_have < e) step();
      fe = &f_cur;
    }
    term = g_[j];
    term *= wp;
    if (fe) term *= *fe;
    max_exp = std::max(max_exp, term.exponent2());
    sum += term;
    wp *= w;
  }
  if (cancel_bits) *cancel_bits = sum.is_zero() ? 0 : std::max(0L, max_exp - sum.exponent2());

  Real one_minus_z = (nprime - n) / (nprime + n);
  Real power = nprime + (L + 1);
  Real pref;
  if (nprime < Real(1L << 62)) {
    pref = pow(one_minus_z, power.to_long());
  } else {
    pref = pow(one_minus_z, power);
  }
  return norm_p * pref * sum;
}

Real DipoleKernel::free(const Real& energy, long* cancel_bits, Real* imag) const {
  if (energy <= 0) throw DomainError("dipole_free: energy must be positive");
  const int n = ref_.n(), L = L_;
  const long c = 2L * L + 2;
  Real k = sqrt(2 * energy);
  Real inv_n = Real(1) / n;
  Real den = sqr(inv_n) + sqr(k);
  // z = 2ik / (1/n + ik) = (2k^2 + 2ik/n) / (1/n^2 + k^2)
  Complex z(2 * sqr(k) / den, 2 * k * inv_n / den);
  Complex b(Real(L + 1), -1 / k);
  Complex bz = b * z;
  Complex zm1(z.re - 1, z.im);
  Complex f_prev(Real(1));
  Complex f_cur(1 - bz.re / c, -bz.im / c);
  Complex tmp, tmp2;
  int e_have = 1;
  auto step = [&]() {
    const long e = e_have;
    tmp.re = z.re;
    tmp.im = z.im;
    tmp.re *= e;
    tmp.im *= e;
    tmp += bz;
    tmp.re = Real(2 * e + c) - tmp.re;
    tmp.im = -tmp.im;
    tmp *= f_cur;
    tmp2 = zm1 * f_prev;
    tmp2.re *= e;
    tmp2.im *= e;
    tmp += tmp2;
    tmp.re /= c + e;
    tmp.im /= c + e;
    std::swap(f_prev, f_cur);
    std::swap(f_cur, tmp);
    ++e_have;
  };

  // mu = 1/n - ik, weights mu^(-p-1)
  Complex mu_inv(inv_n / den, k / den);
  Complex mp(Real(1));
  {
    Complex base = mu_inv;
    long ex = p0_ + 1;
    while (ex > 0) {
      if (ex & 1) mp *= base;
      ex >>= 1;
      if (ex) base *= base;
    }
  }
  Complex sum, term;
  long max_exp = -(1L << 40);
  for (std::size_t j = 0; j < g_.size(); ++j) {
    const int e = e_[j];
    term = mp;
    term *= g_[j];
    if (e > 0) {
      while (e_have < e) step();
      term *= f_cur;
    }
    max_exp = std::max(max_exp, exponent_of(term));
    sum += term;
    mp *= mu_inv;
  }
  const long sum_exp = exponent_of(sum);
  if (cancel_bits) *cancel_bits = std::max(0L, max_exp - sum_exp);

  // Phase (1-z)^(L+1), 1-z = (1/n - ik)^2 / (1/n^2 + k^2).
  Complex one_minus_z((sqr(inv_n) - sqr(k)) / den, -2 * inv_n * k / den);
  Complex ph(Real(1));
  {
    Complex base = one_minus_z;
    long ex = L + 1;
    while (ex > 0) {
      if (ex & 1) ph *= base;
      ex >>= 1;
      if (ex) base *= base;
    }
  }
  Complex t = ph * sum;

  // Amplitude: 2^(L+1) sqrt(prod (s^2 k^2 + 1)) / (2L+1)! * exp(-2 atan(kn)/k) / sqrt(1 - exp(-2 pi/k))
  Real prod(1);
  for (int s = 1; s <= L; ++s) prod *= sqr(k * s) + 1;
  Real amp = ldexp(sqrt(prod), L + 1) / factorial(2 * L + 1);
  amp *= exp(-2 * atan(k * n) / k);
  amp /= sqrt(-expm1(-2 * const_pi() / k));
  if (imag) *imag = amp * t.im;
  return amp * t.re;
}

RadialOverlap dipole_bound(const QuantumState& a, const QuantumState& b) {
  if (std::abs(a.l() - b.l()) != 1) throw DomainError("dipole_bound: selection rule |l - l'| = 1 violated");
  // Expand the shorter polynomial; the other state enters through 2F1.
  const bool swap = b.zeta() < a.zeta();
  const QuantumState& ref = swap ? b : a;
  const QuantumState& other = swap ? a : b;
  DipoleKernel kern(ref, other.l());
  RadialOverlap out{a, b, std::nullopt, b.l(), OverlapKind::BoundBound, Real(), 0, Real()};
  out.value = kern.bound(static_cast<long>(other.n()), &out.cancellation_bits);
  return out;
}

RadialOverlap dipole_free(const QuantumState& a, const Real& energy, int lp) {
  if (std::abs(a.l() - lp) != 1) throw DomainError("dipole_free: selection rule |l - l'| = 1 violated");
  if (energy <= 0) throw DomainError("dipole_free: energy must be positive");
  DipoleKernel kern(a, lp);
  RadialOverlap out{a, std::nullopt, energy, lp, OverlapKind::BoundFree, Real(), 0, Real()};
  out.value = kern.free(energy, &out.cancellation_bits, &out.imag_residue);
  return out;
}

Real dipole_free_quadrature(const QuantumState& a, const Real& energy, int lp, int digits) {
  if (std::abs(a.l() - lp) != 1) throw DomainError("dipole_free: selection rule |l - l'| = 1 violated");
  const int n = a.n(), l = a.l();
  const long bits = digits_to_bits(digits + 15) + 4L * a.zeta();
  PrecisionGuard guard(std::max(bits, Real::default_bits()));
  // Outer cutoff where r^(l+zeta+2) exp(-r/n) is below the target.
  double rmax = 4.0 * n * n + 10;
  for (int it = 0; it < 50; ++it)
    rmax = n * ((digits + 8) * std::log(10.0) + (l + a.zeta() + 3) * std::log(rmax));
  Real k = sqrt(2 * energy);
  const double width = std::min(0.5 * n, 1.0 / k.to_double());
  const int panels = static_cast<int>(std::ceil(rmax / width));
  auto br = bound_radial(a);
  RealFunction f = [&](const Real& r) { return r * r * r * (*br)(r) * radial_continuum(energy, lp, r); };
  Real total;
  for (int p = 0; p < panels; ++p) {
    Real lo = Real(rmax) * p / panels, hi = Real(rmax) * (p + 1) / panels;
    total += integrate_panel(f, lo, hi, 40);
  }
  return total;
}

}  // namespace bethe
