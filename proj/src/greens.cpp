#include "bethe/greens.hpp"

#include "bethe/accel.hpp"
#include "bethe/hydro.hpp"
#include "bethe/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace bethe {

namespace {

Real relative_eps(long bits) { return ldexp(Real(1), -bits); }

long cancellation(const Real& mags, const Real& sum) {
  if (sum.is_zero()) return mags.is_zero() ? 0 : mags.exponent2() + 64;
  return std::max(0L, mags.exponent2() - sum.exponent2());
}

void check_pole(const Real& gap, const char* who) {
  if (gap.is_zero() || abs(gap).exponent2() < -(Real::default_bits() / 2))
    throw PoleProximityError(std::string(who) + ": evaluation point sits on a pole");
}

// u_L(r) = r D_L R_nl(r) = sum_m f_m r^(l+m) exp(-r/n), normalization included.
std::vector<Real> radial_derivative_poly(const QuantumState& s, int L) {
  auto br = bound_radial(s);
  const Real N = br->norm();
  const int n = s.n(), l = s.l();
  std::vector<Real> f(s.zeta() + 1, Real(0));
  for (std::size_t j = 0; j < br->q.size(); ++j) {
    Real c = N * Real(br->q[j]);
    const long jj = static_cast<long>(j);
    if (L == l + 1)
      f[j] += c * jj;
    else
      f[j] += c * (2L * l + 1 + jj);
    f[j + 1] -= c / static_cast<long>(n);
  }
  return f;
}

struct ChannelSetup {
  int L = 0;
  int alpha = 0;
  Real w;
  std::vector<Real> G;  // f_m Gamma(beta_m+1) s^(-beta_m-1)
  std::vector<int> e;   // e_m = m + l - L
};

std::vector<ChannelSetup> channels(const QuantumState& st, const Real& nu) {
  std::vector<ChannelSetup> out;
  const int l = st.l();
  const Real s = Real(1) / static_cast<long>(st.n()) + Real(1) / nu;
  for (int L : {l - 1, l + 1}) {
    if (L < 0) continue;
    ChannelSetup c;
    c.L = L;
    c.alpha = 2 * L + 1;
    c.w = channel_weight(l, L);
    auto f = radial_derivative_poly(st, L);
    for (std::size_t m = 0; m < f.size(); ++m) {
      if (f[m].is_zero()) continue;
      const long beta = L + 1 + l + static_cast<long>(m);
      c.G.push_back(f[m] * factorial(beta) / pow(s, beta + 1));
      c.e.push_back(static_cast<int>(m) + l - L);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// nu / ((nu/2)^(alpha+1) alpha!)
Real channel_prefactor(const Real& nu, int alpha) {
  return nu / (pow(nu / 2L, alpha + 1L) * factorial(alpha));
}

// Laguerre-sum form, used for x^2 < 1/2.
Real channel_direct(const ChannelSetup& c, const Real& t, const Real& nu, const Real& X, long* cancel) {
  const int alpha = c.alpha;
  const Real yx = Real(2) / (1L - t);
  int deg = 0;
  for (int e : c.e) deg = std::max(deg, e);
  std::vector<Real> eta(deg + 1, Real(0));
  for (std::size_t m = 0; m < c.G.size(); ++m) {
    Real v = c.G[m];
    for (int i = 0; i <= c.e[m]; ++i) {
      eta[i] += v;
      v *= Real(i - c.e[m]) * yx;
      v /= static_cast<long>(alpha + 1 + i) * (i + 1L);
    }
  }
  const Real eps = relative_eps(Real::default_bits() + 8);
  const double Xd = X.to_double();
  const long kpeak = static_cast<long>((alpha + 2.0 * deg) * Xd / (1 - Xd)) + 2;
  if (kpeak > 1000000) throw AccelerationError("sturmian_P: Laguerre sum impractical this close to t = 0");
  Real S, mags, binX(1), Q, r, term, den;
  int quiet = 0;
  for (long k = 0;; ++k) {
    Q = eta[0];
    r = Real(1);
    for (int i = 1; i <= std::min<long>(deg, k); ++i) {
      r *= Real(i - 1 - k);
      Q += eta[i] * r;
    }
    den = (k + c.L + 1L) - nu;
    check_pole(den, "sturmian_P");
    term = binX * Q * Q / den;
    S += term;
    mags += abs(term);
    if (k > kpeak && abs(term) <= eps * abs(S)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (k > 2000000) throw AccelerationError("sturmian_P: Laguerre sum does not converge");
    binX *= X * (k + 1L + alpha);
    binX /= k + 1L;
  }
  *cancel = std::max(*cancel, cancellation(mags, S));
  return c.w * channel_prefactor(nu, alpha) * S;
}

// E(A,b,X) = sum_k prod_{i=1..A} (b+1-i)/(b+k+1-i) X^k.
Real e_series(long A, const Real& b, const Real& X) {
  const Real eps = relative_eps(Real::default_bits() + 8);
  const long kdirect = 4000;
  Real term(1), s(1);
  const double bd = std::abs(b.to_double());
  long k = 0;
  for (; k < kdirect; ++k) {
    term *= (b + (1 - A + k)) * X;
    term /= b + (1 + k);
    s += term;
    if (k + 1 > A + bd + 2 && abs(term) <= eps * abs(s)) return s;
  }
  // Slowly convergent tail (small A, X near 1): condensation transform.
  const long k0 = k + 1;
  TermGenerator g;
  g.term = [&, k0](const Real& idx) {
    Real kk = idx + k0;
    Real p = pow(X, kk);
    for (long i = 1; i <= A; ++i) {
      p *= b + (1 - i);
      p /= b + kk + (1 - i);
    }
    return p;
  };
  // callers run with at least 40 guard bits
  const int digits = static_cast<int>((Real::default_bits() - 40) / 3.33);
  auto res = cnct_sum(g, digits, eps * abs(s), 120);
  return s + res.sum;
}

// Connection formula of 2F1(1, b+1-A; b+1; X) at the degenerate exponent
// difference A - 1, multiplied by (1-X)^(1-A)/b.
Real h_logarithmic(long A, const Real& b, const Real& X) {
  const Real u = 1L - X;
  const Real eps = relative_eps(Real::default_bits() + 8);
  Real s1, c(1), up = pow(u, 1 - A);
  for (long k = 0; k <= A - 2; ++k) {
    s1 += c * up;
    if (k == A - 2) break;
    c *= b + (1 - A + k);
    c /= 2 - A + k;
    up *= u;
  }
  s1 /= A - 1;
  Real pb(1);
  for (long i = 1; i < A; ++i) pb *= b - i;
  const Real lnu = log(u);
  Real psi_b = digamma(b), psi_1 = -const_euler();
  Real coef = Real(1) / factorial(A - 1), s2, term;
  const double kmin = std::abs(b.to_double()) * u.to_double() / std::max(1e-3, 1 - u.to_double()) + 4;
  for (long k = 0;; ++k) {
    term = coef * (lnu - psi_1 + psi_b);
    s2 += term;
    if (k > kmin && abs(term) <= eps * abs(s2)) break;
    if (k > 1000000) throw AccelerationError("degenerate_h: logarithmic series does not converge");
    coef *= (b + k) * u;
    coef /= k + 1;
    psi_1 += Real(1) / (k + 1);
    psi_b += Real(1) / (b + k);
  }
  if (A % 2 == 1) pb = -pb;  // -(-1)^(A-1)
  return s1 + pb * s2;
}

// Hypergeometric closed form, used for x^2 >= 1/2.
Real channel_hyper(const ChannelSetup& c, const Real& t, const Real& nu, const Real& x, const Real& X,
                   long* cancel) {
  const int alpha = c.alpha;
  const Real y = Real(2) / (1L + t);
  int deg = 0;
  for (int e : c.e) deg = std::max(deg, e);
  std::vector<Real> gam(deg + 1, Real(0));
  const Real mx = -x;
  for (std::size_t m = 0; m < c.G.size(); ++m) {
    Real v = c.G[m] * pow(mx, -static_cast<long>(c.e[m]));
    for (int i = 0; i <= c.e[m]; ++i) {
      gam[i] += v;
      v *= Real(i - c.e[m]) * y;
      v /= static_cast<long>(alpha + 1 + i) * (i + 1L);
    }
  }
  std::vector<Real> delta(2 * deg + 1, Real(0));
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; j <= deg; ++j) {
      Real bin(1);  // (-1)^s C(i,s) C(j,s) s!
      for (int s = 0; s <= std::min(i, j); ++s) {
        if (s > 0) {
          bin *= -static_cast<long>(i - s + 1) * (j - s + 1);
          bin /= s;
        }
        delta[i + j - s] += gam[i] * gam[j] * bin;
      }
    }
  const Real b = (c.L + 1L) - nu;
  check_pole(b, "sturmian_P");
  Real S, mags, term, poch(1);
  for (int q = 0; q <= 2 * deg; ++q) {
    if (q > 0) poch *= static_cast<long>(alpha + q);
    if (delta[q].is_zero()) continue;
    const long A = alpha + 1 + q;
    term = delta[q] * poch * degenerate_h(A, b, X);
    S += term;
    mags += abs(term);
  }
  *cancel = std::max(*cancel, cancellation(mags, S));
  return c.w * channel_prefactor(nu, alpha) * S;
}

Real sturmian_at(const QuantumState& st, const Real& t, SturmianForm form, long* cancel) {
  const Real nu = t * static_cast<long>(st.n());
  const Real x = (1L - t) / (1L + t);
  const Real X = x * x;
  const bool direct = form == SturmianForm::DirectSum || (form == SturmianForm::Auto && X < Real(0.5));
  Real total;
  for (const auto& c : channels(st, nu))
    total += direct ? channel_direct(c, t, nu, X, cancel) : channel_hyper(c, t, nu, x, X, cancel);
  return total / 3L;
}

}  // namespace

Real degenerate_h(long A, const Real& b, const Real& X, HMethod method) {
  if (A < 2) throw DomainError("degenerate_h: A must be >= 2");
  if (!(X > 0L) || !(X < 1L)) throw DomainError("degenerate_h: X must lie in (0,1)");
  check_pole(b, "degenerate_h");
  if (method == HMethod::Auto) method = X >= Real(0.5) ? HMethod::Logarithmic : HMethod::Series;
  if (method == HMethod::Logarithmic) return h_logarithmic(A, b, X);
  return pow(1L - X, 1 - A) * e_series(A, b, X) / b;
}

Real phi(int n, const Real& t, int target_digits, double switch_x2) {
  if (n < 1) throw DomainError("phi: n must be >= 1");
  if (!(t > 0L) || t > 1L) throw DomainError("phi: t must lie in (0,1]");
  // x = 0: only the k = 0 term survives, even though nt = n is an integer.
  if (t == 1L) return Real(1);
  const long bits = Real::default_bits();
  PrecisionGuard g(bits + 32);
  const Real nu = t * static_cast<long>(n);
  const Real x = (1L - t) / (1L + t);
  const Real X = x * x;
  const Real tol = pow(Real(10), -static_cast<long>(target_digits));
  const Real eps = relative_eps(bits + 8);
  Real S, term, p(1), den;
  // Head: every term up to the pole region, then either converge directly or
  // hand the positive monotone tail to the accelerator.
  const long head = static_cast<long>(std::ceil(nu.to_double())) + 1;
  const bool direct = X < Real(switch_x2);
  long k = 0;
  for (;; ++k) {
    den = Real(k) - nu;
    if (abs(den) < tol) throw PoleProximityError("phi: nt within 10^-" + std::to_string(target_digits) +
                                                  " of an integer");
    term = p / den;
    S += term;
    p *= X;
    if (!direct && k >= head) break;
    if (k > head && abs(term) <= eps * abs(S)) break;
    if (k > 5000000) throw AccelerationError("phi: direct sum does not converge");
  }
  if (!direct) {
    const long k0 = k + 1;
    TermGenerator gen;
    gen.term = [&, k0](const Real& idx) {
      Real kk = idx + k0;
      return pow(X, kk) / (kk - nu);
    };
    auto res = cnct_sum(gen, static_cast<int>(bits / 3.33), eps * abs(S), 120);
    S += res.sum;
  }
  Real out = -nu * S;
  out.round_to(bits);
  return out;
}

Real p_matrix_4p(const Real& t, int target_digits, FourPVariant variant) {
  if (!(t > 0L) || !(t < 1L)) throw DomainError("p_matrix_4p: t must lie in (0,1)");
  const long bits = Real::default_bits();
  const Real omt = 1L - t;
  // (t-1)^-8 cancellation near t = 1
  const long boost = 32 + std::max(0L, -8 * omt.exponent2());
  PrecisionGuard g(bits + boost);
  Real tt(t);
  tt.round_to(bits + boost);
  const Real t2 = tt * tt;
  static const long a_coef[] = {75, -1700, 9954, -21124, 14907};
  static const long b_coef[] = {15, -30, -60, 150, 1547, 15956, -154368, -142420, 1166645, 357354,
                                -2744516, -276066, 2046129};
  Real A, B, pw(1);
  for (long c : a_coef) {
    A += pw * c;
    pw *= t2;
  }
  pw = Real(1);
  for (long c : b_coef) {
    B += pw * c;
    pw *= tt;
  }
  const Real tm8 = pow(tt - 1L, 8);
  const Real tp = tt + 1L;
  const Real den1 = 45L * tm8 * pow(tp, 8);
  const Real den2 = variant == FourPVariant::Corrected ? 45L * tm8 * pow(tp, 6) : den1;
  Real out = -1024L * pow(tt, 7) / den1 * phi(4, tt, target_digits) * A + 2L * t2 / den2 * B;
  out.round_to(bits);
  return out;
}

Real circular_term(long k, int n, const Real& t) {
  if (n < 1 || k < 0) throw DomainError("circular_term: need n >= 1, k >= 0");
  const Real x = (1L - t) / (1L + t);
  const Real omt = 1L - t;
  const long nn = n;
  Real pre = -pow(Real(2), 4 * nn) * pow(t, 2 * nn) * pow(1L + t, -4 * nn) / ((2 * nn - 1) * factorial(2 * nn - 1));
  pre *= pow(x, 2 * k) / factorial(k);
  Real br = 4L * pow(t, 3) * factorial(k + 2 * nn + 1) / (3L * pow(1L + t, 4) * (Real(-1 - k - nn) + t * nn));
  if (n > 1) {
    Real cp = Real((k + nn - 1) * (2 * nn - 1)) * omt * omt - 2L * t * (k * (k - 1));
    br += (nn - 1) * t * cp * cp * factorial(k + 2 * nn - 3) /
          (3L * nn * pow(omt, 4) * (Real(1 - k - nn) + t * nn));
  }
  return pre * br;
}

Real circular_series(int n, const Real& t, int target_digits, double switch_x2) {
  if (n < 1) throw DomainError("circular_series: n must be >= 1");
  if (!(t > 0L) || !(t < 1L)) throw DomainError("circular_series: t must lie in (0,1)");
  const long bits = Real::default_bits();
  const Real x = (1L - t) / (1L + t);
  const Real X = x * x;
  if (!(X <= Real(switch_x2))) {
    // Near t = 0 the terms peak at k ~ 2n/t; the same series in closed
    // hypergeometric form converges uniformly.
    long cancel = 0;
    PrecisionGuard g(bits + 64);
    Real out = sturmian_at(QuantumState(n, n - 1), t, SturmianForm::Hypergeometric, &cancel);
    out.round_to(bits);
    return out;
  }
  (void)target_digits;
  PrecisionGuard g(bits + 32);
  const long nn = n;
  const Real omt = 1L - t;
  const Real pre =
      -pow(Real(2), 4 * nn) * pow(t, 2 * nn) * pow(1L + t, -4 * nn) / ((2 * nn - 1) * factorial(2 * nn - 1));
  const Real c1 = (nn - 1) * t / (3L * nn * pow(omt, 4));
  const Real c2 = 4L * pow(t, 3) / (3L * pow(1L + t, 4));
  // a_k = Gamma(k+2n-2)/k!, b_k = Gamma(k+2n+2)/k!, times X^k
  Real a = n > 1 ? factorial(2 * nn - 3) : Real(0);
  Real b = factorial(2 * nn + 1);
  const Real eps = relative_eps(bits + 8);
  const double Xd = X.to_double();
  const long kpeak = static_cast<long>((2.0 * n + 6) * Xd / (1 - Xd)) + 2;
  Real S, term, cp, d1, d2;
  int quiet = 0;
  for (long k = 0;; ++k) {
    d2 = Real(-1 - k - nn) + t * nn;
    term = c2 * b / d2;
    if (n > 1) {
      cp = Real((k + nn - 1) * (2 * nn - 1)) * omt * omt - 2L * t * (k * (k - 1));
      d1 = Real(1 - k - nn) + t * nn;
      check_pole(d1, "circular_series");
      term += c1 * cp * cp * a / d1;
    }
    S += term;
    if (k > kpeak && abs(term) <= eps * abs(S)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (k > 2000000) throw AccelerationError("circular_series: sum does not converge");
    a *= X * (k + 2 * nn - 2);
    a /= k + 1;
    b *= X * (k + 2 * nn + 2);
    b /= k + 1;
  }
  Real out = pre * S;
  out.round_to(bits);
  return out;
}

Real circular_f(int n, const Real& t, int target_digits) {
  const long bits = Real::default_bits();
  // ~t^-3 cancellation inside the brace
  const long boost = 16 + std::max(0L, -3 * t.exponent2());
  PrecisionGuard g(bits + boost);
  Real tt(t);
  tt.round_to(bits + boost);
  const Real P = circular_series(n, tt, target_digits);
  const Real t2 = tt * tt;
  Real br = (t2 - 1L) / (static_cast<long>(n) * t2) * P + Real(2) / (3L * n);
  if (n == 1) br -= Real(8) / 3L * t2;
  Real out = br / (t2 * tt);
  out.round_to(bits);
  return out;
}

double pole_distance(const QuantumState& s, const Real& t) {
  double best = 1e300;
  const double td = t.to_double();
  for (int np : pole_shells(s)) best = std::min(best, std::abs(td - static_cast<double>(np) / s.n()));
  return best;
}

std::vector<int> pole_shells(const QuantumState& s) {
  std::vector<int> out;
  const int lo = s.l() >= 1 ? s.l() : 2;  // L = l-1 needs n' >= l; L = l+1 needs n' >= l+2
  for (int np = lo; np < s.n(); ++np) out.push_back(np);
  return out;
}

Real propagator_residue(const QuantumState& s, int nprime) {
  const int n = s.n(), l = s.l();
  if (nprime >= n || nprime < 1) throw DomainError("propagator_residue: need 1 <= n' < n");
  Real acc;
  for (int L : {l - 1, l + 1}) {
    if (L < 0 || nprime < L + 1) continue;
    auto d = dipole_bound(s, QuantumState(nprime, L));
    acc += channel_weight(l, L) * d.value * d.value;
  }
  const Real dE = bound_energy(nprime) - bound_energy(n);
  const long np = nprime;
  return -(Real(np * np * np) / (3L * n)) * dE * dE * acc;
}

PropagatorElement sturmian_P(const QuantumState& s, const Real& t, int target_digits, SturmianForm form) {
  if (!(t > 0L) || !(t < 1L)) throw DomainError("sturmian_P: t must lie in (0,1)");
  (void)target_digits;
  const long bits = Real::default_bits();
  PropagatorElement out{s, t, Real(0), pole_distance(s, t), 0};
  long guard = 48;
  for (int attempt = 0; attempt < 6; ++attempt) {
    long cancel = 0;
    Real v;
    {
      PrecisionGuard g(bits + guard);
      Real tt(t);
      tt.round_to(bits + guard);
      v = sturmian_at(s, tt, form, &cancel);
    }
    if (cancel + 24 <= guard) {
      v.round_to(bits);
      out.value = v;
      out.cancellation_bits = cancel;
      return out;
    }
    guard = cancel + 48;
  }
  throw PrecisionExhaustedError("sturmian_P: cancellation keeps growing");
}

Real spectral_P(const QuantumState& s, const Real& t, int target_digits) {
  const int n = s.n(), l = s.l();
  const long bits = Real::default_bits();
  PrecisionGuard g(bits + 32);
  const Real En = bound_energy(n);
  const Real om = photon_energy(t, n);
  Real total;
  for (int L : {l - 1, l + 1}) {
    if (L < 0) continue;
    DipoleKernel K(s, L);
    auto bterm = [&](const Real& np) {
      Real dE = -Real(1) / (2L * np * np) - En;
      Real d = K.bound(np);
      return dE * dE * d * d / (dE + om);
    };
    Real acc;
    const long n0 = std::max<long>(n + 1, 4L * n);
    for (long np = L + 1; np < n0; ++np) {
      if (np == n) continue;
      acc += bterm(Real(np));
    }
    TermGenerator gen;
    gen.term = [&](const Real& idx) { return bterm(idx + n0); };
    acc += cnct_sum(gen, target_digits + 2, Real(0), 120).sum;
    // continuum in y = ln E
    RealFunction fc = [&](const Real& y) {
      Real E = exp(y);
      Real dE = E - En;
      Real d = K.free(E);
      return dE * dE * d * d / (dE + om) * E;
    };
    const double rel = std::pow(10.0, -(target_digits + 2));
    const Real tiny = pow(Real(10), -static_cast<long>(target_digits + 6));
    Real lo(-140);
    for (long edge : {-60L, -20L, -8L, -3L, 0L, 3L, 8L, 20L, 40L, 70L}) {
      Real hi(edge);
      acc += integrate_adaptive(fc, lo, hi, 24, rel, tiny).value;
      lo = hi;
    }
    total += channel_weight(l, L) * acc;
  }
  Real out = total / 3L;
  out.round_to(bits);
  return out;
}

}  // namespace bethe
