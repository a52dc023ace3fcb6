#include "bethe/integral_rep.hpp"

#include "bethe/greens.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace bethe {

const char* to_string(PSource s) {
  switch (s) {
    case PSource::Auto: return "auto";
    case PSource::Sturmian: return "sturmian";
    case PSource::Circular: return "circular";
    case PSource::FourPClosed: return "4p";
  }
  return "?";
}

PSource psource_from_string(const std::string& s) {
  if (s == "auto") return PSource::Auto;
  if (s == "sturmian") return PSource::Sturmian;
  if (s == "circular") return PSource::Circular;
  if (s == "4p") return PSource::FourPClosed;
  throw DomainError("unknown P source '" + s + "' (auto, sturmian, circular, 4p)");
}

namespace {

PSource resolve(const QuantumState& s, PSource src) {
  switch (src) {
    case PSource::Auto: return PSource::Sturmian;
    case PSource::Circular:
      if (!s.circular()) throw UnsupportedMethodError("circular P source needs n - l = 1");
      return src;
    case PSource::FourPClosed:
      if (!(s.n() == 4 && s.l() == 1)) throw UnsupportedMethodError("closed-form 4P source needs (n,l) = (4,1)");
      return src;
    default: return src;
  }
}

// g(t) = (t^2 - 1)/(n t^5), the factor multiplying P in F.
Real p_factor(int n, const Real& t) {
  const Real t2 = t * t;
  return (t2 - 1L) / (static_cast<long>(n) * t2 * t2 * t);
}

}  // namespace

Real bethe_integrand(const QuantumState& s, const Real& t, PSource src, bool s_counterterm) {
  if (!(t > 0L) || !(t < 1L)) throw DomainError("bethe_integrand: t must lie in (0,1)");
  src = resolve(s, src);
  const long bits = Real::default_bits();
  const int n = s.n();
  const bool sstate = s.l() == 0;
  // The brace is a difference of O(1/n) terms divided by t^3, so P needs
  // about 3 log2(1/t) bits beyond the working precision.
  const long boost = 32 + 3 * std::max(0L, -t.exponent2());
  const int digits = static_cast<int>(bits / 3.33);
  PrecisionGuard g(bits + boost);
  Real tt(t);
  tt.round_to(bits + boost);
  Real out;
  if (src == PSource::Circular && s_counterterm) {
    out = circular_f(n, tt, digits);
  } else {
    Real P;
    if (src == PSource::FourPClosed)
      P = p_matrix_4p(tt, digits);
    else if (src == PSource::Circular)
      P = circular_series(n, tt, digits);
    else
      P = sturmian_P(s, tt, digits).value;
    const Real t2 = tt * tt;
    Real br = (t2 - 1L) / (static_cast<long>(n) * t2) * P + Real(2) / (3L * n);
    if (sstate && s_counterterm) br -= Real(8) / 3L * t2;
    out = br / (t2 * tt);
  }
  out.round_to(bits);
  return out;
}

PoleSet bound_poles(const QuantumState& s) {
  PoleSet ps;
  for (int np : pole_shells(s)) {
    Pole p;
    p.nprime = np;
    p.t = Real(np) / static_cast<long>(s.n());
    p.residue = p_factor(s.n(), p.t) * propagator_residue(s, np);
    ps.poles.push_back(std::move(p));
  }
  return ps;
}

Real symmetric_residue(const RealFunction& f, const Real& tp, const Real& h) {
  std::vector<Real> r, a;
  Real hh = h;
  for (int i = 0; i < 3; ++i) {
    Real fp = f(tp + hh), fm = f(tp - hh);
    r.push_back(hh * (fp - fm) / 2L);
    a.push_back(hh * (fp + fm) / 2L);
    hh /= 2L;
  }
  // A simple pole leaves h (f(+) + f(-))/2 = O(h); a higher one makes it grow.
  if (abs(a[2]) > abs(a[0]) && abs(a[2]) > abs(r[2]) * ldexp(Real(1), -20))
    throw BetheError("symmetric_residue: pole is not simple");
  // r(h) = res + c h^2 + d h^4
  Real r1 = (4L * r[1] - r[0]) / 3L;
  Real r2 = (4L * r[2] - r[1]) / 3L;
  return (16L * r2 - r1) / 15L;
}

QuadResult pv_integrate(const RealFunction& f, const PoleSet& poles, int target_digits, const PvOptions& opt) {
  const long bits = Real::default_bits();
  std::vector<Real> bp;
  for (const auto& p : poles.poles) {
    if (!(p.t > 0L) || !(p.t < 1L)) throw DomainError("pv_integrate: pole outside (0,1)");
    bp.push_back(p.t);
  }
  std::sort(bp.begin(), bp.end());
  std::vector<Real> edges;
  for (std::size_t i = 0; i < bp.size(); ++i) {
    edges.push_back(bp[i]);
    if (i + 1 < bp.size()) edges.push_back((bp[i] + bp[i + 1]) / 2L);
  }
  if (edges.empty()) edges.push_back(Real(1) / 2L);
  edges.push_back(Real(1));
  // Geometric grading toward t = 0 by factors of 4.
  const Real t_min = opt.t_min > 0 ? Real(opt.t_min) : pow(Real(10), -static_cast<long>(target_digits + 3));
  std::vector<Real> low;
  for (Real a = edges.front() / 4L; a > t_min; a /= 4L) low.push_back(a);
  low.push_back(t_min);
  std::reverse(low.begin(), low.end());
  low.insert(low.end(), edges.begin(), edges.end());
  edges = std::move(low);

  RealFunction g = [&](const Real& t) {
    long boost = 8;
    for (const auto& p : poles.poles) boost = std::max(boost, 8 - (t - p.t).exponent2());
    PrecisionGuard guard(bits + boost);
    Real v = f(t);
    for (const auto& p : poles.poles) v -= p.residue / (t - p.t);
    v.round_to(bits);
    return v;
  };
  const Real rel = pow(Real(10), -static_cast<long>(target_digits));
  QuadResult q = integrate_panels(g, edges, opt.order, Real(0), rel, opt.exec, opt.max_generations);
  // PV over [t_min, 1] of the subtracted pole terms.
  for (const auto& p : poles.poles) q.value += p.residue * log((1L - p.t) / (p.t - t_min));
  // [0, t_min] is dropped; f is bounded there.
  q.error += abs(t_min * f(t_min)).to_double();
  return q;
}

BetheLogResult bethe_integral_once(const QuantumState& s, int target_digits, const IntegralOptions& opt) {
  if (s.zeta() > opt.max_zeta)
    throw UnsupportedMethodError("integral representation limited to n - l <= " + std::to_string(opt.max_zeta) +
                                 "; use the spectral method for " + s.label());
  const PSource src = resolve(s, opt.source);
  const auto t0 = std::chrono::steady_clock::now();
  const bool sstate = s.l() == 0;
  PvOptions pv;
  pv.order = opt.order > 0 ? opt.order : std::clamp(12 + target_digits / 2, 20, 48);
  pv.exec = opt.exec;
  // F is O(1) near t = 0 for S states and O(t) otherwise.
  const int tail_digits = sstate ? target_digits + 3 : target_digits / 2 + 3;
  pv.t_min = std::pow(10.0, -tail_digits);
  RealFunction f = [&](const Real& t) { return bethe_integrand(s, t, src); };
  QuadResult q = pv_integrate(f, bound_poles(s), target_digits + 2, pv);
  BetheLogResult r;
  r.n = s.n();
  r.l = s.l();
  r.value = Real(-3) / 4L * q.value;
  if (sstate) r.value -= 2L * log(Real(s.n()));
  r.method = std::string("integral/") + to_string(src);
  r.error = 0.75 * q.error;
  r.bits = Real::default_bits();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

BetheLogResult bethe_integral(const QuantumState& s, const WorkingPrecision& prec, const IntegralOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  BetheLogResult last;
  auto out = escalate(prec, [&](long) {
    last = bethe_integral_once(s, prec.target_digits, opt);
    return last.value;
  });
  last.value = out.value;
  last.bits = out.bits;
  last.error = std::max(last.error, abs(out.value - out.previous).to_double());
  last.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return last;
}

}  // namespace bethe
