#include "bethe/spectral_rep.hpp"

#include "bethe/accel.hpp"
#include "bethe/hydro.hpp"
#include "bethe/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <memory>
#include <vector>

namespace bethe {

const char* to_string(Kernel k) {
  switch (k) {
    case Kernel::Log: return "log";
    case Kernel::Unit: return "unit";
    case Kernel::TRK: return "trk";
  }
  return "?";
}

namespace {

Real kernel_weight(Kernel k, const Real& dE) {
  switch (k) {
    case Kernel::Log: return dE * dE * dE * log(2L * abs(dE));
    case Kernel::Unit: return dE * dE * dE;
    case Kernel::TRK: return dE;
  }
  return Real(0);
}

Real prefactor(Kernel k, int n) {
  if (k == Kernel::TRK) return Real(1);
  const long nn = n;
  return Real(nn * nn * nn) / 2L;
}

void atomic_max(std::atomic<long>& a, long v) {
  long cur = a.load();
  while (v > cur && !a.compare_exchange_weak(cur, v)) {
  }
}

int gl_order(int digits, int requested) { return requested > 0 ? requested : std::clamp(10 + digits / 2, 16, 40); }

struct Channels {
  std::vector<int> L;
  std::vector<Real> w;
  std::vector<std::unique_ptr<DipoleKernel>> kern;
};

Channels make_channels(const QuantumState& s) {
  Channels c;
  for (int L : {s.l() - 1, s.l() + 1}) {
    if (L < 0) continue;
    c.L.push_back(L);
    c.w.push_back(channel_weight(s.l(), L));
    c.kern.push_back(std::make_unique<DipoleKernel>(s, L));
  }
  return c;
}

// Runs body at bits + guard, widening the guard until the reported
// cancellation leaves at least 24 spare bits.
template <class F>
PartResult with_guard(F body) {
  const long bits = Real::default_bits();
  long guard = 32;
  for (int attempt = 0; attempt < 6; ++attempt) {
    PartResult r;
    {
      PrecisionGuard g(bits + guard);
      r = body();
    }
    if (r.cancellation_bits + 24 <= guard) {
      r.value.round_to(bits);
      return r;
    }
    guard = r.cancellation_bits + 40;
  }
  throw PrecisionExhaustedError("spectral: cancellation keeps growing");
}

}  // namespace

PartResult bound_contribution(const QuantumState& s, int target_digits, const SpectralOptions& opt) {
  return with_guard([&]() {
    PartResult r;
    const int n = s.n();
    const Real En = bound_energy(n);
    Channels ch = make_channels(s);
    std::atomic<long> cancel{0};
    auto term = [&](std::size_t c, const Real& np) {
      long cb = 0;
      Real d = ch.kern[c]->bound(np, &cb);
      atomic_max(cancel, cb);
      Real dE = -Real(1) / (2L * np * np) - En;
      return ch.w[c] * kernel_weight(opt.kernel, dE) * d * d;
    };
    const long n0 = std::max<long>(static_cast<long>(opt.explicit_factor) * n, n + 2);
    // Explicit range, both channels, fixed reduction order.
    std::vector<std::pair<std::size_t, long>> idx;
    for (std::size_t c = 0; c < ch.L.size(); ++c)
      for (long np = ch.L[c] + 1; np <= n0; ++np)
        if (np != n) idx.emplace_back(c, np);
    std::vector<Real> vals(idx.size());
    for_each_index(idx.size(), opt.exec, [&](std::size_t i) { vals[i] = term(idx[i].first, Real(idx[i].second)); });
    Real sum, mags;
    for (auto& v : vals) {
      sum += v;
      mags += abs(v);
    }
    r.evaluations = static_cast<long>(vals.size());
    // Tail n' > n0: monotone, ~ n'^-3.
    TermGenerator g;
    g.term = [&](const Real& k) {
      Real np = k + (n0 + 1);
      Real v;
      for (std::size_t c = 0; c < ch.L.size(); ++c) v += term(c, np);
      return v;
    };
    const Real tol = pow(Real(10), -static_cast<long>(target_digits + 4)) * mags;
    auto tail = cnct_sum(g, target_digits + 4, tol, opt.cnct_terms, opt.exec);
    sum += tail.sum;
    const Real pf = prefactor(opt.kernel, n);
    r.value = pf * sum;
    r.error = (pf * tail.error).to_double();
    r.cancellation_bits = std::max(cancel.load(), mags.exponent2() - sum.exponent2());
    return r;
  });
}

PartResult continuum_contribution(const QuantumState& s, int target_digits, const SpectralOptions& opt) {
  return with_guard([&]() {
    PartResult r;
    const int n = s.n();
    const Real En = bound_energy(n);
    const Real eps0 = -En;
    Channels ch = make_channels(s);
    std::atomic<long> cancel{0};
    RealFunction f = [&](const Real& y) {
      Real E = eps0 * exp(y);
      Real acc;
      for (std::size_t c = 0; c < ch.L.size(); ++c) {
        long cb = 0;
        Real d = ch.kern[c]->free(E, &cb);
        atomic_max(cancel, cb);
        acc += ch.w[c] * d * d;
      }
      return acc * kernel_weight(opt.kernel, E - En) * E;
    };
    const int order = gl_order(target_digits, opt.order);
    const Real rel = pow(Real(10), -static_cast<long>(target_digits + 2));
    // Threshold side decays like e^y; unit panels where the integrand turns over.
    const double ylo = -2.303 * (target_digits + 4) - 4;
    std::vector<Real> edges;
    for (double y = ylo; y < -4; y += 4) edges.emplace_back(y);
    for (int y = -4; y <= 8; ++y) edges.emplace_back(static_cast<long>(y));
    for (int y = 12; y <= 40; y += 4) edges.emplace_back(static_cast<long>(y));
    QuadResult q = integrate_panels(f, edges, order, Real(0), rel, opt.exec);
    Real sum = q.value;
    double err = q.error;
    long evals = q.evaluations;
    // High-energy tail: extend until two successive panels are negligible.
    Real lo(40);
    int quiet = 0;
    for (int i = 0; i < 200 && quiet < 2; ++i) {
      Real hi = lo + 8L;
      Real tol = rel * abs(sum);
      QuadResult p = integrate_panels(f, {lo, hi}, order, tol / 4L, Real(0), opt.exec);
      sum += p.value;
      err += p.error;
      evals += p.evaluations;
      quiet = abs(p.value) <= tol / 16L ? quiet + 1 : 0;
      lo = hi;
    }
    if (quiet < 2) throw QuadratureError("continuum: high-energy tail does not decay");
    const Real pf = prefactor(opt.kernel, n);
    r.value = pf * sum;
    // [-inf, ylo] is dropped; the integrand decays like e^y there.
    r.error = (pf * (Real(err) + abs(f(Real(ylo))))).to_double();
    r.evaluations = evals;
    r.cancellation_bits = cancel.load();
    return r;
  });
}

SpectralSplit spectral_split(const QuantumState& s, int target_digits, const SpectralOptions& opt) {
  SpectralSplit sp;
  auto b = bound_contribution(s, target_digits, opt);
  auto c = continuum_contribution(s, target_digits, opt);
  sp.B = b.value;
  sp.C = c.value;
  sp.B_error = b.error;
  sp.C_error = c.error;
  return sp;
}

BetheLogResult bethe_spectral(const QuantumState& s, const WorkingPrecision& prec, const SpectralOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  SpectralSplit last;
  auto out = escalate(prec, [&](long) {
    last = spectral_split(s, prec.target_digits, opt);
    return last.B + last.C;
  });
  BetheLogResult r;
  r.n = s.n();
  r.l = s.l();
  r.value = out.value;
  r.method = "spectral";
  r.bound_part = last.B;
  r.continuum_part = last.C;
  r.error = std::max(last.B_error + last.C_error, abs(out.value - out.previous).to_double());
  r.bits = out.bits;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Real unit_kernel_check(const QuantumState& s, int target_digits, Exec exec) {
  SpectralOptions o;
  o.kernel = Kernel::Unit;
  o.exec = exec;
  auto sp = spectral_split(s, target_digits, o);
  return sp.B + sp.C;
}

Real trk_sum(const QuantumState& s, int target_digits, Exec exec) {
  SpectralOptions o;
  o.kernel = Kernel::TRK;
  o.exec = exec;
  auto sp = spectral_split(s, target_digits, o);
  return sp.B + sp.C;
}

}  // namespace bethe
