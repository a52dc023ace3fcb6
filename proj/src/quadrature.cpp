#include "bethe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace bethe {

namespace {

std::shared_ptr<GaussLegendreRule> build_rule(int order) {
  auto rule = std::make_shared<GaussLegendreRule>();
  rule->order = order;
  rule->bits = Real::default_bits();
  rule->x.resize(order);
  rule->w.resize(order);
  const int half = (order + 1) / 2;
  const Real tol = ldexp(Real(1), -(Real::default_bits() - 8));
  for (int i = 0; i < half; ++i) {
    // Root i of P_order, counted from the right end.
    Real x(std::cos(M_PI * (i + 0.75) / (order + 0.5)));
    Real dp;
    for (int it = 0; it < 100; ++it) {
      Real p0(1), p1(x);
      for (int k = 2; k <= order; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      dp = order * (x * p1 - p0) / (sqr(x) - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= tol) {
        if (it > 0) break;
      }
    }
    Real p0(1), p1(x);
    for (int k = 2; k <= order; ++k) {
      Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    dp = order * (x * p1 - p0) / (sqr(x) - 1);
    Real w = 2 / ((1 - sqr(x)) * sqr(dp));
    rule->x[order - 1 - i] = x;
    rule->w[order - 1 - i] = w;
    rule->x[i] = -x;
    rule->w[i] = w;
  }
  if (order % 2 == 1) rule->x[order / 2] = Real(0);
  return rule;
}

std::shared_mutex cache_lock;
std::map<std::pair<int, long>, std::shared_ptr<const GaussLegendreRule>> cache;

}  // namespace

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
  const auto key = std::make_pair(order, Real::default_bits());
  {
    std::shared_lock<std::shared_mutex> rl(cache_lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rule = build_rule(order);
  std::unique_lock<std::shared_mutex> wl(cache_lock);
  auto [it, inserted] = cache.emplace(key, rule);
  return it->second;
}

Real integrate_panel(const RealFunction& f, const Real& a, const Real& b, int order) {
  auto rule = gauss_legendre(order);
  Real half = (b - a) / 2, mid = (a + b) / 2;
  Real sum;
  for (int i = 0; i < order; ++i) {
    Real x = mid + half * rule->x[i];
    Real v = f(x);
    v *= rule->w[i];
    sum += v;
  }
  return sum * half;
}

Real integrate_panel(const RealFunction& f, const Real& a, const Real& b, int order, Exec exec) {
  if (exec == Exec::Serial) return integrate_panel(f, a, b, order);
  auto rule = gauss_legendre(order);
  Real half = (b - a) / 2, mid = (a + b) / 2;
  std::vector<Real> vals(order);
  for_each_index(order, exec, [&](std::size_t i) {
    Real x = mid + half * rule->x[i];
    vals[i] = f(x) * rule->w[i];
  });
  Real sum;
  for (auto& v : vals) sum += v;
  return sum * half;
}

namespace {
void adapt(const RealFunction& f, const Real& a, const Real& b, const Real& whole, int order, double rel_tol,
           const Real& abs_tol, int depth, QuadResult& out) {
  Real m = (a + b) / 2;
  Real left = integrate_panel(f, a, m, order);
  Real right = integrate_panel(f, m, b, order);
  out.evaluations += 2L * order;
  Real both = left + right;
  Real diff = abs(both - whole);
  Real tol = max(abs_tol, abs(both) * Real(rel_tol));
  if (diff <= tol || depth <= 0) {
    if (depth <= 0 && diff > tol) throw QuadratureError("adaptive quadrature: depth limit reached");
    out.value += both;
    out.error += diff.to_double();
    return;
  }
  Real half_tol = abs_tol / 2;
  adapt(f, a, m, left, order, rel_tol, half_tol, depth - 1, out);
  adapt(f, m, b, right, order, rel_tol, half_tol, depth - 1, out);
}
}  // namespace

QuadResult integrate_adaptive(const RealFunction& f, const Real& a, const Real& b, int order, double rel_tol,
                              const Real& abs_tol, int max_depth) {
  QuadResult out;
  Real whole = integrate_panel(f, a, b, order);
  out.evaluations = order;
  adapt(f, a, b, whole, order, rel_tol, abs_tol, max_depth, out);
  return out;
}

namespace {

struct Panel {
  Real a, b, value;
};

// GL estimates for every panel in one flat, fixed-order batch.
std::vector<Real> panel_values(const RealFunction& f, const std::vector<std::pair<Real, Real>>& spans, int order,
                               Exec exec) {
  auto rule = gauss_legendre(order);
  const std::size_t np = spans.size();
  std::vector<Real> vals(np * order);
  for_each_index(vals.size(), exec, [&](std::size_t idx) {
    const std::size_t p = idx / order, i = idx % order;
    const Real half = (spans[p].second - spans[p].first) / 2;
    const Real mid = (spans[p].first + spans[p].second) / 2;
    vals[idx] = f(mid + half * rule->x[i]) * rule->w[i];
  });
  std::vector<Real> out(np);
  for (std::size_t p = 0; p < np; ++p) {
    Real sum;
    for (int i = 0; i < order; ++i) sum += vals[p * order + i];
    out[p] = sum * ((spans[p].second - spans[p].first) / 2);
  }
  return out;
}

}  // namespace

QuadResult integrate_panels(const RealFunction& f, const std::vector<Real>& edges, int order, const Real& abs_tol,
                            const Real& rel_tol, Exec exec, int max_generations) {
  if (edges.size() < 2) throw DomainError("integrate_panels: need at least two edges");
  QuadResult out;
  const Real width = edges.back() - edges.front();
  std::vector<std::pair<Real, Real>> spans;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) spans.emplace_back(edges[i], edges[i + 1]);
  auto first = panel_values(f, spans, order, exec);
  out.evaluations += static_cast<long>(spans.size()) * order;
  std::vector<Panel> active;
  Real estimate;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    active.push_back({spans[i].first, spans[i].second, first[i]});
    estimate += first[i];
  }
  const Real total_tol = max(abs_tol, rel_tol * abs(estimate));
  const long n0 = static_cast<long>(spans.size());
  // Accepted contributions are stored per original position to keep the
  // reduction order independent of when a panel converges.
  std::vector<std::pair<Real, Real>> done;  // (left edge, value)
  double err = 0;
  for (int gen = 0; !active.empty(); ++gen) {
    std::vector<std::pair<Real, Real>> halves;
    for (const auto& p : active) {
      Real m = (p.a + p.b) / 2;
      halves.emplace_back(p.a, m);
      halves.emplace_back(m, p.b);
    }
    auto hv = panel_values(f, halves, order, exec);
    out.evaluations += static_cast<long>(halves.size()) * order;
    std::vector<Panel> next;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const auto& p = active[i];
      Real both = hv[2 * i] + hv[2 * i + 1];
      Real diff = abs(both - p.value);
      Real tol = total_tol * ((p.b - p.a) / width + ldexp(Real(1), -gen) / n0) / 2L;
      if (diff <= tol) {
        done.emplace_back(p.a, both);
        err += diff.to_double();
      } else if (gen + 1 >= max_generations) {
        throw QuadratureError("integrate_panels: no convergence on [" + p.a.str(6) + ", " + p.b.str(6) +
                              "], last change " + diff.str(3));
      } else {
        next.push_back({halves[2 * i].first, halves[2 * i].second, hv[2 * i]});
        next.push_back({halves[2 * i + 1].first, halves[2 * i + 1].second, hv[2 * i + 1]});
      }
    }
    active = std::move(next);
  }
  std::sort(done.begin(), done.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& d : done) out.value += d.second;
  out.error = err;
  return out;
}

}  // namespace bethe
