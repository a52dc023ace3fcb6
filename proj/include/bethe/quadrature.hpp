#pragma once

#include "bethe/core.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace bethe {

// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
  int order = 0;
  long bits = 0;
  std::vector<Real> x, w;
};

// Rule at the calling thread's precision; cached per (order, bits).
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order);

using RealFunction = std::function<Real(const Real&)>;

// Fixed-order rule mapped to [a, b].
Real integrate_panel(const RealFunction& f, const Real& a, const Real& b, int order);

// Same, evaluating nodes through for_each_index with fixed summation order.
Real integrate_panel(const RealFunction& f, const Real& a, const Real& b, int order, Exec exec);

struct QuadResult {
  Real value;
  double error = 0;  // absolute error estimate
  long evaluations = 0;
};

// Recursive bisection until |I(panel) - I(halves)| <= max(abs_tol, rel_tol*|I|).
QuadResult integrate_adaptive(const RealFunction& f, const Real& a, const Real& b, int order, double rel_tol,
                              const Real& abs_tol, int max_depth = 30);

// Adaptive integration over consecutive panels [edges[i], edges[i+1]].
// Each generation bisects every unconverged panel; all node evaluations of a
// generation go through for_each_index and are reduced in panel order, so the
// result does not depend on exec. A panel is accepted when its two halves
// agree with the parent to within its share of the total tolerance
// max(abs_tol, rel_tol * |first-generation estimate|); half the share goes by
// width, half equally per initial panel (halved on each bisection).
QuadResult integrate_panels(const RealFunction& f, const std::vector<Real>& edges, int order, const Real& abs_tol,
                            const Real& rel_tol, Exec exec = Exec::Serial, int max_generations = 24);

}  // namespace bethe
