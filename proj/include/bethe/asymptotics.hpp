#pragma once

#include "bethe/core.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace bethe {

enum class Family { Circular, S, P };

const char* to_string(Family f);

struct Coefficient {
  double value;
  double uncertainty;
};

// Large-n expansion sum_k c_k / x^k, x = l for the circular family (which is
// scaled by l^3) and x = n for S and P.
struct AsymptoticSeries {
  Family family;
  std::array<Coefficient, 6> coef;
};

const AsymptoticSeries& asymptotic_series(Family f);

struct Band {
  double value;
  double uncertainty;  // linear sum of propagated coefficient uncertainties
  double lo() const { return value - uncertainty; }
  double hi() const { return value + uncertainty; }
  bool contains(double v) const { return v >= lo() && v <= hi(); }
};

// ln k0(l+1, l) estimate with band; l >= 1.
Band circular_asymptote(int l);
// ln k0(n, 0) and ln k0(n, 1); n = 0 means the n -> infinity limit.
Band s_asymptote(int n);
Band p_asymptote(int n);

// ln k0(infinity, l) for 0 <= l <= 10, as tabulated.
double limit_reference(int l);
// Last printed digit of the tabulated limits.
constexpr double limit_reference_resolution = 1e-9;

struct Extrapolation {
  Real limit;
  double error = 0;
  int degree = 0;
  bool low_confidence = false;
};

// Polynomial least squares in 1/n evaluated at 1/n = 0. Degrees 1..max are
// tried; the estimate whose change from the previous degree is smallest is
// returned with that change as the error. skip_linear drops the 1/n term.
// low_confidence marks spreads that grow before the minimum or never shrink.
Extrapolation extrapolate_limit(const std::vector<std::pair<int, Real>>& values, bool skip_linear,
                                int max_degree = 5);

}  // namespace bethe
