#pragma once

#include "bethe/core.hpp"

#include <functional>
#include <vector>

namespace bethe {

// Supplies the k-th term of a series. The index is an integer-valued Real
// because condensation probes indices far beyond 64-bit range.
// Must be deterministic and callable from several threads at once.
struct TermGenerator {
  std::function<Real(const Real& k)> term;
  bool monotone = true;
};

struct AccelState {
  std::vector<Real> condensed;  // A_j
  std::vector<Real> partial;    // partial sums of sum (-1)^j A_j
  std::vector<Real> estimates;  // limit estimates by order
  Real limit;
  Real error;
  int order = 0;
  bool reduced_confidence = false;
};

// A_j = sum_m 2^m a_{2^m (j+1) - 1}; inner sum stops once the increment is
// below 10^-(target_digits+10) relative to the running sum.
Real condense(const TermGenerator& g, long j, int target_digits);

struct TransformResult {
  Real limit;
  Real error;
  int order = 0;
  bool reduced_confidence = false;
};

// Weniger delta transformation of partial sums s_0..s_K with next-term
// remainder estimates omega_n = s_{n+1} - s_n. Uses the highest order
// available (K-1) or the requested order if smaller.
TransformResult nonlinear_transform(const std::vector<Real>& partial_sums, int order = -1);

struct CnctResult {
  Real sum;
  Real error;
  AccelState state;
};

// Condensation followed by the delta transformation. Returns once the error
// estimate falls below max(10^-target_digits * |sum|, abs_tol).
CnctResult cnct_sum(const TermGenerator& g, int target_digits, const Real& abs_tol = Real(0), int max_terms = 80,
                    Exec exec = Exec::Serial);

}  // namespace bethe
