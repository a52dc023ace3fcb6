#pragma once

#include "bethe/core.hpp"

#include <vector>

namespace bethe {

// Phi(n,t) = 2F1(1, -nt; 1-nt; x^2) = -nt sum_k x^(2k) / (k - nt), x = (1-t)/(1+t).
// Direct summation for x^2 < switch_x2, condensation-accelerated tail otherwise.
Real phi(int n, const Real& t, int target_digits, double switch_x2 = 0.5);

enum class FourPVariant {
  Corrected,  // second term over (t-1)^8 (t+1)^6
  Printed     // both terms over (t-1)^8 (t+1)^8, as typeset
};

// Closed-form P_{4,1}(t).
Real p_matrix_4p(const Real& t, int target_digits, FourPVariant variant = FourPVariant::Corrected);

// One term T(k,n,t) of the circular-state series.
Real circular_term(long k, int n, const Real& t);

// Sum_k T(k,n,t) = P_{n,n-1}(t). Direct summation for x^2 <= switch_x2; below
// that the closed hypergeometric form of the same series is used.
Real circular_series(int n, const Real& t, int target_digits, double switch_x2 = 0.5);

// f(t) of the circular-state integral, ln k0 = -(3/4) PV int_0^1 f(t) dt.
Real circular_f(int n, const Real& t, int target_digits);

struct PropagatorElement {
  QuantumState state;
  Real t;
  Real value;
  double pole_distance = 0;  // min |t - n'/n| over dipole-accessible n' < n
  long cancellation_bits = 0;
};

enum class SturmianForm { Auto, DirectSum, Hypergeometric };

// P_nl(t) = (1/3) sum_L w_L nu sum_k O_k^2 / (N_k (k + L + 1 - nu)), nu = n t.
PropagatorElement sturmian_P(const QuantumState& s, const Real& t, int target_digits,
                             SturmianForm form = SturmianForm::Auto);

// Shells n' < n whose levels put a pole of P_nl(t) inside (0,1), at t = n'/n.
std::vector<int> pole_shells(const QuantumState& s);

// Residue of P_nl(t) at t = n'/n: -(n'^3/(3n)) dE^2 sum_L w_L d_L^2.
Real propagator_residue(const QuantumState& s, int nprime);

// H(A,b,X) = sum_k C(k+A-1,k) X^k / (k+b) for integer A >= 2, the building
// block of the hypergeometric form. Closed form in u = 1 - X with a
// logarithmic series (default for X >= 1/2), or the direct series with a
// condensation-accelerated tail.
enum class HMethod { Auto, Logarithmic, Series };
Real degenerate_h(long A, const Real& b, const Real& X, HMethod method = HMethod::Auto);

// Spectral evaluation of the same resolvent element (bound sum plus
// continuum integral); an independent oracle for small n.
Real spectral_P(const QuantumState& s, const Real& t, int target_digits);

// Min |t - n'/n| over n' in the pole set of s.
double pole_distance(const QuantumState& s, const Real& t);

}  // namespace bethe
