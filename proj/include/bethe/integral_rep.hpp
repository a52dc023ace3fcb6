#pragma once

#include "bethe/core.hpp"
#include "bethe/quadrature.hpp"

#include <vector>

namespace bethe {

struct Pole {
  int nprime = 0;
  Real t;        // n'/n
  Real residue;  // of the integrand, not of P
};

struct PoleSet {
  std::vector<Pole> poles;
  std::size_t size() const { return poles.size(); }
  bool empty() const { return poles.empty(); }
};

// Where P_nl(t) comes from inside the integrand.
enum class PSource {
  Auto,        // Sturmian series
  Sturmian,
  Circular,    // circular-state series, zeta = 1 only
  FourPClosed  // closed form, (4,1) only
};

const char* to_string(PSource s);
PSource psource_from_string(const std::string& s);

// Braced integrand divided by t^3:
// F(t) = t^-3 { (t^2-1)/(n t^2) P(t) + 2/(3n) - (8/3) t^2 delta_l0 }.
// Extra precision is applied internally near t = 0 and t = 1.
Real bethe_integrand(const QuantumState& s, const Real& t, PSource src = PSource::Auto, bool s_counterterm = true);

// Poles of F at t = n'/n with analytic residues g(t_p) Res P.
PoleSet bound_poles(const QuantumState& s);

// Residue of f at t_p by symmetric limits (t-t_p) f(t) at t_p +- h, h/2, h/4,
// Richardson-extrapolated in h^2. Cross-check for the analytic residues.
Real symmetric_residue(const RealFunction& f, const Real& tp, const Real& h);

struct PvOptions {
  int order = 24;
  Exec exec = Exec::Serial;
  // Smallest grading edge near 0; 0 picks it adaptively from the integrand size.
  double t_min = 0;
  int max_generations = 24;
};

// PV int_0^1 f(t) dt with simple poles removed by subtraction and added back
// as residue * ln((1 - t_p)/t_p).
QuadResult pv_integrate(const RealFunction& f, const PoleSet& poles, int target_digits, const PvOptions& opt = {});

struct IntegralOptions {
  PSource source = PSource::Auto;
  Exec exec = Exec::Serial;
  int max_zeta = 20;
  int order = 0;  // 0: chosen from the target digits
};

// ln k0(n,l) by the principal-value integral over t, escalating precision
// until two successive runs agree to the target digits.
BetheLogResult bethe_integral(const QuantumState& s, const WorkingPrecision& prec, const IntegralOptions& opt = {});

// One run at the current precision without escalation.
BetheLogResult bethe_integral_once(const QuantumState& s, int target_digits, const IntegralOptions& opt = {});

}  // namespace bethe
