#pragma once

#include "bethe/core.hpp"
#include "bethe/integral_rep.hpp"
#include "bethe/lattice.hpp"
#include "bethe/spectral_rep.hpp"

#include <string>
#include <vector>

namespace bethe {

enum class Method { Integral, Spectral, Lattice, Both, Auto };

const char* to_string(Method m);
Method method_from_string(const std::string& s);

struct RouterPolicy {
  int integral_zeta = 5;         // auto picks the integral up to here
  int integral_max_zeta = 20;    // integral refused above here
  long elevated_bits_per_zeta = 16;  // extra starting bits per unit of zeta beyond integral_zeta
};

struct Route {
  std::vector<Method> methods;  // concrete methods to run, in output order
  long extra_bits = 0;
  std::string note;
};

// Resolves auto and both; throws UnsupportedMethodError with the reason when
// the requested method cannot handle the state's zeta.
Route route(const QuantumState& s, Method requested, const RouterPolicy& policy = {});

struct ComputeOptions {
  WorkingPrecision precision;
  RouterPolicy policy;
  IntegralOptions integral;
  SpectralOptions spectral;
  LatticeGrid grid;        // used when grid_auto is false
  bool grid_auto = true;   // R = max(20, 20 n^2), h = 0.1
};

LatticeGrid default_grid(const QuantumState& s);

// One record per concrete method, in route order. Precision is never lowered
// below the requested starting bits.
std::vector<BetheLogResult> compute_state(const QuantumState& s, Method requested, const ComputeOptions& opt);

}  // namespace bethe
