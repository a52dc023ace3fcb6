#include "bethe/router.hpp"

#include <cmath>

namespace bethe {

const char* to_string(Method m) {
  switch (m) {
    case Method::Integral: return "integral";
    case Method::Spectral: return "spectral";
    case Method::Lattice: return "lattice";
    case Method::Both: return "both";
    case Method::Auto: return "auto";
  }
  return "?";
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::Integral, Method::Spectral, Method::Lattice, Method::Both, Method::Auto})
    if (s == to_string(m)) return m;
  throw DomainError("unknown method '" + s + "' (integral, spectral, lattice, both, auto)");
}

Route route(const QuantumState& s, Method requested, const RouterPolicy& policy) {
  const int z = s.zeta();
  Route r;
  auto integral_allowed = [&]() {
    if (z > policy.integral_max_zeta)
      throw UnsupportedMethodError("integral representation unsupported for n - l = " + std::to_string(z) +
                                   " > " + std::to_string(policy.integral_max_zeta) + "; use --method spectral");
    if (z > policy.integral_zeta) {
      r.extra_bits = policy.elevated_bits_per_zeta * (z - policy.integral_zeta);
      r.note = "integral at elevated precision for n - l = " + std::to_string(z);
    }
  };
  switch (requested) {
    case Method::Integral:
      integral_allowed();
      r.methods = {Method::Integral};
      break;
    case Method::Spectral:
    case Method::Lattice:
      r.methods = {requested};
      break;
    case Method::Both:
      integral_allowed();
      r.methods = {Method::Integral, Method::Spectral};
      break;
    case Method::Auto:
      if (z <= policy.integral_zeta) {
        r.methods = {Method::Integral};
        r.note = "auto: integral for n - l <= " + std::to_string(policy.integral_zeta);
      } else {
        r.methods = {Method::Spectral};
        r.note = "auto: spectral for n - l > " + std::to_string(policy.integral_zeta);
      }
      break;
  }
  return r;
}

LatticeGrid default_grid(const QuantumState& s) {
  const double n = s.n();
  const double R = std::max(20.0, 20.0 * n * n);
  return LatticeGrid(R, static_cast<int>(std::min(2000L, std::lround(R / 0.1))));
}

std::vector<BetheLogResult> compute_state(const QuantumState& s, Method requested, const ComputeOptions& opt) {
  const Route r = route(s, requested, opt.policy);
  WorkingPrecision prec = opt.precision;
  prec.bits += r.extra_bits;
  prec.max_bits = std::max(prec.max_bits, prec.bits);
  std::vector<BetheLogResult> out;
  for (Method m : r.methods) {
    switch (m) {
      case Method::Integral: {
        IntegralOptions io = opt.integral;
        io.max_zeta = opt.policy.integral_max_zeta;
        out.push_back(bethe_integral(s, prec, io));
        break;
      }
      case Method::Spectral:
        out.push_back(bethe_spectral(s, prec, opt.spectral));
        break;
      case Method::Lattice:
        out.push_back(lattice_bethe(s, opt.grid_auto ? default_grid(s) : opt.grid));
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace bethe
