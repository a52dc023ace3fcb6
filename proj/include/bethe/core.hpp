#pragma once

#include "bethe/real.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace bethe {

// ---- errors ---------------------------------------------------------------

struct BetheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : BetheError {
  using BetheError::BetheError;
};
struct PoleProximityError : BetheError {
  using BetheError::BetheError;
};
struct AccelerationError : BetheError {
  using BetheError::BetheError;
};
struct UnsupportedMethodError : BetheError {
  using BetheError::BetheError;
};
struct PrecisionExhaustedError : BetheError {
  using BetheError::BetheError;
};
struct QuadratureError : BetheError {
  using BetheError::BetheError;
};

// ---- quantum numbers ------------------------------------------------------

// Hydrogenic (n, l) with the angular-momentum defect zeta = n - l.
class QuantumState {
 public:
  QuantumState(int n, int l);
  int n() const { return n_; }
  int l() const { return l_; }
  int zeta() const { return n_ - l_; }
  bool circular() const { return zeta() == 1; }
  std::string label() const;
  friend bool operator==(const QuantumState& a, const QuantumState& b) { return a.n_ == b.n_ && a.l_ == b.l_; }
  friend bool operator<(const QuantumState& a, const QuantumState& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.l_ < b.l_;
  }

 private:
  int n_, l_;
};

// Z = 1, Hartree atomic units: energies in Hartree, lengths in Bohr radii.
struct UnitConvention {
  static constexpr const char* name = "Z=1 Hartree atomic units";
};

Real bound_energy(int n);
// omega(t) = (1 - t^2) / (2 n^2 t^2)
Real photon_energy(const Real& t, int n);
// t(omega) = 1 / sqrt(1 + 2 n^2 omega)
Real t_of_omega(const Real& omega, int n);

// Photon parameter t in (0,1] tied to a reference shell n.
class PhotonParameter {
 public:
  PhotonParameter(Real t, int n);
  static PhotonParameter from_omega(const Real& omega, int n);
  const Real& t() const { return t_; }
  int n() const { return n_; }
  Real omega() const { return photon_energy(t_, n_); }

 private:
  Real t_;
  int n_;
};

// ---- precision ------------------------------------------------------------

struct WorkingPrecision {
  long bits = 192;
  int target_digits = 20;
  long max_bits = 8192;
  long step_bits = 64;
  WorkingPrecision() = default;
  WorkingPrecision(long b, int digits) : bits(b), target_digits(digits) {}
  static WorkingPrecision for_digits(int digits, long extra_bits = 0);
  void validate() const;
};

// Number of leading significant decimal digits on which a and b agree.
double agreeing_digits(const Real& a, const Real& b);

// Runs f at increasing precision until two successive values agree to the
// target digits. f receives the working bit count; the guard is already set.
struct EscalationOutcome {
  Real value;
  Real previous;
  long bits = 0;
  double digits_agreed = 0;
};
EscalationOutcome escalate(const WorkingPrecision& prec, const std::function<Real(long)>& f);

// ---- execution ------------------------------------------------------------

enum class Exec { Serial, Parallel };

// Evaluates body(i) for i in [0, count). In parallel mode the iterations are
// distributed over OpenMP threads, each running at the caller's precision.
// Results must be written to per-index slots; reductions are left to the
// caller so summation order is fixed.
void for_each_index(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body);

int available_threads();

// ---- results --------------------------------------------------------------

struct BetheLogResult {
  int n = 0, l = 0;
  Real value;
  std::string method;
  std::optional<Real> bound_part;      // B (spectral only)
  std::optional<Real> continuum_part;  // C (spectral only)
  double error = 0;                    // absolute error estimate
  long bits = 0;
  double seconds = 0;
};

}  // namespace bethe
