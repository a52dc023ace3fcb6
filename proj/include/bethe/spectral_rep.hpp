#pragma once

#include "bethe/core.hpp"

namespace bethe {

// Weight applied to each spectral term as a function of dE = E' - E_n.
enum class Kernel {
  Log,   // dE^3 ln(2|dE|), the Bethe logarithm
  Unit,  // dE^3, sums to delta_l0 after the n^3/2 prefactor
  TRK    // dE, sums to 3/2 without prefactor
};

const char* to_string(Kernel k);

struct SpectralOptions {
  Kernel kernel = Kernel::Log;
  Exec exec = Exec::Serial;
  int explicit_factor = 4;  // explicit bound sum up to n' = factor * n
  int order = 0;            // Gauss-Legendre order, 0: from target digits
  int cnct_terms = 80;      // condensed terms allowed for the bound-sum tail
};

struct PartResult {
  Real value;
  double error = 0;
  long cancellation_bits = 0;
  long evaluations = 0;
};

struct SpectralSplit {
  Real B, C;
  double B_error = 0, C_error = 0;
  Real ratio() const { return abs(B / C); }
};

// (n^3/2) sum_L w_L sum_{n' != n} K(dE) |<n'L|r|nl>|^2 with the tail beyond
// the explicit range summed by condensation + delta transformation.
PartResult bound_contribution(const QuantumState& s, int target_digits, const SpectralOptions& opt = {});

// (n^3/2) sum_L w_L int_0^inf dE K(dE) |<EL|r|nl>|^2 in y = ln(E/|E_n|).
PartResult continuum_contribution(const QuantumState& s, int target_digits, const SpectralOptions& opt = {});

// One run at the current precision.
SpectralSplit spectral_split(const QuantumState& s, int target_digits, const SpectralOptions& opt = {});

// ln k0 = B + C with precision escalation; B and C are attached.
BetheLogResult bethe_spectral(const QuantumState& s, const WorkingPrecision& prec, const SpectralOptions& opt = {});

// B + C under the unit kernel (expected delta_l0).
Real unit_kernel_check(const QuantumState& s, int target_digits, Exec exec = Exec::Serial);

// Thomas-Reiche-Kuhn sum sum_L w_L sum/int dE |<r>|^2 (expected 3/2).
Real trk_sum(const QuantumState& s, int target_digits, Exec exec = Exec::Serial);

}  // namespace bethe
