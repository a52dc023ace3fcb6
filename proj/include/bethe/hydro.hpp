#pragma once

#include "bethe/core.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace bethe {

// R_nl(r) = N * sum_j q_j r^(l+j) exp(-r/n), j = 0..zeta-1, with exact
// rational q_j and N^2; only sqrt(N^2) is inexact.
struct BoundRadial {
  QuantumState state;
  std::vector<mpq_class> q;
  mpq_class norm2;

  explicit BoundRadial(const QuantumState& s);
  Real norm() const;
  Real operator()(const Real& r) const;
};

// Shared, lazily built coefficient table per (n,l).
std::shared_ptr<const BoundRadial> bound_radial(const QuantumState& s);

Real radial_bound(const QuantumState& s, const Real& r);

// Regular Coulomb function F_l(eta, rho) by its power series (entire in rho).
// Extra precision proportional to rho is applied internally.
Real coulomb_regular(int l, const Real& eta, const Real& rho);

// Energy-normalized continuum radial function for Z = 1 at energy E > 0.
Real radial_continuum(const Real& energy, int l, const Real& r);

enum class OverlapKind { BoundBound, BoundFree };

struct RadialOverlap {
  QuantumState bra;
  std::optional<QuantumState> ket;  // bound target
  std::optional<Real> energy;       // continuum target
  int ket_l = 0;
  OverlapKind kind = OverlapKind::BoundBound;
  Real value;
  // Bits lost to cancellation in the final coefficient sum.
  long cancellation_bits = 0;
  // Imaginary residue of the bound-free closed form (should be roundoff).
  Real imag_residue;
};

// Dipole radial integral int r^3 R_a R_b dr, |l_a - l_b| = 1.
RadialOverlap dipole_bound(const QuantumState& a, const QuantumState& b);
// Energy-normalized bound-free integral int r^3 R_nl R_{E,lp} dr.
RadialOverlap dipole_free(const QuantumState& a, const Real& energy, int lp);
// Oracle path: direct quadrature of the bound-free integrand.
Real dipole_free_quadrature(const QuantumState& a, const Real& energy, int lp, int digits);

// Precomputed dipole evaluator for a fixed reference state and channel
// L = l +- 1. Coefficients are frozen at the precision active at
// construction; evaluations must run at that precision.
class DipoleKernel {
 public:
  DipoleKernel(const QuantumState& ref, int L);

  const QuantumState& ref() const { return ref_; }
  int channel() const { return L_; }
  long bits() const { return bits_; }

  // Bound target (n', L); n' is integer valued and may exceed 64-bit range.
  Real bound(const Real& nprime, long* cancel_bits = nullptr) const;
  Real bound(long nprime, long* cancel_bits = nullptr) const { return bound(Real(nprime), cancel_bits); }
  // Energy-normalized continuum target (E, L).
  Real free(const Real& energy, long* cancel_bits = nullptr, Real* imag = nullptr) const;

 private:
  QuantumState ref_;
  int L_;
  int e_min_, e_max_;
  long bits_;
  std::vector<Real> g_;  // N q_j (p_j)!
  std::vector<int> e_;   // hypergeometric degree per j
  int p0_;               // p_0 = 3 + l + L
  Real norm_;
  Real degenerate(long cancel_guard, long* cancel_bits) const;
};

// Angular weight of channel L for the state's l: (l+1)/(2l+1) or l/(2l+1).
Real channel_weight(int l, int L);

}  // namespace bethe
