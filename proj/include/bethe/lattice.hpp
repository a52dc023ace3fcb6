#pragma once

#include "bethe/core.hpp"

#include <vector>

namespace bethe {

// Uniform radial grid r_i = i h, i = 1..N-1, Dirichlet at r = 0 and r = R.
struct LatticeGrid {
  double R = 20;
  int N = 200;
  LatticeGrid() = default;
  LatticeGrid(double extent, int nodes);
  double h() const { return R / N; }
  int interior() const { return N - 1; }
  double r(int i) const { return (i + 1) * h(); }  // i = 0..N-2
  void validate() const;
};

// 3-point stencil for -u''/2 + (l(l+1)/(2r^2) - 1/r) u.
struct Tridiagonal {
  std::vector<double> diag;     // size N-1
  std::vector<double> offdiag;  // size N-2, super = sub
};

Tridiagonal build_radial_hamiltonian(int l, const LatticeGrid& grid);

// Eigenpairs ascending; vectors normalized with weight h, sum_i h u_i^2 = 1.
struct LatticeSpectrum {
  int l = 0;
  LatticeGrid grid;
  std::vector<double> energy;
  std::vector<std::vector<double>> u;  // u[k][i] = u_k(r_i)
};

LatticeSpectrum lattice_spectrum(int l, const LatticeGrid& grid);

enum class LatticeKernel { Log, Unit };

struct LatticeSum {
  double value = 0;
  double reference_energy = 0;  // lattice eigenvalue used for E_n
  int positive_states = 0;      // pseudo-continuum eigenpairs included
};

// (n^3/2) sum_L w_L sum_k K(E_k - E_ref) |h sum_i r_i u_ref u_k|^2 over all
// eigenpairs of both channels. Throws DomainError when the grid cannot hold
// the reference state.
LatticeSum lattice_sum(const QuantumState& s, const LatticeGrid& grid, LatticeKernel k);

// ln k0 from the lattice sum; error is the change against the N/2 grid.
BetheLogResult lattice_bethe(const QuantumState& s, const LatticeGrid& grid);

// Fraction of the exact bound density inside [0, R].
double bound_norm_inside(const QuantumState& s, double R);

}  // namespace bethe
