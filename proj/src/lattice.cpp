#include "bethe/lattice.hpp"

#include "bethe/hydro.hpp"
#include "bethe/quadrature.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>

namespace bethe {

LatticeGrid::LatticeGrid(double extent, int nodes) : R(extent), N(nodes) { validate(); }

void LatticeGrid::validate() const {
  if (!(R > 0) || !std::isfinite(R)) throw DomainError("lattice: extent must be positive");
  if (N < 10) throw DomainError("lattice: at least 10 nodes required");
}

Tridiagonal build_radial_hamiltonian(int l, const LatticeGrid& grid) {
  grid.validate();
  if (l < 0) throw DomainError("lattice: negative l");
  const double h = grid.h();
  const int m = grid.interior();
  Tridiagonal t;
  t.diag.resize(m);
  t.offdiag.assign(m - 1, -0.5 / (h * h));
  for (int i = 0; i < m; ++i) {
    const double r = grid.r(i);
    t.diag[i] = 1.0 / (h * h) + 0.5 * l * (l + 1) / (r * r) - 1.0 / r;
  }
  return t;
}

LatticeSpectrum lattice_spectrum(int l, const LatticeGrid& grid) {
  const Tridiagonal t = build_radial_hamiltonian(l, grid);
  const int m = grid.interior();
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(t.diag.data(), m);
  Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(t.offdiag.data(), m - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw BetheError("lattice: eigensolver failed");
  LatticeSpectrum s;
  s.l = l;
  s.grid = grid;
  s.energy.resize(m);
  s.u.assign(m, std::vector<double>(m));
  const double scale = 1.0 / std::sqrt(grid.h());
  for (int k = 0; k < m; ++k) {
    s.energy[k] = es.eigenvalues()(k);
    for (int i = 0; i < m; ++i) s.u[k][i] = es.eigenvectors()(i, k) * scale;
  }
  return s;
}

double bound_norm_inside(const QuantumState& s, double R) {
  PrecisionGuard g(128);
  RealFunction f = [&](const Real& r) {
    Real v = radial_bound(s, r);
    return r * r * v * v;
  };
  // Panels narrower than the radial oscillation scale n; order 20 is exact enough.
  const int panels = std::max(8, static_cast<int>(std::ceil(4 * R / s.n())));
  Real sum;
  for (int i = 0; i < panels; ++i)
    sum += integrate_panel(f, Real(R * i / panels), Real(R * (i + 1) / panels), 20);
  return sum.to_double();
}

LatticeSum lattice_sum(const QuantumState& s, const LatticeGrid& grid, LatticeKernel k) {
  grid.validate();
  const int n = s.n(), l = s.l();
  const double inside = bound_norm_inside(s, grid.R);
  if (std::abs(1 - inside) > 1e-8)
    throw DomainError("lattice: grid too small, bound norm inside R is " + std::to_string(inside));
  const LatticeSpectrum ref = lattice_spectrum(l, grid);
  const int idx = n - l - 1;
  const double En = -0.5 / (static_cast<double>(n) * n);
  std::size_t nearest = 0;
  for (std::size_t j = 1; j < ref.energy.size(); ++j)
    if (std::abs(ref.energy[j] - En) < std::abs(ref.energy[nearest] - En)) nearest = j;
  if (static_cast<int>(nearest) != idx) throw DomainError("lattice: grid too coarse to resolve the reference state");
  const std::vector<double>& u0 = ref.u[idx];
  const double E0 = ref.energy[idx];
  const double h = grid.h();
  LatticeSum out;
  out.reference_energy = E0;
  double total = 0;
  for (int L : {l - 1, l + 1}) {
    if (L < 0) continue;
    const double w = L == l + 1 ? (l + 1.0) / (2 * l + 1) : l / (2.0 * l + 1);
    const LatticeSpectrum ch = lattice_spectrum(L, grid);
    double acc = 0;
    for (std::size_t j = 0; j < ch.energy.size(); ++j) {
      double d = 0;
      for (int i = 0; i < grid.interior(); ++i) d += grid.r(i) * u0[i] * ch.u[j][i];
      d *= h;
      const double dE = ch.energy[j] - E0;
      if (dE == 0) continue;
      double kern = dE * dE * dE;
      if (k == LatticeKernel::Log) kern *= std::log(2 * std::abs(dE));
      acc += kern * d * d;
      if (ch.energy[j] > 0) ++out.positive_states;
    }
    total += w * acc;
  }
  out.value = 0.5 * n * n * static_cast<double>(n) * total;
  return out;
}

BetheLogResult lattice_bethe(const QuantumState& s, const LatticeGrid& grid) {
  const auto t0 = std::chrono::steady_clock::now();
  const LatticeSum fine = lattice_sum(s, grid, LatticeKernel::Log);
  BetheLogResult r;
  r.n = s.n();
  r.l = s.l();
  r.method = "lattice";
  r.value = Real(fine.value);
  try {
    const LatticeSum coarse = lattice_sum(s, LatticeGrid(grid.R, grid.N / 2), LatticeKernel::Log);
    r.error = std::abs(fine.value - coarse.value);
  } catch (const DomainError&) {
    r.error = std::abs(fine.value);
  }
  r.bits = 53;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace bethe
