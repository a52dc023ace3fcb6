#include "bethe/hydro.hpp"
#include "bethe/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace bethe;

namespace {

// Oracle: int_0^rmax f dr on unit-width panels.
Real panels(const RealFunction& f, double rmax, double width) {
  Real s;
  for (double a = 0; a < rmax; a += width) s += integrate_panel(f, Real(a), Real(a + width), 30);
  return s;
}

double diff(const Real& a, const Real& b) { return abs(a - b).to_double(); }

}  // namespace

TEST_CASE("radial functions are normalized") {
  PrecisionGuard g(192);
  for (auto [n, l] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {4, 1}, {6, 0}, {9, 5}}) {
    const QuantumState s(n, l);
    RealFunction f = [&](const Real& r) { return sqr(r * radial_bound(s, r)); };
    CHECK(diff(panels(f, 40.0 * n * n, n), Real(1)) < 1e-30);
  }
}

TEST_CASE("radial function closed forms") {
  PrecisionGuard g(192);
  const Real r(2);
  CHECK(diff(radial_bound({1, 0}, r), 2 * exp(-r)) < 1e-50);
  // R_21 = r e^{-r/2} / (2 sqrt 6)
  CHECK(diff(radial_bound({2, 1}, r), r * exp(-r / 2L) / (2 * sqrt(Real(6)))) < 1e-50);
  // R_20 = (1 - r/2) e^{-r/2} / sqrt 2
  CHECK(diff(radial_bound({2, 0}, Real(3)), (1 - Real(3) / 2L) * exp(Real(-1.5)) / sqrt(Real(2))) < 1e-50);
}

TEST_CASE("bound-bound dipole integrals") {
  PrecisionGuard g(192);
  CHECK(diff(dipole_bound({1, 0}, {2, 1}).value, 128 * sqrt(Real(6)) / 243L) < 1e-50);
  CHECK(diff(abs(dipole_bound({2, 0}, {2, 1}).value), 3 * sqrt(Real(3))) < 1e-50);
  // symmetric in its arguments
  CHECK(diff(dipole_bound({7, 3}, {9, 4}).value, dipole_bound({9, 4}, {7, 3}).value) < 1e-45);
  CHECK_THROWS_AS(dipole_bound({3, 0}, {3, 2}), DomainError);
}

TEST_CASE("bound-bound dipoles against quadrature") {
  PrecisionGuard g(192);
  for (auto [a, b] : std::vector<std::pair<QuantumState, QuantumState>>{
           {{3, 1}, {5, 2}}, {{4, 1}, {2, 0}}, {{10, 3}, {12, 4}}, {{6, 0}, {20, 1}}}) {
    RealFunction f = [&](const Real& r) { return r * r * r * radial_bound(a, r) * radial_bound(b, r); };
    const double nmax = std::max(a.n(), b.n());
    const Real q = panels(f, 40 * nmax * nmax, 1);
    CHECK(diff(dipole_bound(a, b).value, q) < 1e-28 * std::max(1.0, std::abs(q.to_double())));
  }
}

TEST_CASE("dipole kernel agrees with the direct bound-bound routine") {
  PrecisionGuard g(192);
  DipoleKernel k({8, 3}, 4);
  for (long np : {5L, 8L, 9L, 30L})
    CHECK(diff(k.bound(np), dipole_bound({8, 3}, {static_cast<int>(np), 4}).value) < 1e-40);
}

TEST_CASE("Coulomb regular function at zero charge is a Riccati-Bessel function") {
  PrecisionGuard g(192);
  const Real rho(3.7);
  CHECK(diff(coulomb_regular(0, Real(0), rho), sin(rho)) < 1e-45);
  CHECK(diff(coulomb_regular(1, Real(0), rho), sin(rho) / rho - cos(rho)) < 1e-45);
}

TEST_CASE("continuum functions carry energy normalization") {
  PrecisionGuard g(192);
  // Far out, u = r R_E oscillates with amplitude sqrt(2 / (pi k)).
  const Real E(0.5);
  const Real k = sqrt(2 * E);
  const Real r(4000);
  const Real dr(1e-6);
  const Real u = r * radial_continuum(E, 1, r);
  const Real du = ((r + dr) * radial_continuum(E, 1, r + dr) - (r - dr) * radial_continuum(E, 1, r - dr)) / (2 * dr);
  const Real amp2 = sqr(u) + sqr(du / k);
  CHECK(abs(amp2 / (2 / (const_pi() * k)) - 1).to_double() < 1e-3);
}

TEST_CASE("bound-free dipoles against quadrature") {
  PrecisionGuard g(160);
  for (auto [n, l, lp, E] : std::vector<std::tuple<int, int, int, double>>{
           {2, 1, 0, 0.1}, {1, 0, 1, 0.3}, {5, 0, 1, 0.5}, {3, 2, 3, 0.05}}) {
    const QuantumState s(n, l);
    const RadialOverlap o = dipole_free(s, Real(E), lp);
    const Real q = dipole_free_quadrature(s, Real(E), lp, 25);
    CHECK(diff(o.value, q) < 1e-22 * std::max(1.0, std::abs(q.to_double())));
    CHECK(abs(o.imag_residue).to_double() < 1e-30);
  }
}

TEST_CASE("bound dipoles continue smoothly into the continuum at threshold") {
  PrecisionGuard g(192);
  // n'^3/2 d(n') -> d(E = 0) as n' -> infinity
  DipoleKernel k({10, 0}, 1);
  const Real np(400);
  const Real scaled = np * sqrt(np) * k.bound(np);
  const Real thr = k.free(Real(1e-30));
  CHECK(abs(scaled / thr - 1).to_double() < 1e-3);
}

TEST_CASE("channel weights") {
  PrecisionGuard g(128);
  CHECK(channel_weight(0, 1) == Real(1));
  CHECK(abs(channel_weight(3, 4) + channel_weight(3, 2) - 1).to_double() < 1e-35);
  CHECK_THROWS_AS(channel_weight(2, 2), DomainError);
}
