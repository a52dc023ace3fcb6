#include "bethe/hydro.hpp"
#include "bethe/spectral_rep.hpp"

#include <doctest.h>

#include <cmath>

using namespace bethe;

namespace {

double diff(const Real& a, const Real& b) { return abs(a - b).to_double(); }

}  // namespace

TEST_CASE("bound sum for 1S against brute-force summation") {
  PrecisionGuard g(128);
  const Real b = bound_contribution({1, 0}, 15).value;
  // Oracle: n' = 2..1e5 summed directly; the remaining tail is O(1e-20).
  DipoleKernel k({1, 0}, 1);
  const Real E1 = bound_energy(1);
  Real s;
  for (long np = 100000; np >= 2; --np) {
    const Real dE = -Real(1) / (2 * np * np) - E1;
    s += dE * dE * dE * log(2 * dE) * sqr(k.bound(np));
  }
  CHECK(diff(b, s / 2L) < 1e-12);
}

TEST_CASE("the l - 1 channel is absent for S states") {
  PrecisionGuard g(128);
  CHECK(channel_weight(0, 1) == Real(1));
  CHECK(channel_weight(0, -1).is_zero());
}

TEST_CASE("1S Bethe logarithm and its split") {
  auto r = bethe_spectral({1, 0}, WorkingPrecision::for_digits(15));
  CHECK(abs(r.value - Real("2.98412855576550")).to_double() < 1e-10);
  REQUIRE(r.bound_part);
  REQUIRE(r.continuum_part);
  const double ratio = std::abs((*r.bound_part / *r.continuum_part).to_double());
  CHECK(std::abs(ratio / 0.00483 - 1) < 0.01);
  CHECK(r.method == "spectral");
}

TEST_CASE("bound part is subdominant for low states") {
  for (auto s : {QuantumState(2, 0), QuantumState(4, 1)}) {
    auto sp = spectral_split(s, 10);
    CHECK(sp.ratio().to_double() < 1);
  }
}

TEST_CASE("continuum part is stable under a change of quadrature order") {
  PrecisionGuard g(128);
  SpectralOptions a, b;
  a.order = 20;
  b.order = 40;
  const Real ca = continuum_contribution({1, 0}, 14, a).value;
  const Real cb = continuum_contribution({1, 0}, 14, b).value;
  CHECK(diff(ca, cb) < 1e-12);
}

TEST_CASE("continuum integrand decays algebraically at high energy") {
  PrecisionGuard g(128);
  DipoleKernel k({1, 0}, 1);
  auto integrand = [&](double E) {
    const Real dE = Real(E) + Real(0.5);
    return (dE * dE * dE * log(2 * dE) * sqr(k.free(Real(E)))).to_double();
  };
  const double p = std::log(integrand(4e4) / integrand(1e4)) / std::log(4.0);
  CHECK(p < -1.3);
  CHECK(p > -1.7);
}

TEST_CASE("cubic sum rule") {
  PrecisionGuard g(128);
  CHECK(diff(unit_kernel_check({1, 0}, 14), Real(1)) < 1e-10);
  CHECK(abs(unit_kernel_check({4, 1}, 14)).to_double() < 1e-10);
  CHECK(diff(unit_kernel_check({10, 0}, 14), Real(1)) < 1e-10);
  CHECK(abs(unit_kernel_check({20, 19}, 14)).to_double() < 1e-10);
}

TEST_CASE("Thomas-Reiche-Kuhn sum rule") {
  PrecisionGuard g(128);
  for (auto s : {QuantumState(1, 0), QuantumState(4, 1), QuantumState(20, 19)})
    CHECK_MESSAGE(diff(trk_sum(s, 12), Real(1.5)) < 1e-8, s.label());
}

TEST_CASE("larger states") {
  auto a = bethe_spectral({40, 14}, WorkingPrecision::for_digits(11));
  CHECK(abs(a.value - Real("-0.418087713e-4")).to_double() <= 0.5e-13);
  auto b = bethe_spectral({200, 0}, WorkingPrecision::for_digits(11));
  CHECK(abs(b.value - Real("2.72266810")).to_double() <= 0.5e-8);
}
