#include "bethe/greens.hpp"
#include "bethe/integral_rep.hpp"
#include "bethe/spectral_rep.hpp"

#include <doctest.h>

#include <cmath>

using namespace bethe;

namespace {

double diff(const Real& a, const Real& b) { return abs(a - b).to_double(); }

PoleSet one_pole(const Real& tp, const Real& res) {
  PoleSet p;
  p.poles.push_back({0, tp, res});
  return p;
}

}  // namespace

TEST_CASE("bound poles follow the dipole selection rules") {
  PrecisionGuard g(128);
  const PoleSet p41 = bound_poles({4, 1});
  REQUIRE(p41.size() == 3);
  CHECK(diff(p41.poles[0].t, Real(0.25)) == 0);
  CHECK(diff(p41.poles[1].t, Real(0.5)) == 0);
  CHECK(diff(p41.poles[2].t, Real(0.75)) == 0);
  const PoleSet p7 = bound_poles({7, 6});
  REQUIRE(p7.size() == 1);
  CHECK(diff(p7.poles[0].t, Real(6) / 7L) < 1e-35);
  CHECK(bound_poles({2, 0}).empty());
}

TEST_CASE("principal value of 1/(t - 1/2) vanishes") {
  PrecisionGuard g(160);
  RealFunction f = [](const Real& t) { return 1 / (t - Real(0.5)); };
  PvOptions o;
  o.t_min = 1e-40;
  auto r = pv_integrate(f, one_pole(Real(0.5), Real(1)), 30, o);
  CHECK(abs(r.value).to_double() < 1e-28);
}

TEST_CASE("principal value of t/(t - 1/4)") {
  PrecisionGuard g(160);
  RealFunction f = [](const Real& t) { return t / (t - Real(0.25)); };
  PvOptions o;
  o.t_min = 1e-40;
  auto r = pv_integrate(f, one_pole(Real(0.25), Real(0.25)), 30, o);
  // 1 + (1/4) ln 3 by hand
  CHECK(diff(r.value, 1 + log(Real(3)) / 4L) < 1e-28);
}

TEST_CASE("ordinary integral without poles") {
  PrecisionGuard g(160);
  RealFunction f = [](const Real& t) { return sqr(t); };
  PvOptions o;
  o.t_min = 1e-40;
  CHECK(diff(pv_integrate(f, PoleSet{}, 30, o).value, Real(1) / 3L) < 1e-28);
}

TEST_CASE("symmetric residue extraction") {
  PrecisionGuard g(200);
  RealFunction f = [](const Real& t) { return exp(t) / (t - Real(0.3)); };
  CHECK(diff(symmetric_residue(f, Real(0.3), Real(1e-6)), exp(Real(0.3))) < 1e-20);
  RealFunction dbl = [](const Real& t) { return 1 / sqr(t - Real(0.3)); };
  CHECK_THROWS(symmetric_residue(dbl, Real(0.3), Real(1e-6)));
}

TEST_CASE("analytic integrand residues agree with the symmetric limit") {
  PrecisionGuard g(256);
  const QuantumState s(5, 2);
  RealFunction f = [&](const Real& t) { return bethe_integrand(s, t); };
  for (const Pole& p : bound_poles(s).poles)
    CHECK(abs(symmetric_residue(f, p.t, Real(1e-12)) / p.residue - 1).to_double() < 1e-15);
}

TEST_CASE("integrand has a finite limit at t = 1") {
  PrecisionGuard g(160);
  for (auto s : {QuantumState(1, 0), QuantumState(4, 1), QuantumState(6, 5)}) {
    const Real a = bethe_integrand(s, 1 - Real("1e-20"));
    const Real b = bethe_integrand(s, 1 - Real("1e-30"));
    CHECK(a.is_finite());
    CHECK(abs(a - b).to_double() < 1e-15);
  }
}

TEST_CASE("integrand stays bounded as t -> 0") {
  PrecisionGuard g(200);
  for (auto s : {QuantumState(1, 0), QuantumState(3, 0), QuantumState(4, 1), QuantumState(5, 4)}) {
    const double a = abs(bethe_integrand(s, Real(1e-2))).to_double();
    const double b = abs(bethe_integrand(s, Real(1e-3))).to_double();
    const double c = abs(bethe_integrand(s, Real(1e-4))).to_double();
    CHECK(c <= 2 * std::max(a, b) + 1e-30);
  }
}

TEST_CASE("the S-state counterterm is necessary") {
  PrecisionGuard g(160);
  const QuantumState s(2, 0);
  // Without the (8/3) t^2 subtraction the integrand grows like 1/t, so the
  // integral over [t0, 0.4] grows like ln(1/t0). With it, each step down in t0
  // adds a piece that shrinks with the width. 0.4 stays below the 1s pole.
  RealFunction bare = [&](const Real& t) { return bethe_integrand(s, t, PSource::Auto, false); };
  RealFunction sub = [&](const Real& t) { return bethe_integrand(s, t); };
  std::vector<double> grow, conv;
  for (double t0 : {1e-2, 1e-4, 1e-6, 1e-8}) {
    std::vector<Real> edges;
    for (double e = t0; e < 0.1; e *= 10) edges.emplace_back(e);
    edges.emplace_back(Real("0.1"));
    edges.emplace_back(Real("0.4"));
    grow.push_back(integrate_panels(bare, edges, 20, Real(0), Real(1e-12)).value.to_double());
    conv.push_back(integrate_panels(sub, edges, 20, Real(0), Real(1e-12)).value.to_double());
  }
  for (std::size_t i = 1; i < grow.size(); ++i) CHECK(std::abs(grow[i] - grow[i - 1]) > 1);
  for (std::size_t i = 2; i < conv.size(); ++i)
    CHECK(std::abs(conv[i] - conv[i - 1]) < 0.05 * std::abs(conv[i - 1] - conv[i - 2]));
}

TEST_CASE("4P to thirty digits through the integral representation") {
  auto r = bethe_integral({4, 1}, WorkingPrecision::for_digits(32));
  PrecisionGuard g(200);
  const Real ref("-0.0419548945980855486710375943352713418570");
  CHECK(abs((r.value - ref) / ref).to_double() < 1e-30);
  CHECK(r.method == "integral/sturmian");
  CHECK(r.error < 1e-31);
}

TEST_CASE("closed-form and circular sources give the same integral") {
  IntegralOptions o;
  o.source = PSource::FourPClosed;
  auto a = bethe_integral({4, 1}, WorkingPrecision::for_digits(15), o);
  auto b = bethe_integral({4, 1}, WorkingPrecision::for_digits(15));
  CHECK(abs(a.value - b.value).to_double() < 1e-17);
  o.source = PSource::Circular;
  auto c = bethe_integral({6, 5}, WorkingPrecision::for_digits(15), o);
  auto d = bethe_integral({6, 5}, WorkingPrecision::for_digits(15));
  CHECK(abs((c.value - d.value) / d.value).to_double() < 1e-14);
  CHECK_THROWS_AS(bethe_integral({5, 1}, WorkingPrecision::for_digits(10), o), UnsupportedMethodError);
}

TEST_CASE("integral and spectral agree for small states") {
  for (auto s : {QuantumState(1, 0), QuantumState(2, 0), QuantumState(2, 1), QuantumState(3, 1), QuantumState(5, 3)}) {
    auto a = bethe_integral(s, WorkingPrecision::for_digits(14));
    auto b = bethe_spectral(s, WorkingPrecision::for_digits(14));
    const double tol = a.error + b.error + 1e-13 * std::abs(b.value.to_double());
    CHECK_MESSAGE(abs(a.value - b.value).to_double() < tol, s.label());
  }
}

TEST_CASE("zeta above the limit is refused") {
  IntegralOptions o;
  o.max_zeta = 3;
  CHECK_THROWS_AS(bethe_integral_once({6, 1}, 10, o), UnsupportedMethodError);
}

TEST_CASE("circular state near n = 100") {
  auto r = bethe_integral({100, 99}, WorkingPrecision::for_digits(12));
  CHECK(abs(r.value - Real("-0.583308014e-7")).to_double() < 0.5e-16);
}
