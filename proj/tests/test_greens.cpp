#include "bethe/greens.hpp"
#include "bethe/hydro.hpp"

#include <doctest.h>

#include <cmath>

using namespace bethe;

namespace {

double rel(const Real& a, const Real& b) { return (abs(a - b) / abs(b)).to_double(); }

// Oracle: raw partial sum -nt sum_k x^(2k)/(k - nt) in long double.
long double phi_bruteforce(int n, long double t, long terms) {
  const long double x = (1 - t) / (1 + t), z = x * x, nu = n * t;
  long double s = 0, c = 0, p = 1;
  for (long k = 0; k < terms; ++k) {
    const long double y = p / (k - nu) - c;
    const long double u = s + y;
    c = (u - s) - y;
    s = u;
    p *= z;
  }
  return -nu * s;
}

}  // namespace

TEST_CASE("phi at t = 1 is one") {
  PrecisionGuard g(128);
  for (int n : {1, 4, 30}) CHECK(abs(phi(n, Real(1), 30) - 1).to_double() < 1e-35);
}

TEST_CASE("phi against brute-force partial sums") {
  PrecisionGuard g(128);
  CHECK(std::abs(phi(4, Real(0.6), 25).to_double() / static_cast<double>(phi_bruteforce(4, 0.6L, 100000)) - 1) <
        1e-15);
  // x^2 >= 1/2: accelerated tail
  CHECK(std::abs(phi(4, Real(0.05), 25).to_double() / static_cast<double>(phi_bruteforce(4, 0.05L, 10000000)) - 1) <
        1e-12);
}

TEST_CASE("phi refuses evaluation on a pole") {
  PrecisionGuard g(128);
  CHECK_THROWS_AS(phi(4, Real(0.5), 20), PoleProximityError);
}

TEST_CASE("4P closed form agrees with the Sturmian series") {
  PrecisionGuard g(200);
  const QuantumState s(4, 1);
  for (const char* ts : {"0.9", "0.6", "0.3", "0.01"}) {
    const Real t(ts);
    const Real closed = p_matrix_4p(t, 40);
    CHECK(rel(sturmian_P(s, t, 40).value, closed) < 1e-30);
    CHECK(rel(sturmian_P(s, t, 40, SturmianForm::Hypergeometric).value, closed) < 1e-30);
  }
  CHECK(rel(sturmian_P(s, Real(0.9), 40, SturmianForm::DirectSum).value, p_matrix_4p(Real(0.9), 40)) < 1e-30);
}

TEST_CASE("4P closed form as typeset differs from the series") {
  PrecisionGuard g(160);
  const Real t(0.6);
  CHECK(rel(p_matrix_4p(t, 30, FourPVariant::Printed), sturmian_P({4, 1}, t, 30).value) > 1e-3);
}

TEST_CASE("small-t limit P/t^2 -> 2/3") {
  PrecisionGuard g(160);
  const Real two_thirds = Real(2) / 3L;
  for (auto s : {QuantumState(1, 0), QuantumState(4, 1), QuantumState(20, 19)}) {
    for (double t : {1e-3, 1e-4}) {
      const Real tt(t);
      const Real r = sturmian_P(s, tt, 30).value / sqr(tt);
      CHECK(abs(r - two_thirds).to_double() < 10 * t);
    }
  }
  const Real t(1e-4);
  CHECK(abs(p_matrix_4p(t, 30) / sqr(t) - two_thirds).to_double() < 10 * 1e-4);
}

TEST_CASE("circular series agrees with the Sturmian series") {
  PrecisionGuard g(200);
  const Real t(0.3);
  CHECK(rel(circular_series(10, t, 40), sturmian_P({10, 9}, t, 40).value) < 1e-30);
  // t = 1/2 is the 2p pole itself, so the 2p check sits beside it
  CHECK(rel(circular_series(2, Real(0.3), 40), sturmian_P({2, 1}, Real(0.3), 40).value) < 1e-30);
  CHECK(rel(circular_series(2, Real(0.55), 40), sturmian_P({2, 1}, Real(0.55), 40).value) < 1e-30);
  // small t: the hypergeometric branch of the circular series
  CHECK(rel(circular_series(10, Real(0.05), 40), sturmian_P({10, 9}, Real(0.05), 40).value) < 1e-28);
}

TEST_CASE("circular series has its only interior singularity at (n-1)/n") {
  PrecisionGuard g(128);
  for (int n : {2, 5, 50}) {
    const Real tp = Real(n - 1) / static_cast<long>(n);
    const Real h(1e-8);
    // the k = 0 denominator changes sign across the pole
    CHECK(circular_term(0, n, tp - h).sign() != circular_term(0, n, tp + h).sign());
    CHECK(pole_shells(QuantumState(n, n - 1)) == std::vector<int>{n - 1});
    // k >= 1 terms are regular there
    for (long k = 1; k < 4; ++k) CHECK(circular_term(k, n, tp).is_finite());
  }
}

TEST_CASE("circular f is finite away from the pole and matches the series") {
  PrecisionGuard g(160);
  const Real t(0.3);
  const Real f = circular_f(10, t, 30);
  CHECK(f.is_finite());
  CHECK_THROWS_AS(circular_f(10, Real(9) / 10L, 30), PoleProximityError);
}

TEST_CASE("spectral oracle for the resolvent element") {
  PrecisionGuard g(128);
  CHECK(rel(spectral_P({3, 0}, Real(0.8), 15), sturmian_P({3, 0}, Real(0.8), 25).value) < 1e-10);
  CHECK(rel(spectral_P({4, 1}, Real(0.1), 15), sturmian_P({4, 1}, Real(0.1), 25).value) < 1e-10);
}

TEST_CASE("pole residues match the symmetric limit") {
  PrecisionGuard g(256);
  const QuantumState s(4, 1);
  CHECK(pole_shells(s) == std::vector<int>{1, 2, 3});
  for (int np : pole_shells(s)) {
    const Real tp = Real(np) / 4L;
    const Real h("1e-25");
    const Real num = (sturmian_P(s, tp + h, 40).value - sturmian_P(s, tp - h, 40).value) * h / 2L;
    CHECK(rel(propagator_residue(s, np), num) < 1e-20);
  }
}

TEST_CASE("residues vanish exactly where no dipole channel exists") {
  PrecisionGuard g(128);
  // 2S has no lower shell reachable by a dipole, 3D decays only to 2P.
  CHECK(pole_shells(QuantumState(2, 0)).empty());
  CHECK(pole_shells(QuantumState(3, 2)) == std::vector<int>{2});
  for (int np : pole_shells(QuantumState(7, 3))) {
    double d = 0;
    for (int L : {2, 4})
      if (np > L) d += std::abs(dipole_bound({7, 3}, {np, L}).value.to_double());
    CHECK(d > 0);
    CHECK(propagator_residue({7, 3}, np).to_double() != 0);
  }
}

TEST_CASE("degenerate H closed form agrees with the series") {
  PrecisionGuard g(200);
  for (long A : {2L, 3L, 7L}) {
    const Real b("-2.7");
    for (const char* xs : {"0.6", "0.95", "0.9999"}) {
      const Real X(xs);
      CHECK(rel(degenerate_h(A, b, X, HMethod::Logarithmic), degenerate_h(A, b, X, HMethod::Series)) < 1e-30);
    }
  }
}

TEST_CASE("pole distance") {
  PrecisionGuard g(128);
  CHECK(pole_distance({4, 1}, Real(0.3)) == doctest::Approx(0.05));
  CHECK_THROWS_AS(sturmian_P({4, 1}, Real(0.5), 20), PoleProximityError);
}
