#include "bethe/accel.hpp"

#include <doctest.h>

using namespace bethe;

TEST_CASE("condensation of a geometric series") {
  PrecisionGuard g(192);
  // a_k = 2^-k: A_0 = sum_m 2^m a_{2^m - 1} = sum_m 2^m 2^(1-2^m)
  TermGenerator t;
  t.term = [](const Real& k) { return pow(Real(2), -k); };
  Real ref;
  for (int m = 0; m < 8; ++m) ref += pow(Real(2), static_cast<long>(m)) * pow(Real(2), -static_cast<long>((1L << m) - 1));
  CHECK(abs(condense(t, 0, 40) - ref).to_double() < 1e-40);
}

TEST_CASE("cnct sums zeta(2)") {
  PrecisionGuard g(256);
  TermGenerator t;
  t.term = [](const Real& k) { return 1 / sqr(k + 1L); };
  auto r = cnct_sum(t, 30);
  const Real zeta2 = sqr(const_pi()) / 6L;
  CHECK(abs(r.sum - zeta2).to_double() < 1e-28);
  CHECK(r.error.to_double() < 1e-28);
}

TEST_CASE("cnct sums a slowly converging power law with a log") {
  PrecisionGuard g(256);
  // sum_{k>=1} ln(k)/k^2 = -zeta'(2) = 0.93754825431584375370...
  TermGenerator t;
  t.term = [](const Real& k) { return log(k + 1L) / sqr(k + 1L); };
  auto r = cnct_sum(t, 25);
  CHECK(abs(r.sum - Real("0.9375482543158437537025740945678649778978")).to_double() < 1e-23);
}

TEST_CASE("cnct tail of the n'^-3 type matches the direct sum of a telescoping form") {
  PrecisionGuard g(256);
  // sum_{k>=0} 1/((k+1)(k+2)(k+3)) = 1/4
  TermGenerator t;
  t.term = [](const Real& k) { return 1 / ((k + 1L) * (k + 2L) * (k + 3L)); };
  auto r = cnct_sum(t, 30);
  CHECK(abs(r.sum - Real(0.25)).to_double() < 1e-29);
}

TEST_CASE("delta transformation accelerates an alternating series") {
  PrecisionGuard g(256);
  // ln 2 = 1 - 1/2 + 1/3 - ...
  std::vector<Real> s;
  Real acc;
  for (int k = 0; k < 30; ++k) {
    acc += Real(k % 2 ? -1 : 1) / static_cast<long>(k + 1);
    s.push_back(acc);
  }
  auto r = nonlinear_transform(s);
  CHECK(abs(r.limit - log(Real(2))).to_double() < 1e-25);
}

TEST_CASE("absolute tolerance stops early") {
  PrecisionGuard g(192);
  TermGenerator t;
  t.term = [](const Real& k) { return 1 / sqr(k + 1L); };
  auto loose = cnct_sum(t, 40, Real(1e-6));
  CHECK(loose.state.condensed.size() < cnct_sum(t, 40).state.condensed.size());
}

TEST_CASE("parallel condensation gives identical bits") {
  PrecisionGuard g(256);
  TermGenerator t;
  t.term = [](const Real& k) { return log(k + 2L) / pow(k + 1L, 3L); };
  auto a = cnct_sum(t, 30, Real(0), 80, Exec::Serial);
  auto b = cnct_sum(t, 30, Real(0), 80, Exec::Parallel);
  CHECK(a.sum == b.sum);
}
