// One PASS/FAIL line per acceptance criterion on stdout; details on stderr.
// Exit status is nonzero when any criterion fails.
#include "bethe/asymptotics.hpp"
#include "bethe/cli/commands.hpp"
#include "bethe/integral_rep.hpp"
#include "bethe/lattice.hpp"
#include "bethe/spectral_rep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace bethe;
using namespace bethe::cli;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Verdict fixture_set(std::vector<FixtureSet> sets, int sample) {
  ValidateOptions v;
  v.sets = std::move(sets);
  v.sample = sample;
  const auto lines = run_validation(v, Config(), std::cerr);
  Verdict out{true, ""};
  int failed = 0;
  for (const auto& ln : lines) {
    std::cerr << "  " << to_string(ln.set) << " (" << ln.n << "," << ln.l << ") " << ln.method << " "
              << ln.computed << " ref " << ln.reference << " dev " << ln.deviation << (ln.pass ? "" : " FAIL")
              << '\n';
    if (!ln.pass) ++failed, out.pass = false;
  }
  out.detail = std::to_string(lines.size() - failed) + "/" + std::to_string(lines.size()) + " checks within tolerance";
  return out;
}

Verdict eq7() {
  const QuantumState s(4, 1);
  const Fixture& f = find_fixture(FixtureSet::FourP, 4, 1);
  auto t0 = std::chrono::steady_clock::now();
  const auto ri = bethe_integral(s, WorkingPrecision::for_digits(30));
  const double ti = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const auto rs = bethe_spectral(s, WorkingPrecision::for_digits(9));
  const double ts = seconds_since(t0);
  PrecisionGuard g(256);
  const double di = agreeing_digits(ri.value, f.reference());
  const double ds = agreeing_digits(rs.value, f.reference());
  return {di >= 30 && ds >= 9 && ti < 60 && ts < 600,
          fmt("integral %.1f digits in %.1f s, ", di, ti) + fmt("spectral %.1f digits in %.1f s", ds, ts)};
}

bool contains(const Band& b, double x) { return std::abs(x - b.value) <= b.uncertainty; }

Verdict bands() {
  PrecisionGuard g(128);
  const double s200 = find_fixture(FixtureSet::Table2, 200, 0).reference().to_double();
  const double p200 = find_fixture(FixtureSet::Table2, 200, 1).reference().to_double();
  const double c99 = find_fixture(FixtureSet::Table1, 100, 99).reference().to_double();
  const double c199 = find_fixture(FixtureSet::Table4, 200, 199).reference().to_double();
  const bool a = contains(s_asymptote(200), s200), b = contains(p_asymptote(200), p200);
  const bool c = contains(circular_asymptote(99), c99), d = contains(circular_asymptote(199), c199);
  std::string det = std::string("S ") + (a ? "in" : "out") + ", P " + (b ? "in" : "out") + ", l=99 " +
                    (c ? "in" : "out") + ", l=199 " + (d ? "in" : "out");
  return {a && b && c && d, det};
}

Verdict ratios() {
  PrecisionGuard g(128);
  const auto ground = spectral_split(QuantumState(1, 0), 15);
  const double r1 = ground.ratio().to_double();
  // n = l is not a valid state; (151,150) is the first circular state of the family.
  auto t0 = std::chrono::steady_clock::now();
  const auto circ = spectral_split(QuantumState(151, 150), 12);
  const double t = seconds_since(t0);
  const double r2 = circ.ratio().to_double();
  return {std::abs(r1 / 0.00483 - 1) < 0.01 && r2 > 1e10 && t < 1800,
          fmt("|B/C|(1,0) = %.5g, |B/C|(151,150) = %.3g in %.0f s", r1, r2, t)};
}

Verdict sum_rules() {
  PrecisionGuard g(160);
  bool ok = true;
  double worst_unit = 0, worst_trk = 0;
  for (auto s : {QuantumState(1, 0), QuantumState(4, 1), QuantumState(10, 0), QuantumState(20, 19)}) {
    const double d = std::abs((unit_kernel_check(s, 14) - Real(s.l() == 0 ? 1 : 0)).to_double());
    worst_unit = std::max(worst_unit, d);
    ok = ok && d < 1e-10;
  }
  for (auto s : {QuantumState(1, 0), QuantumState(4, 1)}) {
    const double d = std::abs((trk_sum(s, 12) - Real(3) / 2).to_double());
    worst_trk = std::max(worst_trk, d);
    ok = ok && d < 1e-8;
  }
  return {ok, fmt("unit kernel worst %.2g, TRK worst %.2g", worst_unit, worst_trk)};
}

Verdict lattice() {
  const QuantumState s(1, 0);
  const LatticeGrid grid(20, 200);
  const auto lat = lattice_bethe(s, grid);
  const auto ref = bethe_spectral(s, WorkingPrecision::for_digits(15));
  PrecisionGuard g(128);
  const double diff = abs(lat.value - ref.value).to_double();
  // Unit-kernel sum on N, 2N, 4N: observed order log2(e_N / e_2N).
  std::vector<double> e;
  for (int N : {200, 400, 800}) e.push_back(std::abs(lattice_sum(s, LatticeGrid(20, N), LatticeKernel::Unit).value - 1));
  const double p1 = std::log2(e[0] / e[1]), p2 = std::log2(e[1] / e[2]);
  const bool agree = diff < 5e-10;
  const bool order = std::min(p1, p2) > 1.8;
  return {agree && order, fmt("|lattice - spectral| = %.3g, unit-sum order %.2f, %.2f", diff, p1, p2)};
}

Verdict sweep() {
  std::mt19937 rng(20100);
  std::uniform_int_distribution<int> nd(1, 120);
  std::set<std::pair<int, int>> picked;
  while (picked.size() < 20) {
    const int n = nd(rng);
    std::uniform_int_distribution<int> zd(1, std::min(5, n));
    picked.insert({n, n - zd(rng)});
  }
  int bad = 0;
  double worst = 0;
  for (auto [n, l] : picked) {
    const QuantumState s(n, l);
    const auto a = bethe_integral(s, WorkingPrecision::for_digits(12));
    const auto b = bethe_spectral(s, WorkingPrecision::for_digits(12));
    PrecisionGuard g(256);
    const double d = abs(a.value - b.value).to_double();
    const double tol = a.error + b.error;
    const double ratio = tol > 0 ? d / tol : (d == 0 ? 0 : INFINITY);
    worst = std::max(worst, ratio);
    std::cerr << "  (" << n << "," << l << ") integral " << a.value.str(14) << " spectral " << b.value.str(14)
              << " diff " << d << " combined error " << tol << '\n';
    if (!(d < tol)) ++bad;
  }
  return {bad == 0, std::to_string(20 - bad) + "/20 states agree, worst diff/error " + fmt("%.3g", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"(4,1) to 30 digits", eq7},
      {"table1 sample (n = 100..110), both methods", [] { return fixture_set({FixtureSet::Table1}, 8); }},
      {"table2 sample (n = 190..200, l <= 3), spectral", [] { return fixture_set({FixtureSet::Table2}, 6); }},
      {"table3 sample (n = 190..200, l = 100..103), spectral", [] { return fixture_set({FixtureSet::Table3}, 4); }},
      {"table4 (near-circular n ~ 200), both methods", [] { return fixture_set({FixtureSet::Table4}, 0); }},
      {"(40,14) Rydberg value", [] { return fixture_set({FixtureSet::Fig1}, 0); }},
      {"n -> infinity limits", [] { return fixture_set({FixtureSet::Fig2, FixtureSet::Table5}, 0); }},
      {"asymptotic bands", bands},
      {"|B/C| ratios", ratios},
      {"sum rules", sum_rules},
      {"lattice cross-check", lattice},
      {"cross-method sweep", sweep},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::cerr << "criterion " << i + 1 << ": " << criteria[i].first << '\n';
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << "criterion " << i + 1 << " " << (v.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << v.detail << fmt(" [%.0f s]", seconds_since(t0)) << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
