#include "bethe/cli/commands.hpp"

#include "bethe/hydro.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>

namespace bethe::cli {

Range Range::parse(const std::string& s) {
  Range r;
  try {
    const auto dots = s.find("..");
    std::size_t pos = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
    } else {
      const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stoi(a, &pos);
      if (pos != a.size()) throw std::invalid_argument(s);
      r.hi = std::stoi(b, &pos);
      if (pos != b.size()) throw std::invalid_argument(s);
    }
  } catch (const std::exception&) {
    throw UsageError("bad range '" + s + "' (expected K or A..B)");
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + s + "'");
  return r;
}

std::vector<QuantumState> JobSpec::expand() const {
  if (!n) throw UsageError("--n is required");
  if (l && zeta) throw UsageError("give either --l or --zeta, not both");
  if (n->lo < 1 || n->hi > max_n)
    throw UsageError("n must lie in 1.." + std::to_string(max_n) + " (configured maximum)");
  std::vector<QuantumState> out;
  for (int nn = n->lo; nn <= n->hi; ++nn) {
    if (zeta) {
      for (int z = zeta->lo; z <= zeta->hi; ++z) {
        if (z < 1 || z > nn) throw UsageError("zeta = " + std::to_string(z) + " invalid for n = " + std::to_string(nn));
        out.emplace_back(nn, nn - z);
      }
    } else {
      const Range lr = l ? *l : Range{0, nn - 1};
      for (int ll = lr.lo; ll <= lr.hi; ++ll) {
        if (ll < 0 || ll >= nn)
          throw UsageError("l = " + std::to_string(ll) + " invalid for n = " + std::to_string(nn) + " (need 0 <= l < n)");
        out.emplace_back(nn, ll);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Exec exec_from(const std::string& s) {
  if (s == "serial") return Exec::Serial;
  if (s == "parallel") return Exec::Parallel;
  throw ConfigError("exec must be serial or parallel, got '" + s + "'");
}

// Runs body(i) for each i, in parallel over i when jobs > 1; the first
// exception is rethrown after the loop.
void fan_out(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  if (jobs > 1) omp_set_num_threads(jobs);
  for_each_index(count, jobs > 1 ? Exec::Parallel : Exec::Serial, body);
}

}  // namespace

ComputeOptions compute_options(const Config& cfg, int digits) {
  ComputeOptions o;
  o.precision = WorkingPrecision::for_digits(digits);
  o.precision.bits = cfg.get_long("precision.bits", o.precision.bits);
  o.precision.max_bits = cfg.get_long("precision.max_bits", o.precision.max_bits);
  o.precision.step_bits = cfg.get_long("precision.step_bits", o.precision.step_bits);
  o.precision.validate();
  const Exec inner = exec_from(cfg.get_string("exec", "serial"));
  o.policy.integral_zeta = static_cast<int>(cfg.get_long("router.integral_zeta", o.policy.integral_zeta));
  o.policy.integral_max_zeta = static_cast<int>(cfg.get_long("router.integral_max_zeta", o.policy.integral_max_zeta));
  o.policy.elevated_bits_per_zeta = cfg.get_long("router.elevated_bits_per_zeta", o.policy.elevated_bits_per_zeta);
  o.integral.source = psource_from_string(cfg.get_string("integral.source", "auto"));
  o.integral.order = static_cast<int>(cfg.get_long("integral.order", 0));
  o.integral.exec = inner;
  o.spectral.order = static_cast<int>(cfg.get_long("spectral.order", 0));
  o.spectral.explicit_factor = static_cast<int>(cfg.get_long("spectral.explicit_factor", o.spectral.explicit_factor));
  o.spectral.cnct_terms = static_cast<int>(cfg.get_long("spectral.cnct_terms", o.spectral.cnct_terms));
  o.spectral.exec = inner;
  const double R = cfg.get_double("lattice.R", 0);
  const long N = cfg.get_long("lattice.N", 0);
  if (R > 0 && N > 0) {
    o.grid = LatticeGrid(R, static_cast<int>(N));
    o.grid_auto = false;
  }
  return o;
}

std::vector<BetheLogResult> run_states(const std::vector<QuantumState>& states, Method method,
                                       const ComputeOptions& opt, int jobs) {
  std::vector<std::vector<BetheLogResult>> slots(states.size());
  fan_out(states.size(), jobs, [&](std::size_t i) { slots[i] = compute_state(states[i], method, opt); });
  std::vector<BetheLogResult> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

int cmd_compute(const JobSpec& job, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto states = job.expand();
  // Resolve routes up front so an unsupported request fails before any work.
  const ComputeOptions opt = compute_options(cfg, job.digits);
  for (const auto& s : states) route(s, job.method, opt.policy);
  RecordWriter w;
  w.format = job.format;
  w.digits = job.digits;
  w.timing = cfg.get_bool("output.timing", true);
  const auto unused = cfg.unused();
  if (!unused.empty()) throw UsageError("unknown config key '" + unused.front() + "'");
  std::vector<std::string> echo = cfg.echo();
  echo.push_back("digits=" + std::to_string(job.digits));
  echo.push_back(std::string("method=") + to_string(job.method));
  echo.push_back("jobs=" + std::to_string(job.jobs));
  std::vector<BetheLogResult> recs;
  try {
    recs = run_states(states, job.method, opt, job.jobs);
  } catch (const UnsupportedMethodError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BetheError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  w.header(out, echo);
  for (const auto& r : recs) w.record(out, r);
  if (job.method == Method::Both) {
    // Consistency of the two representations, per state.
    for (std::size_t i = 0; i + 1 < recs.size(); i += 2) {
      const double d = abs(recs[i].value - recs[i + 1].value).to_double();
      const double tol = std::max(recs[i].error + recs[i + 1].error,
                                  std::abs(recs[i].value.to_double()) * std::pow(10.0, -job.digits));
      if (d > tol) {
        err << "methods disagree for (" << recs[i].n << "," << recs[i].l << "): |diff| = " << d << '\n';
        return kNumerical;
      }
    }
  }
  return kOk;
}

// ---- validation -----------------------------------------------------------

namespace {

struct Check {
  Fixture fixture;
  Method method;
  int digits;
  double tolerance;
};

std::vector<Fixture> sampled(FixtureSet set, int sample) {
  std::vector<Fixture> all = fixtures(set);
  if (set == FixtureSet::Table5) {
    // Only the limits whose n = 190..200 sequences are tabulated are checked.
    all.erase(std::remove_if(all.begin(), all.end(), [](const Fixture& f) { return f.l > 3; }), all.end());
  }
  if (sample <= 0 || static_cast<std::size_t>(sample) >= all.size()) return all;
  std::vector<Fixture> out;
  for (int i = 0; i < sample; ++i) {
    const std::size_t k = sample == 1 ? 0 : i * (all.size() - 1) / (sample - 1);
    out.push_back(all[k]);
  }
  return out;
}

std::vector<Check> direct_checks(const Fixture& f) {
  const double half = f.unit / 2;
  switch (f.set) {
    case FixtureSet::FourP:
      // Integral to every printed digit; spectral to nine significant digits.
      return {{f, Method::Integral, 42, half}, {f, Method::Spectral, 12, 0.5e-11}};
    case FixtureSet::Table1:
    case FixtureSet::Table4:
      return {{f, Method::Integral, 12, half}, {f, Method::Spectral, 12, half}};
    case FixtureSet::Table2:
    case FixtureSet::Table3:
    case FixtureSet::Fig1:
      return {{f, Method::Spectral, 12, half}};
    default:
      return {};
  }
}

}  // namespace

LimitStudy limit_study(int l, Range n, const Config& cfg, int jobs) {
  const int digits = static_cast<int>(cfg.get_long("extrapolation.digits", 14));
  const int max_degree = static_cast<int>(cfg.get_long("extrapolation.max_degree", 5));
  const ComputeOptions opt = compute_options(cfg, digits);
  std::vector<QuantumState> states;
  for (int k = n.lo; k <= n.hi; ++k) states.emplace_back(k, l);
  const auto recs = run_states(states, Method::Spectral, opt, jobs);
  LimitStudy st;
  st.l = l;
  for (const auto& r : recs) st.values.emplace_back(r.n, r.value);
  // S and P sequences have no 1/n term.
  st.fit = extrapolate_limit(st.values, l <= 1, max_degree);
  return st;
}

std::vector<ValidationLine> run_validation(const ValidateOptions& v, const Config& cfg, std::ostream& log) {
  std::vector<Check> checks;
  std::vector<Fixture> limits;
  for (FixtureSet set : v.sets) {
    for (const Fixture& f : sampled(set, v.sample)) {
      if (set == FixtureSet::Table5 || set == FixtureSet::Fig2) {
        limits.push_back(f);
        continue;
      }
      for (const Check& c : direct_checks(f)) checks.push_back(c);
    }
  }
  const int shift = v.perturb ? 10 : 0;
  auto reference = [&](const Fixture& f) {
    PrecisionGuard g(256);
    return f.reference() + Real(shift * f.unit);
  };
  std::vector<ValidationLine> lines(checks.size());
  std::mutex log_lock;
  fan_out(checks.size(), v.jobs, [&](std::size_t i) {
    const Check& c = checks[i];
    ValidationLine& line = lines[i];
    line.set = c.fixture.set;
    line.n = c.fixture.n;
    line.l = c.fixture.l;
    line.method = to_string(c.method);
    line.reference = c.fixture.value;
    try {
      const ComputeOptions opt = compute_options(cfg, c.digits);
      const auto recs = compute_state(QuantumState(c.fixture.n, c.fixture.l), c.method, opt);
      const BetheLogResult& r = recs.front();
      PrecisionGuard g(std::max(256L, r.value.bits()));
      line.method = r.method;
      line.computed = r.value.str(c.digits);
      line.deviation = (abs(r.value - reference(c.fixture)) / Real(c.tolerance)).to_double();
      line.pass = line.deviation <= 1;
    } catch (const std::exception& e) {
      line.computed = std::string("error: ") + e.what();
      line.pass = false;
    }
    std::lock_guard<std::mutex> lk(log_lock);
    log << "  " << to_string(line.set) << " (" << line.n << "," << line.l << ") " << line.method << " done\n";
  });
  // Limits: one extrapolated sequence per l, shared between sets.
  const Range nr = Range::parse(cfg.get_string("extrapolation.n", "190..200"));
  std::map<int, LimitStudy> studies;
  for (const Fixture& f : limits) {
    ValidationLine line;
    line.set = f.set;
    line.n = 0;
    line.l = f.l;
    line.method = "extrapolation";
    line.reference = f.value;
    try {
      if (!studies.count(f.l)) studies.emplace(f.l, limit_study(f.l, nr, cfg, v.jobs));
      const LimitStudy& st = studies.at(f.l);
      // The l = 2 limit is quoted with an absolute agreement of 1e-8; the table limits are
      // compared within the extrapolation spread plus half a printed unit.
      const double tol = f.set == FixtureSet::Fig2 ? 1e-8 : st.fit.error + f.unit / 2;
      PrecisionGuard g(256);
      line.computed = st.fit.limit.str(12) + (st.fit.low_confidence ? " (low confidence)" : "");
      line.deviation = (abs(st.fit.limit - reference(f)) / Real(tol)).to_double();
      line.pass = line.deviation <= 1;
    } catch (const std::exception& e) {
      line.computed = std::string("error: ") + e.what();
    }
    lines.push_back(line);
  }
  return lines;
}

int cmd_validate(const ValidateOptions& v, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto lines = run_validation(v, cfg, err);
  const auto unused = cfg.unused();
  if (!unused.empty()) throw UsageError("unknown config key '" + unused.front() + "'");
  for (const auto& kv : cfg.echo()) out << "# " << kv << '\n';
  out << "set,n,l,method,computed,reference,deviation,status\n";
  int failures = 0, errors = 0;
  for (const auto& ln : lines) {
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3g", ln.deviation);
    out << to_string(ln.set) << ',' << ln.n << ',' << ln.l << ',' << ln.method << ',' << ln.computed << ','
        << ln.reference << ',' << dev << ',' << (ln.pass ? "PASS" : "FAIL") << '\n';
    if (!ln.pass) ++failures;
    if (ln.computed.rfind("error:", 0) == 0) ++errors;
  }
  out << "# " << lines.size() - failures << " passed, " << failures << " failed\n";
  if (errors > 0 && errors == failures) return kNumerical;
  return failures == 0 ? kOk : kValidationFailed;
}

// ---- density --------------------------------------------------------------

double probability_density(const QuantumState& s, int m, double rho, double z) {
  if (std::abs(m) > s.l()) throw DomainError("density: |m| must not exceed l");
  const double r = std::hypot(rho, z);
  const double theta = r == 0 ? 0 : std::atan2(rho, z);
  double R;
  {
    PrecisionGuard g(128);
    R = radial_bound(s, Real(r)).to_double();
  }
  const double Y = std::sph_legendre(s.l(), std::abs(m), theta);
  return R * R * Y * Y;
}

double DensityGrid::normalization() const {
  // |psi|^2 does not depend on phi, so the volume element is 2 pi rho.
  double sum = 0;
  for (std::size_t i = 0; i + 1 < rho.size(); ++i)
    for (std::size_t j = 0; j + 1 < z.size(); ++j) {
      const double cell = (rho[i + 1] - rho[i]) * (z[j + 1] - z[j]);
      const double f = rho[i] * (value[i][j] + value[i][j + 1]) + rho[i + 1] * (value[i + 1][j] + value[i + 1][j + 1]);
      sum += cell * f / 4;
    }
  return 2 * M_PI * sum;
}

DensityGrid density_grid(const QuantumState& s, int m, int points, double extent) {
  if (points < 2) throw DomainError("density: need at least 2 points per axis");
  if (std::abs(m) > s.l()) throw DomainError("density: |m| must not exceed l");
  if (extent <= 0) extent = 4.0 * s.n() * s.n() + 20;
  DensityGrid g;
  g.n = s.n();
  g.l = s.l();
  g.m = m;
  for (int i = 0; i < points; ++i) g.rho.push_back(extent * i / (points - 1));
  for (int j = 0; j < 2 * points - 1; ++j) g.z.push_back(-extent + extent * j / (points - 1));
  g.value.assign(g.rho.size(), std::vector<double>(g.z.size()));
  for_each_index(g.rho.size(), Exec::Serial, [&](std::size_t i) {
    for (std::size_t j = 0; j < g.z.size(); ++j) g.value[i][j] = probability_density(s, m, g.rho[i], g.z[j]);
  });
  return g;
}

int cmd_density(const QuantumState& s, int m, int points, double extent, std::ostream& out, std::ostream& err) {
  if (std::abs(m) > s.l()) {
    err << "error: |m| = " << std::abs(m) << " exceeds l = " << s.l() << '\n';
    return kUsage;
  }
  const DensityGrid g = density_grid(s, m, points, extent);
  out << "# n=" << g.n << " l=" << g.l << " m=" << g.m << " phi=0 units=bohr\n";
  out << "# normalization=" << g.normalization() << '\n';
  out << "rho z density\n";
  char buf[96];
  for (std::size_t i = 0; i < g.rho.size(); ++i)
    for (std::size_t j = 0; j < g.z.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.9g %.9g %.9e\n", g.rho[i], g.z[j], g.value[i][j]);
      out << buf;
    }
  return kOk;
}

// ---- lattice --------------------------------------------------------------

int cmd_lattice(const QuantumState& s, const LatticeGrid& grid, int digits, std::ostream& out, std::ostream& err) {
  try {
    const BetheLogResult r = lattice_bethe(s, grid);
    const LatticeSum unit = lattice_sum(s, grid, LatticeKernel::Unit);
    RecordWriter w;
    w.digits = digits;
    w.header(out, {"lattice.R=" + std::to_string(grid.R), "lattice.N=" + std::to_string(grid.N)});
    w.record(out, r);
    out << "# unit_kernel_sum=" << unit.value << " expected=" << (s.l() == 0 ? 1 : 0)
        << " reference_energy=" << unit.reference_energy << " positive_states=" << unit.positive_states << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

// ---- tables ---------------------------------------------------------------

int cmd_table(FixtureSet set, const Config& cfg, int jobs, std::ostream& out, std::ostream& err) {
  const int digits = static_cast<int>(cfg.get_long("table.digits", 9));
  if (set == FixtureSet::Table5 || set == FixtureSet::Fig2) {
    const Range nr = Range::parse(cfg.get_string("extrapolation.n", "190..200"));
    std::vector<int> ls;
    if (set == FixtureSet::Fig2) ls = {2};
    else ls = {0, 1, 2, 3};
    for (int l : ls) {
      const LimitStudy st = limit_study(l, nr, cfg, jobs);
      if (set == FixtureSet::Fig2) {
        out << "# ln k0(n,2) against 1/n; last row is the extrapolated limit\n";
        for (const auto& [n, v] : st.values) {
          char x[32];
          std::snprintf(x, sizeof x, "%.9e", 1.0 / n);
          out << x << ' ' << v.str(digits + 3) << '\n';
        }
        out << "0 " << st.fit.limit.str(digits + 3) << '\n';
      } else {
        out << "l=" << l << "  " << format_grouped(st.fit.limit, digits) << "  (tabulated "
            << format_grouped(Real(limit_reference(l)), 10) << ", spread " << st.fit.error << ", degree "
            << st.fit.degree << ")\n";
      }
    }
    return kOk;
  }
  if (set == FixtureSet::Fig1) {
    err << "error: use the density command for the plotted state (40,14,6)\n";
    return kUsage;
  }
  const auto fx = fixtures(set);
  std::vector<QuantumState> states;
  for (const auto& f : fx) states.emplace_back(f.n, f.l);
  const Method m = (set == FixtureSet::Table2 || set == FixtureSet::Table3) ? Method::Spectral : Method::Auto;
  const auto recs = run_states(states, m, compute_options(cfg, digits + 3), jobs);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    char lead[48];
    std::snprintf(lead, sizeof lead, "ln k0(%d,%d) = ", recs[i].n, recs[i].l);
    out << lead << format_grouped(recs[i].value, digits) << "  [" << recs[i].method
        << "]\n";
  }
  return kOk;
}

}  // namespace bethe::cli
