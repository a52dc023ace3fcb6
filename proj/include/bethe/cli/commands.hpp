#pragma once

#include "bethe/asymptotics.hpp"
#include "bethe/cli/config.hpp"
#include "bethe/cli/output.hpp"
#include "bethe/fixtures.hpp"
#include "bethe/router.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bethe::cli {

enum ExitCode { kOk = 0, kValidationFailed = 1, kUsage = 2, kNumerical = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "7" or "190..200", inclusive.
struct Range {
  int lo = 0, hi = 0;
  static Range parse(const std::string& s);
};

struct JobSpec {
  std::optional<Range> n, l, zeta;
  Method method = Method::Auto;
  int digits = 12;
  Format format = Format::Csv;
  int jobs = 1;  // states computed concurrently
  int max_n = 200;

  // States sorted by (n, l); throws UsageError for empty or invalid ranges.
  std::vector<QuantumState> expand() const;
};

// Library options from the flat config; keys read here are echoed.
ComputeOptions compute_options(const Config& cfg, int digits);

// Runs every state (in parallel over states when jobs > 1) and returns the
// records in (n, l, route) order. Errors are rethrown after all states finish.
std::vector<BetheLogResult> run_states(const std::vector<QuantumState>& states, Method method,
                                       const ComputeOptions& opt, int jobs);

int cmd_compute(const JobSpec& job, const Config& cfg, std::ostream& out, std::ostream& err);

struct ValidateOptions {
  std::vector<FixtureSet> sets;
  int sample = 0;        // 0: every entry; otherwise evenly spaced entries per set
  bool perturb = false;  // shift every reference by 10 printed units (negative control)
  int jobs = 1;
};

struct ValidationLine {
  FixtureSet set;
  int n = 0, l = 0;
  std::string method;
  std::string computed;
  std::string reference;
  double deviation = 0;  // in units of the comparison resolution
  bool pass = false;
};

std::vector<ValidationLine> run_validation(const ValidateOptions& v, const Config& cfg, std::ostream& log);
int cmd_validate(const ValidateOptions& v, const Config& cfg, std::ostream& out, std::ostream& err);

// Sequence ln k0(n, l) for n in [lo, hi] by the spectral method and its
// extrapolation to n -> infinity.
struct LimitStudy {
  int l = 0;
  std::vector<std::pair<int, Real>> values;
  Extrapolation fit;
};
LimitStudy limit_study(int l, Range n, const Config& cfg, int jobs);

// |psi_nlm|^2 at (rho, z) in the phi = 0 half-plane.
double probability_density(const QuantumState& s, int m, double rho, double z);

struct DensityGrid {
  int n = 0, l = 0, m = 0;
  std::vector<double> rho, z;
  std::vector<std::vector<double>> value;  // value[i][j] at (rho[i], z[j])
  // int 2 pi rho drho dz |psi|^2 by the trapezoid rule.
  double normalization() const;
};
DensityGrid density_grid(const QuantumState& s, int m, int points, double extent);

int cmd_density(const QuantumState& s, int m, int points, double extent, std::ostream& out, std::ostream& err);
int cmd_lattice(const QuantumState& s, const LatticeGrid& grid, int digits, std::ostream& out, std::ostream& err);
int cmd_table(FixtureSet set, const Config& cfg, int jobs, std::ostream& out, std::ostream& err);

}  // namespace bethe::cli
