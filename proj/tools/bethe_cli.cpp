#include "bethe/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace bethe;
using namespace bethe::cli;

int main(int argc, char** argv) {
  CLI::App app{"Hydrogenic Bethe logarithms ln k0(n,l)"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value configuration file");

  JobSpec job;
  std::string n_arg, l_arg, zeta_arg, method_arg = "auto", format_arg = "csv";
  auto* compute = app.add_subcommand("compute", "compute ln k0 for a range of states");
  compute->add_option("--n", n_arg, "principal quantum number, K or A..B")->required();
  compute->add_option("--l", l_arg, "orbital angular momentum, K or A..B (default: all)");
  compute->add_option("--zeta", zeta_arg, "angular-momentum defect n - l, K or A..B");
  compute->add_option("--method", method_arg, "integral, spectral, lattice, both or auto");
  compute->add_option("--digits", job.digits, "target significant digits")->check(CLI::Range(3, 200));
  compute->add_option("--format", format_arg, "csv, jsonl or table");
  compute->add_option("--jobs", job.jobs, "states computed concurrently")->check(CLI::PositiveNumber);
  compute->add_option("--max-n", job.max_n, "largest admissible n");

  ValidateOptions vopt;
  std::vector<std::string> sets;
  auto* validate = app.add_subcommand("validate", "compare against the embedded reference values");
  validate->add_option("--set", sets, "4p, table1..table5, fig1, fig2 (default: all)");
  validate->add_option("--sample", vopt.sample, "evenly spaced entries per set (0: all)");
  validate->add_flag("--perturb", vopt.perturb, "shift references by 10 printed units (must fail)");
  validate->add_option("--jobs", vopt.jobs, "checks computed concurrently")->check(CLI::PositiveNumber);

  int dn = 40, dl = 14, dm = 6, points = 101;
  double extent = 0;
  auto* density = app.add_subcommand("density", "|psi|^2 on the phi = 0 half-plane");
  density->add_option("--n", dn);
  density->add_option("--l", dl);
  density->add_option("--m", dm);
  density->add_option("--points", points, "samples along rho; z gets 2*points-1");
  density->add_option("--extent", extent, "half-width in bohr (default 4 n^2 + 20)");

  int ln = 1, ll = 0, lnodes = 200, ldigits = 10;
  double lR = 20;
  auto* lattice = app.add_subcommand("lattice", "finite-difference lattice evaluation");
  lattice->add_option("--n", ln);
  lattice->add_option("--l", ll);
  lattice->add_option("--R", lR, "grid extent in bohr");
  lattice->add_option("--N", lnodes, "number of grid intervals");
  lattice->add_option("--digits", ldigits);

  std::string table_set = "table1";
  int table_jobs = 1;
  auto* table = app.add_subcommand("table", "recompute a published table or figure series");
  table->add_option("--set", table_set, "4p, table1..table5, fig2");
  table->add_option("--jobs", table_jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Config cfg = config_path.empty() ? Config() : Config::from_file(config_path);
    if (*compute) {
      job.n = Range::parse(n_arg);
      if (!l_arg.empty()) job.l = Range::parse(l_arg);
      if (!zeta_arg.empty()) job.zeta = Range::parse(zeta_arg);
      job.method = method_from_string(method_arg);
      job.format = format_from_string(format_arg);
      return cmd_compute(job, cfg, std::cout, std::cerr);
    }
    if (*validate) {
      if (sets.empty()) vopt.sets = all_fixture_sets();
      for (const auto& s : sets) vopt.sets.push_back(fixture_set_from_string(s));
      return cmd_validate(vopt, cfg, std::cout, std::cerr);
    }
    if (*density) return cmd_density(QuantumState(dn, dl), dm, points, extent, std::cout, std::cerr);
    if (*lattice) return cmd_lattice(QuantumState(ln, ll), LatticeGrid(lR, lnodes), ldigits, std::cout, std::cerr);
    if (*table) return cmd_table(fixture_set_from_string(table_set), cfg, table_jobs, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedMethodError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BetheError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
