#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eiwe/cli.hpp"
#include "eiwe/errors.hpp"
#include "eiwe/log.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::int64_t seed = -1;
  int cutoff = -1;
};

void add_common(CLI::App* sub, CommonFlags* flags) {
  sub->add_option("--config", flags->config_path, "sweep config file")
      ->required();
  sub->add_option("--out", flags->out_path, "write output here (default stdout)");
  sub->add_option("--format", flags->format, "csv or json (overrides config)")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--seed", flags->seed, "rng seed (overrides config)");
  sub->add_option("--cutoff", flags->cutoff,
                  "Fock cutoff for oracle runs (overrides config)");
}

eiwe::cli::SweepConfig load_with_overrides(const CommonFlags& flags) {
  eiwe::cli::SweepConfig cfg = eiwe::cli::load_config(flags.config_path);
  if (!flags.format.empty())
    cfg.format = flags.format == "json" ? eiwe::cli::OutputFormat::json
                                        : eiwe::cli::OutputFormat::csv;
  if (flags.seed >= 0) cfg.seed = static_cast<std::uint64_t>(flags.seed);
  if (flags.cutoff >= 0) cfg.cutoff = flags.cutoff;
  return cfg;
}

int emit(const eiwe::cli::CommandResult& result, const std::string& out_path) {
  if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";
  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return eiwe::cli::kExitUsage;
      }
      out << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian work-extraction engine for two-mode squeezed "
               "thermal states"};
  app.require_subcommand(1);

  CommonFlags verify_flags, sweep_flags, oracle_flags;
  CLI::App* verify = app.add_subcommand(
      "verify-eq4", "check the closed-form work law W = xi(r) n_bar hbar w");
  add_common(verify, &verify_flags);
  CLI::App* sweep =
      app.add_subcommand("sweep", "full parameter sweep of the work pipeline");
  add_common(sweep, &sweep_flags);
  CLI::App* oracle = app.add_subcommand(
      "oracle-compare", "Gaussian pipeline vs. truncated Fock brute force");
  add_common(oracle, &oracle_flags);

  double xi = 0.0, p0 = 0.0;
  std::string curvature_out;
  CLI::App* curvature =
      app.add_subcommand("curvature", "Ricci-scalar difference record");
  curvature->add_option("--xi", xi, "entanglement degree in [0, 1]")
      ->required();
  curvature->add_option("--p0", p0, "fluid pressure in Pa")->required();
  curvature->add_option("--out", curvature_out,
                        "write output here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return eiwe::cli::kExitUsage;
  }

  try {
    if (verify->parsed())
      return emit(eiwe::cli::cmd_verify_eq4(load_with_overrides(verify_flags)),
                  verify_flags.out_path);
    if (sweep->parsed())
      return emit(eiwe::cli::cmd_sweep(load_with_overrides(sweep_flags)),
                  sweep_flags.out_path);
    if (oracle->parsed())
      return emit(
          eiwe::cli::cmd_oracle_compare(load_with_overrides(oracle_flags)),
          oracle_flags.out_path);
    if (curvature->parsed())
      return emit(eiwe::cli::cmd_curvature(xi, p0), curvature_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return eiwe::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return eiwe::cli::kExitThreshold;
  }
  return eiwe::cli::kExitUsage;
}
