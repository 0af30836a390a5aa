#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sunbloch/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalAbort = 3;

int do_run(const std::string& config_path) {
  const sunbloch::cli::RunConfig config = sunbloch::cli::load_run_config(config_path);
  const sunbloch::cli::RunResult result = sunbloch::cli::run(config);
  for (const auto& mr : result.results) {
    std::cout << sunbloch::cli::method_name(mr.method) << " -> " << mr.file << "\n";
  }
  std::cout << "summary -> " << result.summary_file << "\n";
  return kExitOk;
}

int do_verify(int n_max, int trials, unsigned long long seed) {
  const sunbloch::cli::VerifyReport report = sunbloch::cli::verify(n_max, trials, seed);
  std::cout << sunbloch::cli::format_verify_report(report);
  return report.ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(N) coherence-vector dynamics: propagators, constants of motion "
               "and equation-of-motion cross-checks"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* run_cmd = app.add_subcommand("run", "Propagate a configured system");
  run_cmd->add_option("config", config_path, "Path to a run configuration file")->required();

  int n_max = 5;
  int trials = 100;
  unsigned long long seed = 1;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Cross-check the two equation-of-motion routes and "
                                   "the algebra invariants on random Hamiltonians");
  verify_cmd->add_option("--n-max", n_max, "Largest system size N to test")
      ->capture_default_str();
  verify_cmd->add_option("--trials", trials, "Random Hamiltonians per N")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed()) return do_run(config_path);
    if (verify_cmd->parsed()) return do_verify(n_max, trials, seed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfigError;
  } catch (const sunbloch::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const sunbloch::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const sunbloch::DimensionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const sunbloch::Error& e) {
    // PreconditionError, NumericalError, SingularityError
    std::cerr << "numerical abort: " << e.what() << "\n";
    return kExitNumericalAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalAbort;
  }
  return kExitOk;
}
