#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sunbloch/coherence.hpp"
#include "sunbloch/pulse.hpp"

namespace sunbloch::cli {

enum class Method { Liouville, Rk4, Magnus, WeiNorman, ClosedForm };

std::string method_name(Method m);

enum class HamiltonianKind { Rwa, Explicit };
enum class InitialStateKind { Ground, Coherence, Rho };

/// Parsed and validated run configuration. See tests/data for examples of
/// the file format: [section] headers, key = value lines, '#' comments.
struct RunConfig {
  int n_levels = 2;

  HamiltonianKind hamiltonian = HamiltonianKind::Rwa;
  PulseProfile pulse;                     // rwa mode
  ComplexMatrix explicit_h;               // explicit mode (constant)

  TimeGrid grid;

  std::vector<Method> methods;            // canonical order, no duplicates
  InitialStateKind initial_state = InitialStateKind::Ground;
  RealVector initial_coherence;
  ComplexMatrix initial_rho;

  std::string output_directory = ".";
  std::string output_prefix = "run";
};

/// Low-level key-value file: sections of `key = value` lines.
class KeyValueFile {
 public:
  static KeyValueFile parse_file(const std::string& path);
  static KeyValueFile parse_string(const std::string& text);

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  long get_long(const std::string& section, const std::string& key) const;
  std::vector<double> get_doubles(const std::string& section, const std::string& key) const;
  std::vector<std::string> get_words(const std::string& section, const std::string& key) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// Parses and validates a run configuration; throws ConfigError with a
/// one-line diagnostic on any problem.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const KeyValueFile& kv);

}  // namespace sunbloch::cli
