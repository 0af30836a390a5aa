#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "sunbloch/config.hpp"
#include "sunbloch/dynamics.hpp"
#include "sunbloch/frame.hpp"

namespace sunbloch {

/// Hermitian matrix with entries uniform in [-1,1] + i[-1,1], symmetrized.
/// Uses raw engine draws (not std distributions) so identical seeds give
/// identical matrices on every platform.
ComplexMatrix random_hermitian(int n, std::mt19937_64& rng);

/// Engine seeded reproducibly per (seed, n, trial).
std::mt19937_64 make_rng(unsigned long long seed, int n, int trial);

namespace cli {

struct MethodResult {
  Method method;
  Trajectory trajectory;           // states in the G frame
  std::string file;                // written CSV path
  double file_audit_residual = 0;  // recomputation check on the written file
};

struct RunResult {
  RunConfig config;
  FrameTransform frame;            // block frame (identity when not rotated)
  bool frame_rotated = false;
  BlockDecomposition blocks;       // detected in the block frame
  std::vector<MethodResult> results;
  // max_t max_a |v_a^A(t) - v_a^B(t)| keyed by "methodA_vs_methodB"
  std::map<std::string, double> comparisons;
  std::map<std::string, double> drifts;  // "method.quantity" -> max drift
  std::string summary_file;
};

/// Executes every configured method, writes one CSV per method plus a
/// summary, and self-audits each written file. The SUNBLOCH_OUTPUT_DIR
/// environment variable overrides [output] directory when set.
RunResult run(const RunConfig& config);

/// Re-reads a trajectory CSV and checks that the norm2 and block_* columns
/// equal what the state columns imply; returns the worst residual.
double audit_trajectory_file(const std::string& path);

struct VerifyRow {
  int n = 0;
  int trials = 0;
  double al_he_link = 0;          // max |g_AL - g_HE| over random Hermitians
  double orthonormality = 0;      // Tr(G_a G_b) - 2 delta_ab
  double tracelessness = 0;       // |Tr G_a|
  double antisymmetry = 0;        // raw trace formula vs permuted lookups
  double jacobi = 0;
  double reconstruction = 0;      // [G_a,G_b] vs 2i f_abc G_c
  double two_level_g = -1;        // N=2 only: RWA g vs the known 3x3 form
  bool ok = false;
};

struct VerifyReport {
  int n_max = 0;
  int trials = 0;
  unsigned long long seed = 0;
  std::vector<VerifyRow> rows;
  bool ok = false;
};

/// Algebra and AL/HE cross-checks for N = 2..n_max with `trials` seeded
/// random Hamiltonians each. Throws ConfigError for n_max < 2 or
/// trials < 1.
VerifyReport verify(int n_max, int trials, unsigned long long seed);

std::string format_verify_report(const VerifyReport& report);

}  // namespace cli
}  // namespace sunbloch
