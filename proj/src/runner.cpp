#include "sunbloch/runner.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sunbloch/wei_norman.hpp"

namespace sunbloch {

namespace {

double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  ComplexMatrix b(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double re = uniform_pm1(rng);
      const double im = uniform_pm1(rng);
      b(r, c) = Complex(re, im);
    }
  }
  return 0.5 * (b + b.adjoint().eval());
}

std::mt19937_64 make_rng(unsigned long long seed, int n, int trial) {
  const unsigned long long mixed =
      seed * 0x9E3779B97F4A7C15ULL + static_cast<unsigned long long>(n) * 1000003ULL +
      static_cast<unsigned long long>(trial) * 7919ULL + 1ULL;
  return std::mt19937_64(mixed);
}

namespace cli {

namespace {

std::string g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string block_column_name(const std::vector<int>& block) {
  std::string name = "block";
  for (const int idx : block) name += "_" + std::to_string(idx + 1);
  return name;
}

ComplexMatrix ground_state_rho(int n) {
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  rho(0, 0) = 1.0;
  return rho;
}

Trajectory wei_norman_trajectory(const RunConfig& cfg, const RealVector& v0,
                                 const TimeGrid& grid) {
  const WnParameters params = integrate_wn(cfg.pulse, grid);
  const std::vector<Matrix3> ms = reconstruct_m(params);
  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(ms.size());
  traj.norm2.reserve(ms.size());
  for (const auto& m : ms) {
    const RealVector v = m * v0;
    traj.states.push_back(v);
    traj.norm2.push_back(v.squaredNorm());
  }
  return traj;
}

void write_trajectory_csv(const std::string& path, const MethodResult& result,
                          const RunResult& ctx) {
  const Trajectory& traj = result.trajectory;
  const int adim = static_cast<int>(traj.states.front().size());
  const bool liouville = result.method == Method::Liouville;

  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write trajectory file '" + path + "'");

  out << "t";
  for (int a = 0; a < adim; ++a) out << ",v" << (a + 1);
  out << ",norm2";
  if (ctx.frame_rotated) {
    for (int a = 0; a < adim; ++a) out << ",f" << (a + 1);
  }
  for (const auto& block : ctx.blocks.blocks) out << "," << block_column_name(block);
  if (liouville) out << ",tr_rho,tr_rho2";
  out << "\n";

  for (long i = 0; i < traj.grid.n_samples(); ++i) {
    out << g17(traj.grid.time(i));
    const RealVector& v = traj.states[i];
    for (int a = 0; a < adim; ++a) out << "," << g17(v(a));
    out << "," << g17(traj.norm2[i]);
    const RealVector w = ctx.frame_rotated ? ctx.frame.apply(v) : v;
    if (ctx.frame_rotated) {
      for (int a = 0; a < adim; ++a) out << "," << g17(w(a));
    }
    for (const double n2 : ctx.blocks.norms(w)) out << "," << g17(n2);
    if (liouville) out << "," << g17(traj.trace[i]) << "," << g17(traj.purity[i]);
    out << "\n";
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

double audit_trajectory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open trajectory file '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty trajectory file '" + path + "'");
  const std::vector<std::string> header = split_csv_line(line);

  std::vector<int> v_cols, f_cols;
  std::vector<std::pair<int, std::vector<int>>> block_cols;  // column, member indices
  int norm2_col = -1;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    const std::string& h = header[i];
    if (h.size() >= 2 && h[0] == 'v') v_cols.push_back(i);
    if (h.size() >= 2 && h[0] == 'f') f_cols.push_back(i);
    if (h == "norm2") norm2_col = i;
    if (h.rfind("block_", 0) == 0) {
      std::vector<int> members;
      std::istringstream tail(h.substr(6));
      std::string tok;
      while (std::getline(tail, tok, '_')) members.push_back(std::stoi(tok) - 1);
      block_cols.emplace_back(i, members);
    }
  }
  if (norm2_col < 0 || v_cols.empty()) {
    throw ConfigError("trajectory file '" + path + "' lacks state/norm2 columns");
  }
  // Block norms recompute from the frame components when present.
  const std::vector<int>& frame_cols = f_cols.empty() ? v_cols : f_cols;

  double worst = 0.0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    double norm2 = 0.0;
    for (const int c : v_cols) {
      const double x = std::stod(fields[c]);
      norm2 += x * x;
    }
    worst = std::max(worst, std::abs(norm2 - std::stod(fields[norm2_col])));
    for (const auto& [col, members] : block_cols) {
      double bn = 0.0;
      for (const int m : members) bn += std::pow(std::stod(fields[frame_cols[m]]), 2);
      worst = std::max(worst, std::abs(bn - std::stod(fields[col])));
    }
  }
  return worst;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  result.config = config;
  const RunConfig& cfg = result.config;
  const int n = cfg.n_levels;
  const int adim = n * n - 1;

  const GeneratorSet gens = build_generators(n);
  const StructureTensor f = structure_constants(gens);

  // Hamiltonian as a function of time plus the matching torque/EOM routes.
  HamiltonianFn h_of_t;
  EomFn g_of_t;
  if (cfg.hamiltonian == HamiltonianKind::Rwa) {
    validate_pulse(cfg.pulse, cfg.grid);
    const PulseProfile& pulse = cfg.pulse;
    h_of_t = [pulse](double t) {
      ComplexMatrix h(2, 2);
      h << 0.0, 0.5 * pulse.omega(t), 0.5 * pulse.omega(t), pulse.delta(t);
      return h;
    };
    g_of_t = [pulse, f](double t) {
      TorqueVector torque;
      torque.gamma = Eigen::Vector3d(pulse.omega(t), 0.0, -pulse.delta(t));
      return eom_matrix_he(torque, f).mat;
    };
  } else {
    const ComplexMatrix h = cfg.explicit_h;
    const RealMatrix g = eom_matrix_al(h, gens).mat;
    h_of_t = [h](double) { return h; };
    g_of_t = [g](double) { return g; };
  }

  // Initial state in both pictures.
  ComplexMatrix rho0;
  RealVector v0;
  switch (cfg.initial_state) {
    case InitialStateKind::Ground:
      rho0 = ground_state_rho(n);
      v0 = rho_to_coherence(rho0, gens);
      break;
    case InitialStateKind::Coherence:
      v0 = cfg.initial_coherence;
      validate_coherence_vector(v0, n);
      rho0 = coherence_to_rho(v0, gens);
      break;
    case InitialStateKind::Rho:
      rho0 = cfg.initial_rho;
      v0 = rho_to_coherence(rho0, gens);
      break;
  }

  // Block frame: the rotated two-level frame whenever the detuning shares
  // the pulse envelope (identity rotation when delta0 = 0), otherwise the
  // generator frame itself.
  const bool want_rotation = cfg.hamiltonian == HamiltonianKind::Rwa &&
                             (cfg.pulse.proportional() || cfg.pulse.delta0 == 0.0) &&
                             !(cfg.pulse.omega0 == 0.0 && cfg.pulse.delta0 == 0.0);
  if (want_rotation) {
    result.frame = build_f_frame(cfg.pulse.omega0, cfg.pulse.delta0);
    result.frame_rotated = !result.frame.matrix.isIdentity(0.0);
  } else {
    result.frame = FrameTransform{RealMatrix::Identity(adim, adim)};
    result.frame_rotated = false;
  }
  const FrameTransform& frame = result.frame;
  result.blocks = detect_blocks(
      [&](double t) { return (frame.matrix * g_of_t(t) * frame.matrix.transpose()).eval(); },
      cfg.grid);

  // Propagate.
  for (const Method method : cfg.methods) {
    MethodResult mr;
    mr.method = method;
    switch (method) {
      case Method::Liouville:
        mr.trajectory = propagate_liouville(rho0, h_of_t, cfg.grid, gens);
        break;
      case Method::Rk4:
        mr.trajectory = propagate_coherence_rk4(v0, g_of_t, cfg.grid);
        break;
      case Method::Magnus:
        mr.trajectory = magnus_propagate(v0, g_of_t, cfg.grid);
        break;
      case Method::WeiNorman:
        mr.trajectory = wei_norman_trajectory(cfg, v0, cfg.grid);
        break;
      case Method::ClosedForm: {
        Trajectory traj = closed_form_f_solution(cfg.pulse, cfg.grid);
        for (auto& state : traj.states) state = frame.apply_inverse(state);
        mr.trajectory = std::move(traj);
        break;
      }
    }
    result.results.push_back(std::move(mr));
  }

  // Drifts.
  for (const MethodResult& mr : result.results) {
    const std::string name = method_name(mr.method);
    result.drifts[name + ".norm2"] = mr.trajectory.norm2_drift();
    Trajectory in_frame;
    in_frame.states.reserve(mr.trajectory.states.size());
    for (const auto& v : mr.trajectory.states) in_frame.states.push_back(frame.apply(v));
    const std::vector<double> block_drift = audit_conserved_norms(in_frame, result.blocks);
    for (size_t k = 0; k < block_drift.size(); ++k) {
      result.drifts[name + "." + block_column_name(result.blocks.blocks[k])] = block_drift[k];
    }
    if (mr.method == Method::Liouville) {
      double tr_drift = 0.0, purity_drift = 0.0;
      for (const double tr : mr.trajectory.trace) {
        tr_drift = std::max(tr_drift, std::abs(tr - 1.0));
      }
      for (const double p : mr.trajectory.purity) {
        purity_drift = std::max(purity_drift, std::abs(p - mr.trajectory.purity.front()));
      }
      result.drifts[name + ".trace"] = tr_drift;
      result.drifts[name + ".purity"] = purity_drift;
    }
  }

  // Pairwise comparisons in the G frame.
  for (size_t i = 0; i < result.results.size(); ++i) {
    for (size_t j = i + 1; j < result.results.size(); ++j) {
      const auto& a = result.results[i].trajectory.states;
      const auto& b = result.results[j].trajectory.states;
      double dev = 0.0;
      for (size_t k = 0; k < a.size(); ++k) {
        dev = std::max(dev, (a[k] - b[k]).cwiseAbs().maxCoeff());
      }
      result.comparisons[method_name(result.results[i].method) + "_vs_" +
                         method_name(result.results[j].method)] = dev;
    }
  }

  // Output files.
  std::string out_dir = cfg.output_directory;
  if (const char* env = std::getenv("SUNBLOCH_OUTPUT_DIR"); env && *env) {
    out_dir = env;
  }
  std::filesystem::create_directories(out_dir);
  for (MethodResult& mr : result.results) {
    const std::string path =
        (std::filesystem::path(out_dir) / (cfg.output_prefix + "_" + method_name(mr.method) + ".csv"))
            .string();
    write_trajectory_csv(path, mr, result);
    mr.file = path;
    mr.file_audit_residual = audit_trajectory_file(path);
  }

  // Summary.
  const std::string summary_path =
      (std::filesystem::path(out_dir) / (cfg.output_prefix + "_summary.txt")).string();
  std::ofstream out(summary_path);
  if (!out) throw ConfigError("cannot write summary file '" + summary_path + "'");
  out << "[run]\n";
  out << "n_levels = " << n << "\n";
  out << "hamiltonian = " << (cfg.hamiltonian == HamiltonianKind::Rwa ? "rwa" : "explicit")
      << "\n";
  out << "t_start = " << g17(cfg.grid.t_start) << "\n";
  out << "t_end = " << g17(cfg.grid.t_end) << "\n";
  out << "n_steps = " << cfg.grid.n_steps << "\n";
  out << "methods =";
  for (const auto& mr : result.results) out << " " << method_name(mr.method);
  out << "\n\n[frame]\n";
  out << "rotated = " << (result.frame_rotated ? "yes" : "no") << "\n";
  for (size_t k = 0; k < result.blocks.blocks.size(); ++k) {
    out << "block_" << (k + 1) << " =";
    for (const int idx : result.blocks.blocks[k]) out << " " << (idx + 1);
    out << "\n";
  }
  out << "\n[comparisons]\n";
  for (const auto& [key, val] : result.comparisons) {
    out << key << " = " << g17(val) << "\n";
  }
  out << "\n[drifts]\n";
  for (const auto& [key, val] : result.drifts) {
    out << key << " = " << g17(val) << "\n";
  }
  out << "\n[files]\n";
  for (const auto& mr : result.results) {
    out << method_name(mr.method) << " = " << mr.file << "\n";
    out << method_name(mr.method) << "_audit = " << g17(mr.file_audit_residual) << "\n";
  }
  result.summary_file = summary_path;
  return result;
}

VerifyReport verify(int n_max, int trials, unsigned long long seed) {
  if (n_max < 2) throw ConfigError("verify: --n-max must be >= 2");
  if (trials < 1) throw ConfigError("verify: --trials must be >= 1");

  VerifyReport report;
  report.n_max = n_max;
  report.trials = trials;
  report.seed = seed;
  report.ok = true;

  for (int n = 2; n <= n_max; ++n) {
    VerifyRow row;
    row.n = n;
    row.trials = trials;

    const GeneratorSet gens = build_generators(n);
    const StructureTensor f = structure_constants(gens);
    row.orthonormality = orthonormality_residue(gens);
    row.tracelessness = tracelessness_residue(gens);
    row.jacobi = jacobi_residue(f);
    row.reconstruction = commutator_reconstruction_residue(gens, f);

    // Antisymmetry of the raw trace formula against the stored tensor:
    // (1/4i) Tr([G_a, G_b] G_c) must flip sign under any transposition.
    const int adim = gens.algebra_dim();
    for (int a = 0; a < adim; ++a) {
      for (int b = 0; b < adim; ++b) {
        const ComplexMatrix comm = gens.generators[a] * gens.generators[b] -
                                   gens.generators[b] * gens.generators[a];
        for (int c = 0; c < adim; ++c) {
          const Complex raw = (comm * gens.generators[c]).trace() / Complex(0.0, 4.0);
          row.antisymmetry =
              std::max(row.antisymmetry, std::abs(raw - Complex(f.value(a, b, c))));
        }
      }
    }

    for (int trial = 0; trial < trials; ++trial) {
      auto rng = make_rng(seed, n, trial);
      const ComplexMatrix h = random_hermitian(n, rng);
      row.al_he_link = std::max(row.al_he_link, verify_al_he_link(h, gens, f));
    }

    if (n == 2) {
      // Known two-level form: torque (W, 0, -D) gives
      // [[0, D, 0], [-D, 0, -W], [0, W, 0]].
      auto rng = make_rng(seed, 0, 0);
      row.two_level_g = 0.0;
      for (int trial = 0; trial < 20; ++trial) {
        const double w = 2.0 * uniform_pm1(rng);
        const double d = 2.0 * uniform_pm1(rng);
        ComplexMatrix h(2, 2);
        h << 0.0, 0.5 * w, 0.5 * w, d;
        RealMatrix expected(3, 3);
        expected << 0, d, 0, -d, 0, -w, 0, w, 0;
        const EomMatrix g = eom_matrix_al(h, gens);
        row.two_level_g =
            std::max(row.two_level_g, (g.mat - expected).cwiseAbs().maxCoeff());
      }
    }

    row.ok = row.al_he_link < tol::kAlHeLink &&
             row.orthonormality < tol::kTraceOrthogonality &&
             row.tracelessness < tol::kHermiticity && row.antisymmetry < tol::kJacobi &&
             row.jacobi < tol::kJacobi && row.reconstruction < tol::kReconstruction &&
             (n != 2 || row.two_level_g < 1e-14);
    report.ok = report.ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

std::string format_verify_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "AL/HE link and algebra checks (seed " << report.seed << ", " << report.trials
      << " random Hamiltonians per N)\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%3s %10s %12s %12s %12s %12s %12s %12s %8s\n", "N",
                "al_he", "orthonorm", "traceless", "antisym", "jacobi", "reconstr",
                "two_level_g", "status");
  out << buf;
  for (const auto& row : report.rows) {
    std::string g2 = "-";
    if (row.two_level_g >= 0) {
      char tmp[32];
      std::snprintf(tmp, sizeof(tmp), "%.2e", row.two_level_g);
      g2 = tmp;
    }
    std::snprintf(buf, sizeof(buf), "%3d %10.2e %12.2e %12.2e %12.2e %12.2e %12.2e %12s %8s\n",
                  row.n, row.al_he_link, row.orthonormality, row.tracelessness,
                  row.antisymmetry, row.jacobi, row.reconstruction, g2.c_str(),
                  row.ok ? "pass" : "FAIL");
    out << buf;
  }
  out << (report.ok ? "all checks passed\n" : "CHECKS FAILED\n");
  return out.str();
}

}  // namespace cli
}  // namespace sunbloch
