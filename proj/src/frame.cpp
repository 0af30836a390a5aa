#include "sunbloch/frame.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace sunbloch {

std::vector<ComplexMatrix> FrameTransform::transform_generators(const GeneratorSet& gens) const {
  const int n = gens.algebra_dim();
  if (matrix.rows() != n) {
    throw DimensionError("FrameTransform: matrix dimension " + std::to_string(matrix.rows()) +
                         " != algebra dimension " + std::to_string(n));
  }
  std::vector<ComplexMatrix> out;
  out.reserve(n);
  for (int a = 0; a < n; ++a) {
    ComplexMatrix fa = ComplexMatrix::Zero(gens.dim, gens.dim);
    for (int b = 0; b < n; ++b) {
      if (matrix(a, b) != 0.0) fa += matrix(a, b) * gens.generators[b];
    }
    out.push_back(fa);
  }
  return out;
}

std::vector<double> BlockDecomposition::norms(const RealVector& v) const {
  std::vector<double> out;
  out.reserve(blocks.size());
  for (const auto& block : blocks) {
    double n2 = 0.0;
    for (const int idx : block) n2 += v(idx) * v(idx);
    out.push_back(n2);
  }
  return out;
}

FrameTransform build_f_frame(double omega0, double delta0) {
  const double eps0 = std::hypot(omega0, delta0);
  if (eps0 == 0.0) {
    throw ValidationError("build_f_frame: omega0 and delta0 cannot both be zero");
  }
  const double c = omega0 / eps0;
  const double s = delta0 / eps0;
  RealMatrix r(3, 3);
  r << c, 0.0, -s,
       0.0, 1.0, 0.0,
       s, 0.0, c;
  return FrameTransform{r};
}

EomMatrix transform_eom(const EomMatrix& g, const FrameTransform& frame) {
  if (g.mat.rows() != frame.matrix.rows()) {
    throw DimensionError("transform_eom: dimension mismatch");
  }
  return EomMatrix{frame.matrix * g.mat * frame.matrix.transpose(), g.route};
}

BlockDecomposition detect_blocks(const EomFn& g_of_t, const TimeGrid& grid,
                                 int max_samples) {
  const long n_times = std::min<long>(grid.n_samples(), max_samples);
  RealMatrix pattern;
  for (long i = 0; i < n_times; ++i) {
    const double t = n_times == 1
                         ? grid.t_start
                         : grid.t_start + (grid.t_end - grid.t_start) * i / (n_times - 1);
    const RealMatrix g = g_of_t(t).cwiseAbs();
    pattern = (i == 0) ? g : pattern.cwiseMax(g).eval();
  }

  const int n = static_cast<int>(pattern.rows());
  // Union-find over indices coupled anywhere on the grid.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (pattern(a, b) > tol::kBlockCoupling || pattern(b, a) > tol::kBlockCoupling) {
        parent[find(a)] = find(b);
      }
    }
  }

  BlockDecomposition out;
  std::vector<int> root_to_block(n, -1);
  for (int a = 0; a < n; ++a) {
    const int r = find(a);
    if (root_to_block[r] < 0) {
      root_to_block[r] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[root_to_block[r]].push_back(a);
  }
  return out;
}

std::vector<double> audit_conserved_norms(const Trajectory& traj,
                                          const BlockDecomposition& blocks) {
  if (traj.states.empty()) return {};
  const std::vector<double> initial = blocks.norms(traj.states.front());
  std::vector<double> drift(blocks.blocks.size(), 0.0);
  for (const auto& v : traj.states) {
    const std::vector<double> now = blocks.norms(v);
    for (size_t k = 0; k < drift.size(); ++k) {
      drift[k] = std::max(drift[k], std::abs(now[k] - initial[k]));
    }
  }
  return drift;
}

Trajectory closed_form_f_solution(const PulseProfile& pulse, const TimeGrid& grid) {
  if (!pulse.proportional()) {
    throw PreconditionError(
        "closed_form_f_solution: requires proportional detuning (shared envelope)");
  }
  const double eps0 = std::hypot(pulse.omega0, pulse.delta0);
  if (eps0 == 0.0) {
    throw ValidationError("closed_form_f_solution: zero pulse amplitude and detuning");
  }
  const double f1 = -pulse.delta0 / eps0;  // ground state in the F frame
  const double f3 = pulse.omega0 / eps0;

  const auto eps_prime =
      cumulative_simpson([&](double t) { return pulse.epsilon(t); }, grid);

  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(grid.n_samples());
  traj.norm2.reserve(grid.n_samples());
  for (long i = 0; i < grid.n_samples(); ++i) {
    RealVector v(3);
    v << f1, -f3 * std::sin(eps_prime[i]), f3 * std::cos(eps_prime[i]);
    traj.states.push_back(v);
    traj.norm2.push_back(v.squaredNorm());
  }
  return traj;
}

}  // namespace sunbloch
