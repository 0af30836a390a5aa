#include "sunbloch/dynamics.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace sunbloch {

double Trajectory::norm2_drift() const {
  if (norm2.empty()) return 0.0;
  double worst = 0.0;
  for (const double n2 : norm2) worst = std::max(worst, std::abs(n2 - norm2.front()));
  return worst;
}

Trajectory propagate_liouville(const ComplexMatrix& rho0, const HamiltonianFn& h_of_t,
                               const TimeGrid& grid, const GeneratorSet& gens) {
  validate_density_matrix(rho0);
  if (rho0.rows() != gens.dim) {
    throw DimensionError("propagate_liouville: rho dimension " + std::to_string(rho0.rows()) +
                         " != N=" + std::to_string(gens.dim));
  }

  const auto rhs = [&](double t, const ComplexMatrix& rho) -> ComplexMatrix {
    const ComplexMatrix h = h_of_t(t);
    return Complex(0.0, -1.0) * (h * rho - rho * h);
  };

  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(grid.n_samples());
  traj.norm2.reserve(grid.n_samples());
  traj.trace.reserve(grid.n_samples());
  traj.purity.reserve(grid.n_samples());
  traj.rhos.reserve(grid.n_samples());

  const double h = grid.dt();
  ComplexMatrix rho = rho0;
  const auto record = [&](const ComplexMatrix& r) {
    const RealVector v = rho_to_coherence(r, gens);
    traj.states.push_back(v);
    traj.norm2.push_back(v.squaredNorm());
    traj.trace.push_back(r.trace().real());
    traj.purity.push_back((r * r).trace().real());
    traj.rhos.push_back(r);
  };
  record(rho);

  for (long i = 0; i < grid.n_steps; ++i) {
    const double t = grid.time(i);
    const ComplexMatrix k1 = rhs(t, rho);
    const ComplexMatrix k2 = rhs(t + 0.5 * h, rho + 0.5 * h * k1);
    const ComplexMatrix k3 = rhs(t + 0.5 * h, rho + 0.5 * h * k2);
    const ComplexMatrix k4 = rhs(t + h, rho + h * k3);
    rho += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double herm = hermiticity_residue(rho);
    if (!(herm < tol::kHermitizeResidue)) {
      throw NumericalError("propagate_liouville: Hermiticity residue " +
                               std::to_string(herm) + " at step " + std::to_string(i + 1),
                           i + 1);
    }
    rho = 0.5 * (rho + rho.adjoint().eval());
    const double trace_err = std::abs(rho.trace() - Complex(1.0));
    if (!(trace_err < tol::kTraceDrift)) {
      throw NumericalError("propagate_liouville: trace drift " + std::to_string(trace_err) +
                               " at step " + std::to_string(i + 1) +
                               "; step size is unstable for this Hamiltonian",
                           i + 1);
    }
    record(rho);
  }
  return traj;
}

Trajectory propagate_coherence_rk4(const RealVector& v0, const EomFn& g_of_t,
                                   const TimeGrid& grid) {
  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(grid.n_samples());
  traj.norm2.reserve(grid.n_samples());

  const double h = grid.dt();
  RealVector v = v0;
  traj.states.push_back(v);
  traj.norm2.push_back(v.squaredNorm());

  for (long i = 0; i < grid.n_steps; ++i) {
    const double t = grid.time(i);
    const RealMatrix g1 = g_of_t(t);
    const RealMatrix gm = g_of_t(t + 0.5 * h);
    const RealMatrix g2 = g_of_t(t + h);
    const RealVector k1 = g1 * v;
    const RealVector k2 = gm * (v + 0.5 * h * k1);
    const RealVector k3 = gm * (v + 0.5 * h * k2);
    const RealVector k4 = g2 * (v + h * k3);
    v += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!v.allFinite()) {
      throw NumericalError("propagate_coherence_rk4: non-finite state at step " +
                               std::to_string(i + 1),
                           i + 1);
    }
    traj.states.push_back(v);
    traj.norm2.push_back(v.squaredNorm());
  }
  return traj;
}

bool check_commuting_family(const EomFn& g_of_t, const TimeGrid& grid, int n_probe) {
  if (n_probe < 2) n_probe = 2;
  std::vector<RealMatrix> samples;
  samples.reserve(n_probe);
  for (int i = 0; i < n_probe; ++i) {
    const double t = grid.t_start + (grid.t_end - grid.t_start) * i / (n_probe - 1);
    samples.push_back(g_of_t(t));
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    for (size_t j = i + 1; j < samples.size(); ++j) {
      const RealMatrix comm = samples[i] * samples[j] - samples[j] * samples[i];
      if (comm.cwiseAbs().maxCoeff() > tol::kCommutingFamily) return false;
    }
  }
  return true;
}

Trajectory magnus_propagate(const RealVector& v0, const EomFn& g_of_t,
                            const TimeGrid& grid) {
  if (!check_commuting_family(g_of_t, grid)) {
    throw PreconditionError(
        "magnus_propagate: g(t) does not commute with itself at different times; "
        "the single-exponential propagator does not apply");
  }
  const auto integrals = cumulative_simpson_matrix(g_of_t, grid);

  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(grid.n_samples());
  traj.norm2.reserve(grid.n_samples());
  for (const auto& a : integrals) {
    const RealMatrix m = a.exp();
    const RealVector v = m * v0;
    traj.states.push_back(v);
    traj.norm2.push_back(v.squaredNorm());
  }
  return traj;
}

}  // namespace sunbloch
