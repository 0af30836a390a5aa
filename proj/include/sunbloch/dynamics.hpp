#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sunbloch/algebra.hpp"
#include "sunbloch/coherence.hpp"
#include "sunbloch/pulse.hpp"

namespace sunbloch {

using HamiltonianFn = std::function<ComplexMatrix(double)>;
using EomFn = std::function<RealMatrix(double)>;

/// Time series of coherence vectors on a grid, with per-step audit
/// columns. trace / purity / rhos are filled only by the density-matrix
/// propagator.
struct Trajectory {
  TimeGrid grid;
  std::vector<RealVector> states;    // n_steps + 1 coherence vectors
  std::vector<double> norm2;         // |v|^2 per step
  std::vector<double> trace;         // Re Tr rho (Liouville only)
  std::vector<double> purity;        // Re Tr rho^2 (Liouville only)
  std::vector<ComplexMatrix> rhos;   // density matrices (Liouville only)

  double norm2_drift() const;        // max_t | |v(t)|^2 - |v(0)|^2 |
};

/// Direct density-matrix evolution, i drho/dt = [H, rho], classic RK4.
/// This is the oracle the coherence-vector propagators are checked
/// against. Per step the Hermiticity residue must stay below
/// tol::kHermitizeResidue and |Tr rho - 1| below tol::kTraceDrift;
/// violations raise NumericalError with the step index.
Trajectory propagate_liouville(const ComplexMatrix& rho0, const HamiltonianFn& h_of_t,
                               const TimeGrid& grid, const GeneratorSet& gens);

/// Classic RK4 on dv/dt = g(t) v with g sampled at substep times.
/// Non-finite values abort with the step index.
Trajectory propagate_coherence_rk4(const RealVector& v0, const EomFn& g_of_t,
                                   const TimeGrid& grid);

/// True iff max over sampled time pairs of max|[g(ti), g(tj)]| stays below
/// tol::kCommutingFamily. Sampled on `n_probe` evenly spaced times; the
/// commuting property is structural, so a coarse probe suffices.
bool check_commuting_family(const EomFn& g_of_t, const TimeGrid& grid, int n_probe = 9);

/// v(t) = exp(Integral_0^t g) v0, integral by per-step Simpson panels and
/// the exponential by scaling-and-squaring. Exact (up to quadrature) for
/// families that commute with themselves at different times; rejects
/// non-commuting families with PreconditionError, since the plain
/// exponential would be wrong there.
Trajectory magnus_propagate(const RealVector& v0, const EomFn& g_of_t,
                            const TimeGrid& grid);

}  // namespace sunbloch
