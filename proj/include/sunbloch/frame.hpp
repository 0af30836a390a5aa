#pragma once

#include <vector>

#include <Eigen/Dense>

#include "sunbloch/coherence.hpp"
#include "sunbloch/dynamics.hpp"

namespace sunbloch {

/// Orthogonal change of generator basis: v_F = R v_G, F_a = sum_b R_ab G_b.
/// Orthogonality preserves Tr(F_a F_b) = 2 delta_ab, so the F set is again
/// a valid generator basis.
struct FrameTransform {
  RealMatrix matrix;  // R

  RealVector apply(const RealVector& v) const { return matrix * v; }
  RealVector apply_inverse(const RealVector& v) const { return matrix.transpose() * v; }

  /// Images F_a = sum_b R_ab G_b.
  std::vector<ComplexMatrix> transform_generators(const GeneratorSet& gens) const;
};

/// Partition of the coherence-vector indices into dynamically decoupled
/// subsets: g restricted to cross-block entries vanishes at all sampled
/// times, so each block's squared norm is a constant of motion.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;

  /// Per-block squared norms of v.
  std::vector<double> norms(const RealVector& v) const;
};

/// Rotated frame for the two-level drive with torque (Omega, 0, -Delta):
/// rows (W0/e0, 0, -D0/e0), (0, 1, 0), (D0/e0, 0, W0/e0) with
/// e0 = sqrt(W0^2 + D0^2). When the detuning rides the pulse envelope the
/// torque in this frame is (epsilon(t), 0, 0) and the equation of motion
/// splits into blocks {1} and {2,3}. Delta0 = 0 gives the identity.
/// Throws ValidationError when both inputs are zero.
FrameTransform build_f_frame(double omega0, double delta0);

/// Conjugates the equation-of-motion matrix into the rotated frame:
/// g_F = R g R^T.
EomMatrix transform_eom(const EomMatrix& g, const FrameTransform& frame);

/// Union of sparsity patterns of g over sampled times -> undirected graph
/// with edges where any |g_ab(t)| > tol::kBlockCoupling -> connected
/// components. Samples at most `max_samples` grid times.
BlockDecomposition detect_blocks(const EomFn& g_of_t, const TimeGrid& grid,
                                 int max_samples = 65);

/// Per-block max over time of |N_k(t) - N_k(0)| where N_k is the block's
/// squared norm. Block-respecting dynamics keeps every entry below
/// tol::kConservedDrift.
std::vector<double> audit_conserved_norms(const Trajectory& traj,
                                          const BlockDecomposition& blocks);

/// Closed-form F-frame solution for a ground-state start under a
/// proportional-detuning pulse:
///   F(t) = (-D0/e0, -(W0/e0) sin e', (W0/e0) cos e'),  e'(t) = Int_0^t epsilon.
/// The quadrature uses the same per-step Simpson panels as the Magnus
/// propagator. Rejects pulses whose detuning is not proportional.
Trajectory closed_form_f_solution(const PulseProfile& pulse, const TimeGrid& grid);

}  // namespace sunbloch
