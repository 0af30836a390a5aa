#pragma once

#include <Eigen/Dense>

#include "sunbloch/algebra.hpp"

namespace sunbloch {

/// Expansion coefficients of a Hermitian operator over the generator basis
/// (hbar = 1): H = trace_offset * I + (1/2) sum_a gamma_a G_a. The offset
/// carries the identity component, which never enters the dynamics.
struct TorqueVector {
  RealVector gamma;
  double trace_offset = 0.0;
};

enum class EomRoute { AL, HE };

/// Antisymmetric equation-of-motion matrix: d<G>/dt = g <G> (column
/// convention). `route` records which construction produced it.
struct EomMatrix {
  RealMatrix mat;
  EomRoute route = EomRoute::AL;
};

/// <G_a> = Tr(rho G_a). Asserts the imaginary residue of every trace is
/// below tol::kRealExtraction before discarding it.
RealVector rho_to_coherence(const ComplexMatrix& rho, const GeneratorSet& gens);

/// rho = I/N + (1/2) sum_a v_a G_a. Exact linear inverse of
/// rho_to_coherence; unit trace by construction. Positivity is not
/// enforced: an out-of-range v yields a non-positive rho, which
/// validate_density_matrix will report.
ComplexMatrix coherence_to_rho(const RealVector& v, const GeneratorSet& gens);

/// gamma_a = Tr(H G_a), trace_offset = Tr(H)/N. Throws ValidationError on
/// non-Hermitian input.
TorqueVector hamiltonian_to_torque(const ComplexMatrix& h, const GeneratorSet& gens);

ComplexMatrix torque_to_hamiltonian(const TorqueVector& t, const GeneratorSet& gens);

/// Commutator route: expands [H, G_a] = i sum_b G_b g_ba and returns the
/// matrix g. Entries are projected out by trace orthogonality,
/// g_ba = (1/2i) Tr([H, G_a] G_b), and must be real to within
/// tol::kImaginaryResidue.
EomMatrix eom_matrix_al(const ComplexMatrix& h, const GeneratorSet& gens);

/// Structure-constant route: g_ba = sum_c gamma_c f_(c,a,b). Same matrix as
/// eom_matrix_al when the torque comes from the same Hamiltonian.
EomMatrix eom_matrix_he(const TorqueVector& t, const StructureTensor& f);

/// Max entrywise |g_AL - g_HE| with the torque derived from H. The two
/// routes are each other's oracle; the contract is < tol::kAlHeLink for
/// every Hermitian H.
double verify_al_he_link(const ComplexMatrix& h, const GeneratorSet& gens,
                         const StructureTensor& f);

// --- state validation --------------------------------------------------

/// Hermitian to tol::kHermiticity, unit trace to the same, eigenvalues
/// >= tol::kPositivity. Throws ValidationError otherwise.
void validate_density_matrix(const ComplexMatrix& rho);

/// |v|^2 <= 2(N-1)/N + slack; a pure state saturates the bound.
void validate_coherence_vector(const RealVector& v, int n_levels);

/// Norm-squared of the coherence vector of a pure N-level state.
inline double pure_state_norm2(int n_levels) {
  return 2.0 * (n_levels - 1) / n_levels;
}

}  // namespace sunbloch
