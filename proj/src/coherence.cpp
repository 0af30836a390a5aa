#include "sunbloch/coherence.hpp"

#include <cmath>
#include <string>

namespace sunbloch {

namespace {

void require_dims(const ComplexMatrix& m, const GeneratorSet& gens, const char* who) {
  if (m.rows() != gens.dim || m.cols() != gens.dim) {
    throw DimensionError(std::string(who) + ": matrix is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", generators are for N=" +
                         std::to_string(gens.dim));
  }
}

double real_part_checked(const Complex& z, const char* who) {
  if (std::abs(z.imag()) > tol::kRealExtraction) {
    throw ValidationError(std::string(who) + ": imaginary residue " +
                          std::to_string(z.imag()) + " above tolerance");
  }
  return z.real();
}

}  // namespace

RealVector rho_to_coherence(const ComplexMatrix& rho, const GeneratorSet& gens) {
  require_dims(rho, gens, "rho_to_coherence");
  const int n = gens.algebra_dim();
  RealVector v(n);
  for (int a = 0; a < n; ++a) {
    v(a) = real_part_checked((rho * gens.generators[a]).trace(), "rho_to_coherence");
  }
  return v;
}

ComplexMatrix coherence_to_rho(const RealVector& v, const GeneratorSet& gens) {
  if (v.size() != gens.algebra_dim()) {
    throw DimensionError("coherence_to_rho: vector length " + std::to_string(v.size()) +
                         " != N^2-1 = " + std::to_string(gens.algebra_dim()));
  }
  ComplexMatrix rho = ComplexMatrix::Identity(gens.dim, gens.dim) / double(gens.dim);
  for (int a = 0; a < gens.algebra_dim(); ++a) {
    rho += 0.5 * v(a) * gens.generators[a];
  }
  return rho;
}

TorqueVector hamiltonian_to_torque(const ComplexMatrix& h, const GeneratorSet& gens) {
  require_dims(h, gens, "hamiltonian_to_torque");
  if (hermiticity_residue(h) > tol::kHermiticity) {
    throw ValidationError("hamiltonian_to_torque: input is not Hermitian");
  }
  TorqueVector t;
  t.gamma.resize(gens.algebra_dim());
  for (int a = 0; a < gens.algebra_dim(); ++a) {
    t.gamma(a) = real_part_checked((h * gens.generators[a]).trace(), "hamiltonian_to_torque");
  }
  t.trace_offset = real_part_checked(h.trace(), "hamiltonian_to_torque") / gens.dim;
  return t;
}

ComplexMatrix torque_to_hamiltonian(const TorqueVector& t, const GeneratorSet& gens) {
  if (t.gamma.size() != gens.algebra_dim()) {
    throw DimensionError("torque_to_hamiltonian: torque length " +
                         std::to_string(t.gamma.size()) + " != N^2-1");
  }
  ComplexMatrix h = t.trace_offset * ComplexMatrix::Identity(gens.dim, gens.dim);
  for (int a = 0; a < gens.algebra_dim(); ++a) {
    h += 0.5 * t.gamma(a) * gens.generators[a];
  }
  return h;
}

EomMatrix eom_matrix_al(const ComplexMatrix& h, const GeneratorSet& gens) {
  require_dims(h, gens, "eom_matrix_al");
  if (hermiticity_residue(h) > tol::kHermiticity) {
    throw ValidationError("eom_matrix_al: input is not Hermitian");
  }
  const int n = gens.algebra_dim();
  EomMatrix g{RealMatrix(n, n), EomRoute::AL};
  for (int a = 0; a < n; ++a) {
    const ComplexMatrix comm = h * gens.generators[a] - gens.generators[a] * h;
    for (int b = 0; b < n; ++b) {
      // g_ba = (1/2i) Tr([H, G_a] G_b); real for Hermitian H, so any
      // residue here is an internal consistency failure.
      const Complex entry = (comm * gens.generators[b]).trace() / Complex(0.0, 2.0);
      if (std::abs(entry.imag()) > tol::kImaginaryResidue) {
        throw ValidationError("eom_matrix_al: imaginary residue " +
                              std::to_string(entry.imag()) + " in g(" +
                              std::to_string(b) + "," + std::to_string(a) + ")");
      }
      g.mat(b, a) = entry.real();
    }
  }
  return g;
}

EomMatrix eom_matrix_he(const TorqueVector& t, const StructureTensor& f) {
  if (t.gamma.size() != f.dim()) {
    throw DimensionError("eom_matrix_he: torque length " + std::to_string(t.gamma.size()) +
                         " != algebra dimension " + std::to_string(f.dim()));
  }
  const int n = f.dim();
  EomMatrix g{RealMatrix::Zero(n, n), EomRoute::HE};
  // g_ba = sum_c gamma_c f_cab; iterate stored triples once and scatter all
  // six permutations.
  for (const auto& [key, val] : f.nonzeros()) {
    const auto [i, j, k] = key;
    g.mat(k, j) += t.gamma(i) * val;   // f_ijk: c=i, a=j, b=k
    g.mat(j, k) -= t.gamma(i) * val;   // f_ikj = -val
    g.mat(i, k) += t.gamma(j) * val;   // f_jki = +val
    g.mat(k, i) -= t.gamma(j) * val;   // f_jik = -val
    g.mat(j, i) += t.gamma(k) * val;   // f_kij = +val
    g.mat(i, j) -= t.gamma(k) * val;   // f_kji = -val
  }
  return g;
}

double verify_al_he_link(const ComplexMatrix& h, const GeneratorSet& gens,
                         const StructureTensor& f) {
  const EomMatrix al = eom_matrix_al(h, gens);
  const EomMatrix he = eom_matrix_he(hamiltonian_to_torque(h, gens), f);
  return (al.mat - he.mat).cwiseAbs().maxCoeff();
}

void validate_density_matrix(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols()) {
    throw DimensionError("validate_density_matrix: matrix is not square");
  }
  if (hermiticity_residue(rho) > tol::kHermiticity) {
    throw ValidationError("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > tol::kHermiticity) {
    throw ValidationError("density matrix trace deviates from 1 by " +
                          std::to_string(std::abs(rho.trace() - Complex(1.0))));
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < tol::kPositivity) {
    throw ValidationError("density matrix has negative eigenvalue " + std::to_string(min_ev));
  }
}

void validate_coherence_vector(const RealVector& v, int n_levels) {
  if (v.size() != n_levels * n_levels - 1) {
    throw DimensionError("coherence vector length " + std::to_string(v.size()) +
                         " != N^2-1 for N=" + std::to_string(n_levels));
  }
  const double bound = pure_state_norm2(n_levels) + 1e-10;
  if (v.squaredNorm() > bound) {
    throw ValidationError("coherence vector norm^2 " + std::to_string(v.squaredNorm()) +
                          " exceeds pure-state bound " + std::to_string(bound));
  }
}

}  // namespace sunbloch
