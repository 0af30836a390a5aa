#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "sunbloch/errors.hpp"
#include "sunbloch/tolerances.hpp"

namespace sunbloch {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Ordered basis of the su(N) algebra: n*n-1 traceless Hermitian N x N
/// matrices G_a normalized so that Tr(G_a G_b) = 2 delta_ab. For N = 2 the
/// basis is exactly the Pauli triple (sigma_x, sigma_y, sigma_z); for larger
/// N the generalized Gell-Mann construction nests each su(m) inside su(m+1),
/// so the first m*m-1 entries always span the embedded su(m).
struct GeneratorSet {
  int dim = 0;                            // N
  std::vector<ComplexMatrix> generators;  // n*n-1 matrices

  int algebra_dim() const { return dim * dim - 1; }
};

/// Fully antisymmetric structure tensor f_abc of the algebra, defined by
/// [G_a, G_b] = 2i sum_c f_abc G_c. Stored sparsely: one value per index
/// triple with a < b < c; all other orderings follow by permutation parity.
class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(int dim, std::map<std::array<int, 3>, double> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  int dim() const { return dim_; }

  /// f_abc for arbitrary index order; zero for repeated indices.
  double value(int a, int b, int c) const;

  /// Stored canonical triples (a < b < c) and their values.
  const std::map<std::array<int, 3>, double>& nonzeros() const { return entries_; }

  /// Dense rank-3 tensor, index (a*dim + b)*dim + c. Convenient for the
  /// Jacobi check and for exporting to Python.
  std::vector<double> dense() const;

 private:
  int dim_ = 0;
  std::map<std::array<int, 3>, double> entries_;
};

/// Generalized Gell-Mann basis for su(N). Throws ValidationError for N < 2.
GeneratorSet build_generators(int n);

/// f_abc = (1/4i) Tr([G_a, G_b] G_c). Throws ValidationError if any entry
/// carries an imaginary residue above tol::kImaginaryResidue, which signals
/// a malformed generator set.
StructureTensor structure_constants(const GeneratorSet& gens);

/// Adjoint-representation matrix of generator `alpha`: entries
/// (F_alpha)_bc = -i f_(alpha,b,c). Purely imaginary, i times a real
/// antisymmetric matrix.
ComplexMatrix adjoint_rep(const StructureTensor& f, int alpha);

/// Real form of adjoint_rep: the rotation generator R_alpha with entries
/// (R_alpha)_bc = -f_(alpha,b,c), so that adjoint_rep = i * R_alpha.
/// These satisfy [R_a, R_b] = sum_c f_abc R_c.
RealMatrix adjoint_rep_real(const StructureTensor& f, int alpha);

// --- invariant checks -------------------------------------------------

/// Largest entry of |M - M^dagger|.
double hermiticity_residue(const ComplexMatrix& m);

/// Largest deviation from Tr(G_a G_b) = 2 delta_ab over all pairs.
double orthonormality_residue(const GeneratorSet& gens);

/// Largest |Tr G_a| over the set.
double tracelessness_residue(const GeneratorSet& gens);

/// Largest Jacobi sum |sum_m (f_abm f_mcn + f_bcm f_man + f_cam f_mbn)|
/// over all (a, b, c, n).
double jacobi_residue(const StructureTensor& f);

/// Largest entrywise deviation of [G_a, G_b] from 2i sum_c f_abc G_c,
/// maximized over all pairs (a, b).
double commutator_reconstruction_residue(const GeneratorSet& gens,
                                         const StructureTensor& f);

}  // namespace sunbloch
