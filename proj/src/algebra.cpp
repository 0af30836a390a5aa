#include "sunbloch/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sunbloch {

namespace {

// Parity of the permutation taking (a,b,c) to sorted order, or 0 if any
// index repeats.
int permutation_sign(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  int sign = 1;
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  return sign;
}

}  // namespace

double StructureTensor::value(int a, int b, int c) const {
  const int sign = permutation_sign(a, b, c);
  if (sign == 0) return 0.0;
  std::array<int, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  const auto it = entries_.find(key);
  return it == entries_.end() ? 0.0 : sign * it->second;
}

std::vector<double> StructureTensor::dense() const {
  std::vector<double> out(static_cast<size_t>(dim_) * dim_ * dim_, 0.0);
  for (const auto& [key, val] : entries_) {
    const auto [a, b, c] = key;
    // All six permutations of a strictly ordered triple.
    out[(static_cast<size_t>(a) * dim_ + b) * dim_ + c] = val;
    out[(static_cast<size_t>(b) * dim_ + c) * dim_ + a] = val;
    out[(static_cast<size_t>(c) * dim_ + a) * dim_ + b] = val;
    out[(static_cast<size_t>(b) * dim_ + a) * dim_ + c] = -val;
    out[(static_cast<size_t>(a) * dim_ + c) * dim_ + b] = -val;
    out[(static_cast<size_t>(c) * dim_ + b) * dim_ + a] = -val;
  }
  return out;
}

GeneratorSet build_generators(int n) {
  if (n < 2) {
    throw ValidationError("build_generators: need N >= 2, got " + std::to_string(n));
  }
  GeneratorSet set;
  set.dim = n;
  set.generators.reserve(static_cast<size_t>(n) * n - 1);

  // Nested construction: for each k the block (S_jk, A_jk for j < k, then
  // the diagonal D_{k-1}) extends su(k-1) to su(k). The k = 2 block is the
  // Pauli triple.
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(n, n);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      set.generators.push_back(sym);

      ComplexMatrix antisym = ComplexMatrix::Zero(n, n);
      antisym(j, k) = Complex(0.0, -1.0);
      antisym(k, j) = Complex(0.0, 1.0);
      set.generators.push_back(antisym);
    }
    // D_k = sqrt(2/(k(k+1))) * diag(1,...,1, -k, 0,...,0), k ones.
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (static_cast<double>(k) * (k + 1)));
    for (int j = 0; j < k; ++j) diag(j, j) = scale;
    diag(k, k) = -scale * k;
    set.generators.push_back(diag);
  }
  return set;
}

StructureTensor structure_constants(const GeneratorSet& gens) {
  const int n = gens.algebra_dim();
  std::map<std::array<int, 3>, double> entries;
  // Values are O(1); anything below this is arithmetic noise from the
  // trace evaluation.
  constexpr double kSparseCutoff = 1e-13;

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const ComplexMatrix comm = gens.generators[a] * gens.generators[b] -
                                 gens.generators[b] * gens.generators[a];
      for (int c = b + 1; c < n; ++c) {
        // f_abc = (1/4i) Tr([G_a, G_b] G_c)
        const Complex raw = (comm * gens.generators[c]).trace() / Complex(0.0, 4.0);
        if (std::abs(raw.imag()) > tol::kImaginaryResidue) {
          throw ValidationError(
              "structure_constants: imaginary residue " + std::to_string(raw.imag()) +
              " at triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
              std::to_string(c) + "); generator set is malformed");
        }
        if (std::abs(raw.real()) > kSparseCutoff) {
          entries[{a, b, c}] = raw.real();
        }
      }
    }
  }
  return StructureTensor(n, std::move(entries));
}

ComplexMatrix adjoint_rep(const StructureTensor& f, int alpha) {
  if (alpha < 0 || alpha >= f.dim()) {
    throw DimensionError("adjoint_rep: index " + std::to_string(alpha) +
                         " out of range for algebra dimension " + std::to_string(f.dim()));
  }
  const int n = f.dim();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      m(b, c) = Complex(0.0, -f.value(alpha, b, c));
    }
  }
  return m;
}

RealMatrix adjoint_rep_real(const StructureTensor& f, int alpha) {
  if (alpha < 0 || alpha >= f.dim()) {
    throw DimensionError("adjoint_rep_real: index " + std::to_string(alpha) +
                         " out of range for algebra dimension " + std::to_string(f.dim()));
  }
  const int n = f.dim();
  RealMatrix m = RealMatrix::Zero(n, n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      m(b, c) = -f.value(alpha, b, c);
    }
  }
  return m;
}

double hermiticity_residue(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double orthonormality_residue(const GeneratorSet& gens) {
  const int n = gens.algebra_dim();
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const Complex tr = (gens.generators[a] * gens.generators[b]).trace();
      const double expected = (a == b) ? 2.0 : 0.0;
      worst = std::max(worst, std::abs(tr - Complex(expected)));
    }
  }
  return worst;
}

double tracelessness_residue(const GeneratorSet& gens) {
  double worst = 0.0;
  for (const auto& g : gens.generators) {
    worst = std::max(worst, std::abs(g.trace()));
  }
  return worst;
}

double jacobi_residue(const StructureTensor& f) {
  const int n = f.dim();
  const std::vector<double> d = f.dense();
  const auto at = [&](int a, int b, int c) {
    return d[(static_cast<size_t>(a) * n + b) * n + c];
  };
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int nu = 0; nu < n; ++nu) {
          double sum = 0.0;
          for (int mu = 0; mu < n; ++mu) {
            sum += at(a, b, mu) * at(mu, c, nu) + at(b, c, mu) * at(mu, a, nu) +
                   at(c, a, mu) * at(mu, b, nu);
          }
          worst = std::max(worst, std::abs(sum));
        }
      }
    }
  }
  return worst;
}

double commutator_reconstruction_residue(const GeneratorSet& gens,
                                         const StructureTensor& f) {
  const int n = gens.algebra_dim();
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      ComplexMatrix rhs = ComplexMatrix::Zero(gens.dim, gens.dim);
      for (int c = 0; c < n; ++c) {
        const double fv = f.value(a, b, c);
        if (fv != 0.0) rhs += Complex(0.0, 2.0 * fv) * gens.generators[c];
      }
      const ComplexMatrix lhs = gens.generators[a] * gens.generators[b] -
                                gens.generators[b] * gens.generators[a];
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace sunbloch
