#pragma once

// Default numerical tolerances. Structural identities (Hermiticity,
// orthonormality, antisymmetry) are held to near machine precision;
// accumulated quantities (Jacobi sums, commutator reconstructions,
// conserved-norm drift) get looser bounds.

namespace sunbloch::tol {

inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTraceOrthogonality = 1e-12;
inline constexpr double kImaginaryResidue = 1e-10;
inline constexpr double kRealExtraction = 1e-12;
inline constexpr double kJacobi = 1e-10;
inline constexpr double kReconstruction = 1e-10;
inline constexpr double kAntisymmetry = 1e-12;
inline constexpr double kPositivity = -1e-10;       // smallest admissible eigenvalue
inline constexpr double kCommutingFamily = 1e-10;   // [g(t1), g(t2)] max norm
inline constexpr double kBlockCoupling = 1e-10;     // cross-block |g| threshold
inline constexpr double kHermitizeResidue = 1e-9;   // per-step Liouville check
inline constexpr double kTraceDrift = 1e-6;         // Liouville stability abort
inline constexpr double kSingularityFloor = 1e-6;   // |cos(upsilon2)| lower bound
inline constexpr double kConservedDrift = 1e-8;
inline constexpr double kAlHeLink = 1e-10;

}  // namespace sunbloch::tol
