#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sunbloch/dynamics.hpp"

namespace sunbloch {

using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;
using TorqueFn3 = std::function<Vector3(double)>;

/// Parameters of the product-of-exponentials factorization
/// M(t) = exp(u1 F1) exp(u2 F2) exp(u3 F3) of the coherence-vector
/// evolution matrix for a two-level drive, sampled on a grid. All three
/// start at zero so M(t_start) = I. The factorization is valid only while
/// |cos u2| stays above the singularity floor.
struct WnParameters {
  TimeGrid grid;
  std::vector<Vector3> upsilon;      // n_steps + 1 samples
  double max_identity_residual = 0.0;  // worst |hypot(du2, du3 cos u2) - hypot(g2, g3)|
};

/// The three real rotation generators of the adjoint su(2) dynamics:
/// F1 = [[0,0,0],[0,0,-1],[0,1,0]], F2 = [[0,0,1],[0,0,0],[-1,0,0]],
/// F3 = [[0,-1,0],[1,0,0],[0,0,0]]. They satisfy [Fa, Fb] = eps_abc Fc
/// and each exp(theta Fa) is the rotation about axis a.
std::array<Matrix3, 3> adjoint_rotation_generators();

/// Rotation exp(theta Fa) about axis `axis` (0, 1 or 2), in closed form.
Matrix3 axis_rotation(int axis, double theta);

/// Truncated series e^A B e^-A ~ sum_{k<=order} ad_A^k(B) / k!.
Matrix3 bch_conjugate(const Matrix3& a, const Matrix3& b, int order);

/// Exact conjugation e^A B e^-A by matrix exponentials.
Matrix3 bch_conjugate_exact(const Matrix3& a, const Matrix3& b);

/// W(u1, u2) relating parameter velocities to the torque: W du/dt = Gamma.
/// det W = cos u2.
Matrix3 wn_w_matrix(double u1, double u2);

/// Closed-form inverse of W. Throws SingularityError when |cos u2| is at
/// or below `floor`.
Matrix3 wn_w_inverse(double u1, double u2, double floor = tol::kSingularityFloor);

/// Parameter velocities: solves W(u1, u2) du/dt = torque.
Vector3 wn_rhs(const Vector3& upsilon, const Vector3& torque);

/// RK4 on wn_rhs from upsilon(t_start) = 0. Also audits, at every grid
/// point, the detuning-magnitude identity
/// sqrt(du2^2 + du3^2 cos^2 u2) = sqrt(g2^2 + g3^2) (an algebraic
/// consequence of the solve), recording the worst residual.
/// SingularityError carries the time of failure.
WnParameters integrate_wn(const TorqueFn3& torque_of_t, const TimeGrid& grid);

/// Convenience overload: G-frame torque (Omega(t), 0, -Delta(t)).
WnParameters integrate_wn(const PulseProfile& pulse, const TimeGrid& grid);

/// Evolution matrix at one parameter sample.
Matrix3 wn_matrix(const Vector3& upsilon);

/// M(t_i) for every grid sample; each M is orthogonal with det 1.
std::vector<Matrix3> reconstruct_m(const WnParameters& params);

}  // namespace sunbloch
