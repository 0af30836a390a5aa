#include "sunbloch/wei_norman.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace sunbloch {

std::array<Matrix3, 3> adjoint_rotation_generators() {
  Matrix3 f1, f2, f3;
  f1 << 0, 0, 0,
        0, 0, -1,
        0, 1, 0;
  f2 << 0, 0, 1,
        0, 0, 0,
        -1, 0, 0;
  f3 << 0, -1, 0,
        1, 0, 0,
        0, 0, 0;
  return {f1, f2, f3};
}

Matrix3 axis_rotation(int axis, double theta) {
  if (axis < 0 || axis > 2) {
    throw DimensionError("axis_rotation: axis must be 0, 1 or 2");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix3 m = Matrix3::Identity();
  const int i = (axis + 1) % 3;
  const int j = (axis + 2) % 3;
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = -s;
  m(j, i) = s;
  return m;
}

Matrix3 bch_conjugate(const Matrix3& a, const Matrix3& b, int order) {
  if (order < 1) {
    throw ValidationError("bch_conjugate: series order must be >= 1");
  }
  Matrix3 term = b;
  Matrix3 sum = b;
  for (int k = 1; k <= order; ++k) {
    term = (a * term - term * a) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

Matrix3 bch_conjugate_exact(const Matrix3& a, const Matrix3& b) {
  const Matrix3 ea = a.exp();
  const Matrix3 ea_inv = (-a).exp();
  return ea * b * ea_inv;
}

Matrix3 wn_w_matrix(double u1, double u2) {
  const double c1 = std::cos(u1), s1 = std::sin(u1);
  const double c2 = std::cos(u2), s2 = std::sin(u2);
  Matrix3 w;
  w << 1, 0, s2,
       0, c1, -c2 * s1,
       0, s1, c2 * c1;
  return w;
}

Matrix3 wn_w_inverse(double u1, double u2, double floor) {
  const double c2 = std::cos(u2);
  if (std::abs(c2) <= floor) {
    throw SingularityError("wn_w_inverse: det W = cos(u2) = " + std::to_string(c2) +
                               " is inside the singularity floor " + std::to_string(floor),
                           u2, std::nan(""));
  }
  const double c1 = std::cos(u1), s1 = std::sin(u1);
  const double t2 = std::tan(u2);
  Matrix3 inv;
  inv << 1, s1 * t2, -c1 * t2,
         0, c1, s1,
         0, -s1 / c2, c1 / c2;
  return inv;
}

Vector3 wn_rhs(const Vector3& upsilon, const Vector3& torque) {
  return wn_w_inverse(upsilon(0), upsilon(1)) * torque;
}

WnParameters integrate_wn(const TorqueFn3& torque_of_t, const TimeGrid& grid) {
  WnParameters params;
  params.grid = grid;
  params.upsilon.reserve(grid.n_samples());

  const double h = grid.dt();
  Vector3 u = Vector3::Zero();
  params.upsilon.push_back(u);

  const auto rhs_at = [&](double t, const Vector3& upsilon) -> Vector3 {
    const Vector3 gamma = torque_of_t(t);
    try {
      return wn_rhs(upsilon, gamma);
    } catch (const SingularityError& e) {
      throw SingularityError(std::string(e.what()) + " at t = " + std::to_string(t),
                             e.upsilon2(), t);
    }
  };

  for (long i = 0; i < grid.n_steps; ++i) {
    const double t = grid.time(i);
    const Vector3 k1 = rhs_at(t, u);
    const Vector3 k2 = rhs_at(t + 0.5 * h, u + 0.5 * h * k1);
    const Vector3 k3 = rhs_at(t + 0.5 * h, u + 0.5 * h * k2);
    const Vector3 k4 = rhs_at(t + h, u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    params.upsilon.push_back(u);

    // Magnitude identity: the lower two rows of W du = Gamma are a
    // rotation of (du2, du3 cos u2), so the norms must agree. This checks
    // the inverse, not the integration accuracy.
    const Vector3 gamma = torque_of_t(grid.time(i + 1));
    const Vector3 du = rhs_at(grid.time(i + 1), u);
    const double lhs = std::hypot(du(1), du(2) * std::cos(u(1)));
    const double rhs = std::hypot(gamma(1), gamma(2));
    params.max_identity_residual =
        std::max(params.max_identity_residual, std::abs(lhs - rhs));
  }
  return params;
}

WnParameters integrate_wn(const PulseProfile& pulse, const TimeGrid& grid) {
  return integrate_wn(
      [&pulse](double t) { return Vector3(pulse.omega(t), 0.0, -pulse.delta(t)); }, grid);
}

Matrix3 wn_matrix(const Vector3& upsilon) {
  return axis_rotation(0, upsilon(0)) * axis_rotation(1, upsilon(1)) *
         axis_rotation(2, upsilon(2));
}

std::vector<Matrix3> reconstruct_m(const WnParameters& params) {
  std::vector<Matrix3> out;
  out.reserve(params.upsilon.size());
  for (const auto& u : params.upsilon) out.push_back(wn_matrix(u));
  return out;
}

}  // namespace sunbloch
