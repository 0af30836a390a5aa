#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sunbloch/errors.hpp"

namespace sunbloch {

/// Uniform time grid with n_steps intervals (n_steps + 1 sample points).
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  long n_steps = 1;

  TimeGrid() = default;
  TimeGrid(double start, double end, long steps) : t_start(start), t_end(end), n_steps(steps) {
    if (!(t_end > t_start)) throw ValidationError("TimeGrid: t_end must exceed t_start");
    if (n_steps < 1) throw ValidationError("TimeGrid: n_steps must be >= 1");
  }

  double dt() const { return (t_end - t_start) / static_cast<double>(n_steps); }
  double time(long i) const { return t_start + i * dt(); }
  long n_samples() const { return n_steps + 1; }
};

enum class PulseShape { Constant, Gaussian, Sech, SinSquared, Sampled };
enum class DetuningMode { Constant, Proportional };

/// Driving pulse: Rabi frequency Omega(t) = omega0 * q(t) and detuning
/// Delta(t), which is either fixed at delta0 or rides the same envelope
/// (Delta(t) = delta0 * q(t)). The envelope q is normalized to peak at 1.
struct PulseProfile {
  PulseShape shape = PulseShape::Constant;
  double omega0 = 0.0;
  double delta0 = 0.0;
  DetuningMode detuning_mode = DetuningMode::Constant;
  double center = 0.0;
  double width = 1.0;
  std::vector<std::pair<double, double>> samples;  // (t, q) pairs for Sampled

  double q(double t) const;
  double omega(double t) const { return omega0 * q(t); }
  double delta(double t) const {
    return detuning_mode == DetuningMode::Proportional ? delta0 * q(t) : delta0;
  }
  double epsilon(double t) const;  // sqrt(Omega^2 + Delta^2)
  bool proportional() const { return detuning_mode == DetuningMode::Proportional; }
};

/// Checks q(t) in [0,1] over the grid and peak normalization
/// max_t q(t) = 1 (within peak_slack, to allow a peak falling between
/// grid points). Throws ValidationError.
void validate_pulse(const PulseProfile& pulse, const TimeGrid& grid,
                    double peak_slack = 1e-3);

/// Cumulative integral of fn from t_start to every grid point, one Simpson
/// panel per step: (h/6) [f(t) + 4 f(t + h/2) + f(t + h)]. Matches the
/// quadrature RK4 degenerates to on state-independent integrands.
std::vector<double> cumulative_simpson(const std::function<double(double)>& fn,
                                       const TimeGrid& grid);

/// Same rule for matrix-valued integrands.
std::vector<Eigen::MatrixXd> cumulative_simpson_matrix(
    const std::function<Eigen::MatrixXd(double)>& fn, const TimeGrid& grid);

}  // namespace sunbloch
