#include "sunbloch/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sunbloch {

double PulseProfile::q(double t) const {
  switch (shape) {
    case PulseShape::Constant:
      return 1.0;
    case PulseShape::Gaussian: {
      const double x = (t - center) / width;
      return std::exp(-0.5 * x * x);
    }
    case PulseShape::Sech:
      return 1.0 / std::cosh((t - center) / width);
    case PulseShape::SinSquared: {
      // cos^2 ramp supported on [center - width, center + width].
      const double x = (t - center) / width;
      if (std::abs(x) >= 1.0) return 0.0;
      const double c = std::cos(0.5 * std::numbers::pi * x);
      return c * c;
    }
    case PulseShape::Sampled: {
      if (samples.empty()) throw ValidationError("sampled pulse has no (t, q) pairs");
      if (t <= samples.front().first) return samples.front().second;
      if (t >= samples.back().first) return samples.back().second;
      const auto hi = std::upper_bound(
          samples.begin(), samples.end(), t,
          [](double value, const auto& s) { return value < s.first; });
      const auto lo = hi - 1;
      const double span = hi->first - lo->first;
      if (span <= 0.0) return lo->second;
      const double w = (t - lo->first) / span;
      return (1.0 - w) * lo->second + w * hi->second;
    }
  }
  return 0.0;
}

double PulseProfile::epsilon(double t) const {
  return std::hypot(omega(t), delta(t));
}

void validate_pulse(const PulseProfile& pulse, const TimeGrid& grid, double peak_slack) {
  if (pulse.shape == PulseShape::Sampled) {
    if (pulse.samples.size() < 2) {
      throw ValidationError("sampled pulse needs at least two (t, q) pairs");
    }
    if (!std::is_sorted(pulse.samples.begin(), pulse.samples.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; })) {
      throw ValidationError("sampled pulse times must be strictly increasing");
    }
  }
  double peak = 0.0;
  for (long i = 0; i <= grid.n_steps; ++i) {
    const double qi = pulse.q(grid.time(i));
    if (qi < -1e-12 || qi > 1.0 + 1e-12) {
      throw ValidationError("pulse envelope leaves [0,1]: q(" +
                            std::to_string(grid.time(i)) + ") = " + std::to_string(qi));
    }
    peak = std::max(peak, qi);
  }
  if (std::abs(peak - 1.0) > peak_slack) {
    throw ValidationError("pulse envelope peak over the grid is " + std::to_string(peak) +
                          "; expected 1 (peak normalization)");
  }
}

std::vector<double> cumulative_simpson(const std::function<double(double)>& fn,
                                       const TimeGrid& grid) {
  std::vector<double> out(grid.n_samples(), 0.0);
  const double h = grid.dt();
  double acc = 0.0;
  double left = fn(grid.t_start);
  for (long i = 0; i < grid.n_steps; ++i) {
    const double mid = fn(grid.time(i) + 0.5 * h);
    const double right = fn(grid.time(i + 1));
    acc += h / 6.0 * (left + 4.0 * mid + right);
    out[i + 1] = acc;
    left = right;
  }
  return out;
}

std::vector<Eigen::MatrixXd> cumulative_simpson_matrix(
    const std::function<Eigen::MatrixXd(double)>& fn, const TimeGrid& grid) {
  const double h = grid.dt();
  Eigen::MatrixXd left = fn(grid.t_start);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(grid.n_samples());
  out.push_back(Eigen::MatrixXd::Zero(left.rows(), left.cols()));
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(left.rows(), left.cols());
  for (long i = 0; i < grid.n_steps; ++i) {
    const Eigen::MatrixXd mid = fn(grid.time(i) + 0.5 * h);
    const Eigen::MatrixXd right = fn(grid.time(i + 1));
    acc += h / 6.0 * (left + 4.0 * mid + right);
    out.push_back(acc);
    left = right;
  }
  return out;
}

}  // namespace sunbloch
