#include "buildsim/stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace buildsim {

void RunningStats::add(double x) noexcept {
  ++count_;
  const double d = x - mean_;
  mean_ += d / static_cast<double>(count_);
  m2_ += d * (x - mean_);
}

double RunningStats::stddev() const noexcept {
  return count_ < 2 ? 0.0 : std::sqrt(m2_ / static_cast<double>(count_ - 1));
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0, 1};
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double center = (p + z2 / (2 * t)) / (1 + z2 / t);
  const double half = z * std::sqrt(p * (1 - p) / t + z2 / (4 * t * t)) / (1 + z2 / t);
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities,
                               double min_expected) {
  if (observed.size() != probabilities.size())
    throw std::invalid_argument("chi_square_gof: size mismatch");
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  if (total == 0) throw std::invalid_argument("chi_square_gof: no observations");

  std::vector<double> obs;
  std::vector<double> exp;
  double o_acc = 0;
  double e_acc = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    o_acc += static_cast<double>(observed[i]);
    e_acc += probabilities[i] * total;
    if (e_acc >= min_expected) {
      obs.push_back(o_acc);
      exp.push_back(e_acc);
      o_acc = e_acc = 0;
    }
  }
  if (e_acc > 0 || o_acc > 0) {
    if (exp.empty()) {
      obs.push_back(o_acc);
      exp.push_back(e_acc);
    } else {
      obs.back() += o_acc;
      exp.back() += e_acc;
    }
  }

  ChiSquareResult result;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (exp[i] <= 0) {
      if (obs[i] > 0) return {INFINITY, static_cast<std::uint32_t>(obs.size() - 1), 0.0};
      continue;
    }
    result.statistic += (obs[i] - exp[i]) * (obs[i] - exp[i]) / exp[i];
  }
  result.dof = obs.size() > 1 ? static_cast<std::uint32_t>(obs.size() - 1) : 0;
  if (result.dof == 0) {
    result.p_value = 1;
    return result;
  }
  boost::math::chi_squared_distribution<double> dist(result.dof);
  result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  return result;
}

}  // namespace buildsim
