#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace buildsim {

/// Running mean / sample standard deviation (Welford).
class RunningStats {
 public:
  void add(double x) noexcept;
  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Sample standard deviation; 0 for fewer than two observations.
  double stddev() const noexcept;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

struct Interval {
  double low = 0;
  double high = 0;
};

/// Wilson score interval for successes/trials at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

struct ChiSquareResult {
  double statistic = 0;
  std::uint32_t dof = 0;
  double p_value = 1;
};

/// Goodness of fit of observed counts against cell probabilities. Adjacent
/// cells are pooled until every pooled cell expects at least `min_expected`.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities,
                               double min_expected = 5.0);

}  // namespace buildsim
