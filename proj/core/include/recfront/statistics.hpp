#pragma once

#include <cstdint>
#include <vector>

namespace recfront {

// Mergeable summary of one scalar statistic across replications.
//
// Up to kFullSampleLimit observations the full sorted sample is kept and
// count/mean/M2/min/max/quantiles are derived from it in a fixed order, so
// merge (a sorted multiset union) is exactly associative and commutative:
// any split of the same replications yields bit-identical summaries.
// Past the limit the summary degrades to explicit moments plus a
// kGridPoints-point quantile grid; moments then combine by the standard
// pairwise (Chan) formulas, which are exactly commutative but only
// approximately associative, and the grid is a bounded-memory sketch.
class StatAggregate {
 public:
  static constexpr std::uint64_t kFullSampleLimit = 100000;
  static constexpr std::size_t kGridPoints = 1024;

  StatAggregate() = default;

  // Bulk construction from raw per-replication values (order irrelevant).
  static StatAggregate from_samples(std::vector<double> values);

  static StatAggregate merged(const StatAggregate& a, const StatAggregate& b);

  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
  [[nodiscard]] bool gridded() const noexcept { return gridded_; }
  [[nodiscard]] double mean() const;
  [[nodiscard]] double m2() const;        // sum of squared deviations
  [[nodiscard]] double variance() const;  // m2/(count-1); 0 when count < 2
  [[nodiscard]] double min() const;
  [[nodiscard]] double max() const;
  [[nodiscard]] double quantile(double p) const;

  // Sorted raw sample; throws when the summary has degraded to a grid.
  [[nodiscard]] const std::vector<double>& samples() const;

  // Quantile grid at probabilities (i+0.5)/kGridPoints (gridded mode).
  [[nodiscard]] const std::vector<double>& grid() const;

 private:
  bool gridded_ = false;
  std::uint64_t count_ = 0;
  std::vector<double> data_;  // sorted samples, or the quantile grid
  // explicit moments, maintained only in gridded mode
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;

  void degrade_to_grid();
};

}  // namespace recfront
