#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "recfront/errors.hpp"
#include "recfront/point.hpp"

namespace recfront {

// Exact coordinate equality between a new observation and a current record is
// a.s. impossible under continuous sampling. Strict mode treats it as a
// diagnostic error; Permissive proceeds (strict comparisons only, so a tie
// never produces dominance either way).
enum class TiePolicy { Strict, Permissive };

// Two insertion algorithms behind one interface, cross-checked in tests:
// a linear scan over current records (any d), and for d=2 an
// ordered-by-first-coordinate array with binary search.
enum class InsertAlgorithm { Auto, LinearScan, SortedD2 };

struct InsertionOutcome {
  bool was_record = false;
  std::vector<Point> displaced;  // records strictly dominated by the new point
};

struct FrontierRecordStats {
  double f_plus = 0.0;        // max record coordinate-sum
  Point leading;              // unique argmax
  double hat_f_minus = 0.0;   // min record coordinate-sum
  std::size_t rho = 0;
};

namespace detail {

// Open-addressing set of double bit patterns, one per coordinate, used for
// O(1) tie detection against current record values. 0xFFF... (a NaN pattern)
// is the empty slot sentinel; valid coordinates are finite and nonnegative.
class ValueSet {
 public:
  void insert(double v);
  void erase(double v);
  [[nodiscard]] bool contains(double v) const noexcept;
  void clear() noexcept;

 private:
  void rehash(std::size_t cap);
  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

}  // namespace detail

// Maintains the current (remaining) records of the observation sequence:
// the Pareto maxima, i.e. points not strictly dominated by any later point.
class RecordSet {
 public:
  explicit RecordSet(std::size_t dim, TiePolicy ties = TiePolicy::Strict,
                     InsertAlgorithm algo = InsertAlgorithm::Auto);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::uint64_t epoch() const noexcept { return epoch_; }
  [[nodiscard]] std::size_t size() const noexcept { return sums_.size(); }  // rho_n
  [[nodiscard]] TiePolicy tie_policy() const noexcept { return ties_; }
  [[nodiscard]] InsertAlgorithm algorithm() const noexcept { return algo_; }

  // Storage order is algorithm-specific; treat as an unordered list.
  [[nodiscard]] std::vector<Point> records() const;
  [[nodiscard]] const std::vector<std::uint64_t>& insertion_epochs() const noexcept {
    return epochs_;
  }
  [[nodiscard]] std::span<const double> record_span(std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  [[nodiscard]] double record_sum(std::size_t i) const noexcept { return sums_[i]; }

  InsertionOutcome insert(const Point& x);
  InsertionOutcome insert(std::span<const double> x);

  // Count of records with coordinate sum <= b.
  [[nodiscard]] std::size_t rho_truncated(double b) const noexcept;

  // Membership in the record-setting region RS_n: x is not strictly below
  // any current record. RS_0 is the whole orthant.
  [[nodiscard]] bool rs_contains(const Point& x) const;
  [[nodiscard]] bool rs_contains(std::span<const double> x) const;

  [[nodiscard]] FrontierRecordStats frontier_record_stats() const;

 private:
  InsertionOutcome insert_linear(std::span<const double> x);
  InsertionOutcome insert_sorted2(std::span<const double> x);
  void check_ties(std::span<const double> x) const;
  void tie_add(std::span<const double> x);
  void tie_rebuild();
  [[nodiscard]] double dominance_mass(std::span<const double> x) const noexcept;

  std::size_t dim_;
  TiePolicy ties_;
  InsertAlgorithm algo_;
  std::uint64_t epoch_ = 0;

  std::vector<double> coords_;          // row-major, size() * dim_
  std::vector<double> sums_;            // compensated coordinate sums
  std::vector<std::uint64_t> epochs_;   // insertion epoch per record
  std::vector<double> masses_;          // linear path: P(new point dominated by r), kept descending
  std::vector<detail::ValueSet> tie_sets_;  // strict mode: one per coordinate
};

}  // namespace recfront
