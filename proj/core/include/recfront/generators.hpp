#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "recfront/point.hpp"
#include "recfront/record_set.hpp"

namespace recfront {

// A minimum of the record-setting region under <=. Coordinates are nonzero
// exactly on the support; every nonzero value is copied verbatim from some
// record coordinate.
struct Generator {
  Point point;
  std::vector<std::size_t> support;  // indices of nonzero coordinates
  std::size_t dimension = 0;         // |support|
};

// All generators of RS_n, grouped by support set (bitmask over coordinates).
// The record-setting region is exactly the union of up-sets of these points.
class GeneratorSet {
 public:
  GeneratorSet(std::size_t dim, std::uint64_t epoch) : dim_(dim), epoch_(epoch) {
    counts_by_dimension_.assign(dim + 1, 0);
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::uint64_t epoch() const noexcept { return epoch_; }
  [[nodiscard]] std::size_t gamma() const noexcept { return gamma_; }
  [[nodiscard]] const std::map<std::uint32_t, std::vector<Point>>& by_support()
      const noexcept {
    return by_support_;
  }
  [[nodiscard]] const std::vector<std::size_t>& counts_by_dimension() const noexcept {
    return counts_by_dimension_;
  }
  [[nodiscard]] std::vector<Generator> all() const;

  void add(std::uint32_t support_mask, Point p);

  // Exact equality of the generator sets (support grouping and coordinates),
  // independent of production order.
  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b);

 private:
  std::size_t dim_;
  std::uint64_t epoch_;
  std::size_t gamma_ = 0;
  std::map<std::uint32_t, std::vector<Point>> by_support_;
  std::vector<std::size_t> counts_by_dimension_;
};

struct TrailingSummary {
  double f_minus = 0.0;  // min generator coordinate-sum
  Point trailing;        // unique argmin
};

// Projection onto the coordinates in T, order preserved.
[[nodiscard]] std::vector<Point> project_records(const std::vector<Point>& records,
                                                 const std::vector<std::size_t>& T);

// Full-support generators of the region defined by t-dimensional records:
// coordinatewise minima of record subsets whose argmin map is a bijection,
// filtered by membership in the region. Enumerates size-t subsets.
[[nodiscard]] std::vector<Point> interior_generators(const std::vector<Point>& records);

// Generators for every support set: interior generators of each projection,
// injected back with zeros off the support. Epoch 0 yields only the origin.
[[nodiscard]] GeneratorSet all_generators(const RecordSet& rs);

[[nodiscard]] TrailingSummary trailing_summary(const GeneratorSet& gs);

// Count of generators with coordinate-sum <= b.
[[nodiscard]] std::size_t gamma_truncated(const GeneratorSet& gs, double b);

// Oracle enumeration over the candidate grid (record coordinates and 0 in
// each axis), kept iff inside the region and epsilon-minimal. Desk scale only.
[[nodiscard]] GeneratorSet brute_force_generators(const RecordSet& rs);

}  // namespace recfront
