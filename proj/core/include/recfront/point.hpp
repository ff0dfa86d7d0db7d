#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace recfront {

// Neumaier-compensated sum. Coordinate counts are tiny (d <= 8 in practice)
// but frontier statistics compare sums for equality, so keep them tight.
[[nodiscard]] inline double compensated_sum(std::span<const double> xs) noexcept {
  double s = 0.0, c = 0.0;
  for (double x : xs) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  return s + c;
}

// x strictly below y in every coordinate.
[[nodiscard]] inline bool strictly_below_span(std::span<const double> x,
                                              std::span<const double> y) noexcept {
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!(x[j] < y[j])) return false;
  return true;
}

[[nodiscard]] inline bool weakly_leq_span(std::span<const double> x,
                                          std::span<const double> y) noexcept {
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] > y[j]) return false;
  return true;
}

// A point of the nonnegative orthant. Coordinates must be finite and >= 0.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {
    for (double v : coords_)
      if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument("Point: coordinates must be finite and nonnegative");
  }

  [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
  [[nodiscard]] double operator[](std::size_t j) const noexcept { return coords_[j]; }
  [[nodiscard]] const std::vector<double>& coords() const noexcept { return coords_; }
  [[nodiscard]] std::span<const double> span() const noexcept { return coords_; }
  [[nodiscard]] double coordinate_sum() const noexcept { return compensated_sum(coords_); }

  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  std::vector<double> coords_;
};

inline void check_same_dim(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
}

// x < y strictly in every coordinate (irreflexive).
[[nodiscard]] inline bool strictly_dominates(const Point& x, const Point& y) {
  check_same_dim(x, y);
  return strictly_below_span(x.span(), y.span());
}

// x <= y coordinatewise (reflexive partial order).
[[nodiscard]] inline bool weakly_leq(const Point& x, const Point& y) {
  check_same_dim(x, y);
  return weakly_leq_span(x.span(), y.span());
}

}  // namespace recfront
