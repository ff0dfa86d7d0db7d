#include "recfront/record_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace recfront {
namespace detail {

namespace {
constexpr std::uint64_t kEmpty = ~std::uint64_t{0};  // NaN pattern, unreachable

inline std::uint64_t key_of(double v) noexcept {
  return std::bit_cast<std::uint64_t>(v + 0.0);  // normalize -0.0
}

inline std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace

void ValueSet::rehash(std::size_t cap) {
  std::vector<std::uint64_t> old = std::move(slots_);
  slots_.assign(cap, kEmpty);
  size_ = 0;
  for (std::uint64_t k : old)
    if (k != kEmpty) {
      std::size_t mask = slots_.size() - 1;
      std::size_t i = mix(k) & mask;
      while (slots_[i] != kEmpty) i = (i + 1) & mask;
      slots_[i] = k;
      ++size_;
    }
}

void ValueSet::insert(double v) {
  if (slots_.empty() || (size_ + 1) * 4 > slots_.size() * 3)
    rehash(std::max<std::size_t>(16, slots_.size() * 2));
  std::uint64_t k = key_of(v);
  std::size_t mask = slots_.size() - 1;
  std::size_t i = mix(k) & mask;
  while (slots_[i] != kEmpty) {
    if (slots_[i] == k) return;
    i = (i + 1) & mask;
  }
  slots_[i] = k;
  ++size_;
}

void ValueSet::erase(double v) {
  if (slots_.empty()) return;
  std::uint64_t k = key_of(v);
  std::size_t mask = slots_.size() - 1;
  std::size_t i = mix(k) & mask;
  while (slots_[i] != kEmpty) {
    if (slots_[i] == k) {
      // backward-shift deletion keeps probe chains intact
      slots_[i] = kEmpty;
      --size_;
      std::size_t j = (i + 1) & mask;
      while (slots_[j] != kEmpty) {
        std::uint64_t k2 = slots_[j];
        std::size_t home = mix(k2) & mask;
        bool movable = (i <= j) ? (home <= i || home > j) : (home <= i && home > j);
        if (movable) {
          slots_[i] = k2;
          slots_[j] = kEmpty;
          i = j;
        }
        j = (j + 1) & mask;
      }
      return;
    }
    i = (i + 1) & mask;
  }
}

bool ValueSet::contains(double v) const noexcept {
  if (slots_.empty()) return false;
  std::uint64_t k = key_of(v);
  std::size_t mask = slots_.size() - 1;
  std::size_t i = mix(k) & mask;
  while (slots_[i] != kEmpty) {
    if (slots_[i] == k) return true;
    i = (i + 1) & mask;
  }
  return false;
}

void ValueSet::clear() noexcept {
  std::fill(slots_.begin(), slots_.end(), kEmpty);
  size_ = 0;
}

}  // namespace detail

RecordSet::RecordSet(std::size_t dim, TiePolicy ties, InsertAlgorithm algo)
    : dim_(dim), ties_(ties), algo_(algo) {
  if (dim_ == 0) throw std::invalid_argument("RecordSet: dimension must be >= 1");
  if (algo_ == InsertAlgorithm::Auto)
    algo_ = dim_ == 2 ? InsertAlgorithm::SortedD2 : InsertAlgorithm::LinearScan;
  if (algo_ == InsertAlgorithm::SortedD2 && dim_ != 2)
    throw std::invalid_argument("RecordSet: SortedD2 requires dim == 2");
  if (ties_ == TiePolicy::Strict) tie_sets_.resize(dim_);
}

std::vector<Point> RecordSet::records() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto s = record_span(i);
    out.emplace_back(std::vector<double>(s.begin(), s.end()));
  }
  return out;
}

void RecordSet::check_ties(std::span<const double> x) const {
  for (std::size_t j = 0; j < dim_; ++j)
    if (tie_sets_[j].contains(x[j]))
      throw TieError("insert: coordinate tie with an existing record (coordinate " +
                     std::to_string(j) + ")");
}

void RecordSet::tie_add(std::span<const double> x) {
  for (std::size_t j = 0; j < dim_; ++j) tie_sets_[j].insert(x[j]);
}

void RecordSet::tie_rebuild() {
  for (auto& s : tie_sets_) s.clear();
  for (std::size_t i = 0; i < size(); ++i) {
    auto r = record_span(i);
    for (std::size_t j = 0; j < dim_; ++j) tie_sets_[j].insert(r[j]);
  }
}

double RecordSet::dominance_mass(std::span<const double> x) const noexcept {
  // P(fresh Exp(1)^d point is strictly below x); orders the scan so that
  // points get rejected after ~O(1) probes on average.
  double m = 1.0;
  for (double v : x) m *= -std::expm1(-v);
  return m;
}

InsertionOutcome RecordSet::insert(const Point& x) {
  if (x.dim() != dim_) throw std::invalid_argument("insert: dimension mismatch");
  return insert(x.span());
}

InsertionOutcome RecordSet::insert(std::span<const double> x) {
  if (x.size() != dim_) throw std::invalid_argument("insert: dimension mismatch");
  for (double v : x)
    if (!(v >= 0.0) || !(v <= std::numeric_limits<double>::max()))
      throw std::invalid_argument("insert: coordinates must be finite and nonnegative");
  if (ties_ == TiePolicy::Strict && !sums_.empty()) check_ties(x);
  return algo_ == InsertAlgorithm::SortedD2 ? insert_sorted2(x) : insert_linear(x);
}

InsertionOutcome RecordSet::insert_linear(std::span<const double> x) {
  ++epoch_;
  const std::size_t rho = sums_.size();
  const double* rec = coords_.data();
  for (std::size_t i = 0; i < rho; ++i, rec += dim_) {
    // strictly below record i in every coordinate?
    std::size_t j = 0;
    for (; j < dim_; ++j)
      if (!(x[j] < rec[j])) break;
    if (j == dim_) return {};  // dominated, not a record
  }

  InsertionOutcome out;
  out.was_record = true;
  // remove records strictly below x (stable, keeps mass order)
  std::size_t w = 0;
  for (std::size_t i = 0; i < rho; ++i) {
    auto r = record_span(i);
    if (strictly_below_span(r, x)) {
      out.displaced.emplace_back(std::vector<double>(r.begin(), r.end()));
      continue;
    }
    if (w != i) {
      std::memmove(coords_.data() + w * dim_, coords_.data() + i * dim_,
                   dim_ * sizeof(double));
      sums_[w] = sums_[i];
      epochs_[w] = epochs_[i];
      masses_[w] = masses_[i];
    }
    ++w;
  }
  coords_.resize(w * dim_);
  sums_.resize(w);
  epochs_.resize(w);
  masses_.resize(w);

  const double mass = dominance_mass(x);
  const std::size_t pos =
      std::upper_bound(masses_.begin(), masses_.end(), mass, std::greater<double>{}) -
      masses_.begin();
  coords_.insert(coords_.begin() + pos * dim_, x.begin(), x.end());
  sums_.insert(sums_.begin() + pos, compensated_sum(x));
  epochs_.insert(epochs_.begin() + pos, epoch_);
  masses_.insert(masses_.begin() + pos, mass);

  if (ties_ == TiePolicy::Strict) {
    if (out.displaced.empty())
      tie_add(x);
    else
      tie_rebuild();
  }
  return out;
}

InsertionOutcome RecordSet::insert_sorted2(std::span<const double> x) {
  // Records kept sorted by first coordinate ascending, second descending
  // within equal first coordinates; pairwise incomparability then makes the
  // second coordinate non-increasing along the whole order.
  ++epoch_;
  const std::size_t rho = sums_.size();
  const double a = x[0], b = x[1];

  auto first_coord = [this](std::size_t i) { return coords_[2 * i]; };
  auto second_coord = [this](std::size_t i) { return coords_[2 * i + 1]; };

  // lo = first index with r1 >= a, hi = first index with r1 > a
  std::size_t lo = 0, n = rho;
  while (n > 0) {
    std::size_t half = n / 2;
    if (first_coord(lo + half) < a) {
      lo += half + 1;
      n -= half + 1;
    } else {
      n = half;
    }
  }
  std::size_t hi = lo;
  while (hi < rho && first_coord(hi) == a) ++hi;

  if (hi < rho && b < second_coord(hi)) return {};  // dominated by successor

  InsertionOutcome out;
  out.was_record = true;
  // displaced records form a contiguous run just before lo
  std::size_t k0 = lo;
  while (k0 > 0 && second_coord(k0 - 1) < b) --k0;
  for (std::size_t i = k0; i < lo; ++i) {
    auto r = record_span(i);
    out.displaced.emplace_back(std::vector<double>(r.begin(), r.end()));
  }
  if (k0 != lo) {
    coords_.erase(coords_.begin() + k0 * 2, coords_.begin() + lo * 2);
    sums_.erase(sums_.begin() + k0, sums_.begin() + lo);
    epochs_.erase(epochs_.begin() + k0, epochs_.begin() + lo);
    hi -= lo - k0;
  }
  // among an equal-first-coordinate group (permissive ties) order by r2 desc
  std::size_t pos = k0;
  while (pos < hi && first_coord(pos) == a && second_coord(pos) > b) ++pos;
  coords_.insert(coords_.begin() + pos * 2, x.begin(), x.end());
  sums_.insert(sums_.begin() + pos, compensated_sum(x));
  epochs_.insert(epochs_.begin() + pos, epoch_);

  if (ties_ == TiePolicy::Strict) {
    if (out.displaced.empty())
      tie_add(x);
    else
      tie_rebuild();
  }
  return out;
}

std::size_t RecordSet::rho_truncated(double b) const noexcept {
  std::size_t c = 0;
  for (double s : sums_) c += (s <= b);
  return c;
}

bool RecordSet::rs_contains(const Point& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("rs_contains: dimension mismatch");
  return rs_contains(x.span());
}

bool RecordSet::rs_contains(std::span<const double> x) const {
  if (x.size() != dim_) throw std::invalid_argument("rs_contains: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (strictly_below_span(x, record_span(i))) return false;
  return true;
}

FrontierRecordStats RecordSet::frontier_record_stats() const {
  if (sums_.empty())
    throw std::invalid_argument("frontier_record_stats: empty record set");
  std::size_t arg_max = 0;
  double max_sum = sums_[0], min_sum = sums_[0];
  bool max_tied = false;
  for (std::size_t i = 1; i < sums_.size(); ++i) {
    if (sums_[i] > max_sum) {
      max_sum = sums_[i];
      arg_max = i;
      max_tied = false;
    } else if (sums_[i] == max_sum) {
      max_tied = true;
    }
    min_sum = std::min(min_sum, sums_[i]);
  }
  if (max_tied)
    throw TieError("frontier_record_stats: leading point is not unique");
  auto s = record_span(arg_max);
  return {max_sum, Point(std::vector<double>(s.begin(), s.end())), min_sum,
          sums_.size()};
}

}  // namespace recfront
