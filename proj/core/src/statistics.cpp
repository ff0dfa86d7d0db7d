#include "recfront/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace recfront {

namespace {

double neumaier_total(const std::vector<double>& v) {
  double sum = 0.0, comp = 0.0;
  for (double x : v) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double sq_dev_total(const std::vector<double>& v, double mean) {
  double sum = 0.0, comp = 0.0;
  for (double x : v) {
    double d = x - mean;
    double s = d * d;
    double t = sum + s;
    if (sum >= s)
      comp += (sum - t) + s;
    else
      comp += (s - t) + sum;
    sum = t;
  }
  return sum + comp;
}

// type-7 interpolated quantile of a sorted vector
double quantile_sorted(const std::vector<double>& x, double p) {
  if (x.empty()) throw std::invalid_argument("quantile: empty summary");
  if (p <= 0.0) return x.front();
  if (p >= 1.0) return x.back();
  double h = p * static_cast<double>(x.size() - 1);
  auto lo = static_cast<std::size_t>(h);
  double frac = h - static_cast<double>(lo);
  if (lo + 1 >= x.size()) return x.back();
  return x[lo] + frac * (x[lo + 1] - x[lo]);
}

}  // namespace

StatAggregate StatAggregate::from_samples(std::vector<double> values) {
  StatAggregate s;
  std::sort(values.begin(), values.end());
  s.count_ = values.size();
  s.data_ = std::move(values);
  if (s.count_ > kFullSampleLimit) s.degrade_to_grid();
  return s;
}

void StatAggregate::degrade_to_grid() {
  mean_ = count_ ? neumaier_total(data_) / static_cast<double>(count_) : 0.0;
  m2_ = sq_dev_total(data_, mean_);
  min_ = data_.front();
  max_ = data_.back();
  std::vector<double> grid(kGridPoints);
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    double p = (static_cast<double>(i) + 0.5) / static_cast<double>(kGridPoints);
    auto idx = static_cast<std::size_t>(p * static_cast<double>(count_));
    if (idx >= count_) idx = count_ - 1;
    grid[i] = data_[idx];
  }
  data_ = std::move(grid);
  gridded_ = true;
}

double StatAggregate::mean() const {
  if (count_ == 0) throw std::invalid_argument("StatAggregate: empty summary");
  if (gridded_) return mean_;
  return neumaier_total(data_) / static_cast<double>(count_);
}

double StatAggregate::m2() const {
  if (count_ == 0) throw std::invalid_argument("StatAggregate: empty summary");
  if (gridded_) return m2_;
  return sq_dev_total(data_, mean());
}

double StatAggregate::variance() const {
  if (count_ < 2) return 0.0;
  return m2() / static_cast<double>(count_ - 1);
}

double StatAggregate::min() const {
  if (count_ == 0) throw std::invalid_argument("StatAggregate: empty summary");
  return gridded_ ? min_ : data_.front();
}

double StatAggregate::max() const {
  if (count_ == 0) throw std::invalid_argument("StatAggregate: empty summary");
  return gridded_ ? max_ : data_.back();
}

double StatAggregate::quantile(double p) const {
  if (std::isnan(p) || p < 0.0 || p > 1.0)
    throw std::invalid_argument("StatAggregate: p must be in [0,1]");
  return quantile_sorted(data_, p);  // grid points are themselves quantiles
}

const std::vector<double>& StatAggregate::samples() const {
  if (gridded_) throw std::invalid_argument("StatAggregate: raw samples were degraded to a grid");
  return data_;
}

const std::vector<double>& StatAggregate::grid() const {
  if (!gridded_) throw std::invalid_argument("StatAggregate: summary holds raw samples");
  return data_;
}

StatAggregate StatAggregate::merged(const StatAggregate& a, const StatAggregate& b) {
  if (a.count_ == 0) return b;
  if (b.count_ == 0) return a;
  if (!a.gridded_ && !b.gridded_) {
    StatAggregate s;
    s.count_ = a.count_ + b.count_;
    s.data_.resize(a.data_.size() + b.data_.size());
    std::merge(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end(), s.data_.begin());
    if (s.count_ > kFullSampleLimit) s.degrade_to_grid();
    return s;
  }
  // at least one side is a sketch: combine moments pairwise (symmetric in
  // (a,b), hence exactly commutative) and re-sample the mixture quantiles
  auto moments = [](const StatAggregate& s) {
    struct M {
      double mean, m2, mn, mx;
    };
    if (s.gridded_) return M{s.mean_, s.m2_, s.min_, s.max_};
    return M{s.mean(), s.m2(), s.data_.front(), s.data_.back()};
  };
  auto ma = moments(a), mb = moments(b);
  double na = static_cast<double>(a.count_), nb = static_cast<double>(b.count_);
  double n = na + nb;
  StatAggregate s;
  s.gridded_ = true;
  s.count_ = a.count_ + b.count_;
  s.mean_ = (na * ma.mean + nb * mb.mean) / n;
  double delta = mb.mean - ma.mean;
  s.m2_ = ma.m2 + mb.m2 + delta * delta * na * nb / n;
  s.min_ = std::min(ma.mn, mb.mn);
  s.max_ = std::max(ma.mx, mb.mx);
  // weighted mixture quantiles over the two representations
  auto weighted = [](const StatAggregate& g) {
    double w = g.gridded_ ? static_cast<double>(g.count_) / static_cast<double>(g.data_.size())
                          : 1.0;
    return std::pair<const std::vector<double>*, double>(&g.data_, w);
  };
  auto [va, wa] = weighted(a);
  auto [vb, wb] = weighted(b);
  std::vector<std::pair<double, double>> mix;
  mix.reserve(va->size() + vb->size());
  std::size_t i = 0, j = 0;
  while (i < va->size() || j < vb->size()) {
    // tie-break on weight so the merged sequence is symmetric in (a,b)
    bool take_a;
    if (j == vb->size())
      take_a = true;
    else if (i == va->size())
      take_a = false;
    else if ((*va)[i] != (*vb)[j])
      take_a = (*va)[i] < (*vb)[j];
    else
      take_a = wa <= wb;
    if (take_a)
      mix.emplace_back((*va)[i++], wa);
    else
      mix.emplace_back((*vb)[j++], wb);
  }
  std::vector<double> grid(kGridPoints);
  double total = wa * static_cast<double>(va->size()) + wb * static_cast<double>(vb->size());
  std::size_t pos = 0;
  double cum = 0.0;
  for (std::size_t k = 0; k < kGridPoints; ++k) {
    double target = (static_cast<double>(k) + 0.5) / static_cast<double>(kGridPoints) * total;
    while (pos + 1 < mix.size() && cum + mix[pos].second < target) cum += mix[pos++].second;
    grid[k] = mix[pos].first;
  }
  s.data_ = std::move(grid);
  return s;
}

}  // namespace recfront
