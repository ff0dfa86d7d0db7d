#include "recfront/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "recfront/errors.hpp"

namespace recfront {

void GeneratorSet::add(std::uint32_t support_mask, Point p) {
  const auto t = static_cast<std::size_t>(std::popcount(support_mask));
  by_support_[support_mask].push_back(std::move(p));
  counts_by_dimension_[t] += 1;
  gamma_ += 1;
}

std::vector<Generator> GeneratorSet::all() const {
  std::vector<Generator> out;
  out.reserve(gamma_);
  for (const auto& [mask, pts] : by_support_) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < dim_; ++j)
      if (mask & (1u << j)) support.push_back(j);
    for (const auto& p : pts) out.push_back({p, support, support.size()});
  }
  return out;
}

bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
  if (a.dim_ != b.dim_ || a.gamma_ != b.gamma_) return false;
  auto canon = [](const GeneratorSet& g) {
    std::map<std::uint32_t, std::vector<Point>> m = g.by_support_;
    for (auto& [mask, pts] : m)
      std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) {
        return x.coords() < y.coords();
      });
    return m;
  };
  return canon(a) == canon(b);
}

std::vector<Point> project_records(const std::vector<Point>& records,
                                   const std::vector<std::size_t>& T) {
  if (T.empty()) throw std::invalid_argument("project_records: empty index set");
  std::vector<Point> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    std::vector<double> c(T.size());
    for (std::size_t j = 0; j < T.size(); ++j) {
      if (T[j] >= r.dim()) throw std::invalid_argument("project_records: index out of range");
      c[j] = r[T[j]];
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

namespace {

// Shared core: enumerate size-t subsets of the rho records (projected onto
// the t columns in cols), emit each coordinatewise min whose argmin map is a
// bijection and which no record strictly exceeds.  The projection is staged
// into a compact matrix sorted by first column (full-tuple tiebreak), so the
// level-0 record keeps coordinate 0 for good and the membership scan can
// start just past it.  Recursion keeps per-level running minima, and two
// prunes cut subtrees that cannot emit: a chosen record that owns no current
// minimum never owns one again, and a partial min vector strictly below some
// record stays dominated under every completion.  Subsets that reach their
// leaf still raise the tie diagnostic.
template <typename Emit>
struct InteriorEnumerator {
  const double* m;  // rho x t, sorted
  std::size_t rho, t;
  Emit& emit;
  // row L of mins/owner holds the state after choosing L+1 records
  std::vector<double> mins;
  std::vector<std::uint32_t> owner;
  std::vector<std::uint32_t> tied;  // per level: coords whose min is attained twice
  std::size_t start0 = 0;           // index chosen at level 0

  void descend(std::size_t level, std::size_t start) {
    const std::size_t remaining = t - level - 1;
    double* cm = mins.data() + level * t;
    std::uint32_t* co = owner.data() + level * t;
    const double* pm = level == 0 ? cm : cm - t;
    const std::uint32_t* po = level == 0 ? co : co - t;
    for (std::size_t i = start; i + remaining < rho; ++i) {
      const double* rec = m + i * t;
      std::uint32_t tie;
      std::uint32_t owners;
      if (level == 0) {
        start0 = i;
        for (std::size_t j = 0; j < t; ++j) {
          cm[j] = rec[j];
          co[j] = 0;
        }
        tie = 0;
        owners = 1u;
      } else {
        tie = tied[level - 1];
        owners = 0;
        for (std::size_t j = 0; j < t; ++j) {
          const double v = rec[j];
          if (v < pm[j]) {
            cm[j] = v;
            co[j] = static_cast<std::uint32_t>(level);
            tie &= ~(1u << j);
          } else {
            cm[j] = pm[j];
            co[j] = po[j];
            if (v == pm[j]) tie |= 1u << j;
          }
          owners |= 1u << co[j];
        }
      }
      if (level + 1 == t) {
        // a tied minimum leaves the argmin map ill-defined
        if (tie) throw TieError("interior_generators: coordinate tie among records");
        if (static_cast<std::size_t>(std::popcount(owners)) != t) continue;
        if (!dominated(cm)) emit(cm);
      } else {
        if (static_cast<std::size_t>(std::popcount(owners)) != level + 1) continue;
        if (remaining >= 2 && dominated(cm)) continue;
        tied[level] = tie;
        descend(level + 1, i + 1);
      }
    }
  }

  // region membership fails iff some record sits strictly above g in all t
  // coordinates; records at or before start0 cannot (their first column is
  // not above g[0])
  bool dominated(const double* g) const {
    const double* rec = m + (start0 + 1) * t;
    for (std::size_t i = start0 + 1; i < rho; ++i, rec += t) {
      std::size_t j = 0;
      for (; j < t; ++j)
        if (!(g[j] < rec[j])) break;
      if (j == t) return true;
    }
    return false;
  }
};

template <typename Emit>
void enumerate_interior(const double* coords, std::size_t rho, std::size_t stride,
                        const std::size_t* cols, std::size_t t, Emit&& emit) {
  if (rho < t || t == 0) return;
  std::vector<std::size_t> order(rho);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double* ra = coords + a * stride;
    const double* rb = coords + b * stride;
    for (std::size_t j = 0; j < t; ++j)
      if (ra[cols[j]] != rb[cols[j]]) return ra[cols[j]] < rb[cols[j]];
    return a < b;
  });
  std::vector<double> m(rho * t);
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < t; ++j) m[i * t + j] = coords[order[i] * stride + cols[j]];
  InteriorEnumerator<Emit> e{m.data(), rho, t, emit, {}, {}, {}, 0};
  e.mins.assign(t * t, 0.0);
  e.owner.assign(t * t, 0);
  e.tied.assign(t, 0);
  e.descend(0, 0);
}

void check_positive_records(const RecordSet& rs) {
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (double v : rs.record_span(i))
      if (v == 0.0)
        throw std::invalid_argument(
            "generators: record with a zero coordinate is degenerate");
}

}  // namespace

std::vector<Point> interior_generators(const std::vector<Point>& records) {
  if (records.empty()) return {};
  const std::size_t t = records[0].dim();
  std::vector<double> flat(records.size() * t);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].dim() != t)
      throw std::invalid_argument("interior_generators: mixed dimensions");
    std::copy(records[i].coords().begin(), records[i].coords().end(),
              flat.begin() + i * t);
  }
  std::vector<std::size_t> cols(t);
  for (std::size_t j = 0; j < t; ++j) cols[j] = j;
  std::vector<Point> out;
  enumerate_interior(flat.data(), records.size(), t, cols.data(), t, [&](const double* g) {
    out.emplace_back(std::vector<double>(g, g + t));
  });
  return out;
}

GeneratorSet all_generators(const RecordSet& rs) {
  const std::size_t d = rs.dim();
  if (d > 31) throw std::invalid_argument("all_generators: dimension too large");
  GeneratorSet gs(d, rs.epoch());
  if (rs.size() == 0) {
    gs.add(0, Point(std::vector<double>(d, 0.0)));  // epoch-0 origin generator
    return gs;
  }
  check_positive_records(rs);

  const double* flat = rs.record_span(0).data();
  std::vector<std::size_t> cols;
  cols.reserve(d);
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    cols.clear();
    for (std::size_t j = 0; j < d; ++j)
      if (mask & (1u << j)) cols.push_back(j);
    enumerate_interior(flat, rs.size(), d, cols.data(), cols.size(), [&](const double* g) {
      std::vector<double> full(d, 0.0);
      for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = g[j];
      gs.add(mask, Point(std::move(full)));
    });
  }
  return gs;
}

TrailingSummary trailing_summary(const GeneratorSet& gs) {
  if (gs.gamma() == 0) throw std::invalid_argument("trailing_summary: empty set");
  bool first = true, tied = false;
  double best = 0.0;
  const Point* arg = nullptr;
  for (const auto& [mask, pts] : gs.by_support()) {
    for (const auto& p : pts) {
      const double s = p.coordinate_sum();
      if (first || s < best) {
        best = s;
        arg = &p;
        first = false;
        tied = false;
      } else if (s == best) {
        tied = true;
      }
    }
  }
  if (tied) throw TieError("trailing_summary: trailing point is not unique");
  return {best, *arg};
}

std::size_t gamma_truncated(const GeneratorSet& gs, double b) {
  std::size_t c = 0;
  for (const auto& [mask, pts] : gs.by_support())
    for (const auto& p : pts) c += (p.coordinate_sum() <= b);
  return c;
}

GeneratorSet brute_force_generators(const RecordSet& rs) {
  const std::size_t d = rs.dim();
  if (d > 16) throw std::invalid_argument("brute_force_generators: instance too large");
  GeneratorSet gs(d, rs.epoch());
  if (rs.size() == 0) {
    gs.add(0, Point(std::vector<double>(d, 0.0)));
    return gs;
  }
  check_positive_records(rs);

  // candidate values per axis: 0 plus every record coordinate
  std::vector<std::vector<double>> axis(d);
  std::vector<double> all_values{0.0};
  for (std::size_t j = 0; j < d; ++j) axis[j].push_back(0.0);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    auto r = rs.record_span(i);
    for (std::size_t j = 0; j < d; ++j) {
      axis[j].push_back(r[j]);
      all_values.push_back(r[j]);
    }
  }
  double n_candidates = 1;
  for (auto& a : axis) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    n_candidates *= static_cast<double>(a.size());
  }
  if (n_candidates > 4e6)
    throw std::invalid_argument("brute_force_generators: instance too large");

  // epsilon: half the minimum positive gap among the values in play
  std::sort(all_values.begin(), all_values.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < all_values.size(); ++i) {
    const double g = all_values[i] - all_values[i - 1];
    if (g > 0.0) gap = std::min(gap, g);
  }
  const double eps = gap / 2;

  std::vector<std::size_t> odo(d, 0);
  std::vector<double> cand(d), probe(d);
  for (;;) {
    for (std::size_t j = 0; j < d; ++j) cand[j] = axis[j][odo[j]];
    if (rs.rs_contains(std::span<const double>(cand))) {
      bool minimal = true;
      for (std::size_t j = 0; j < d && minimal; ++j) {
        if (cand[j] > 0.0) {
          std::copy(cand.begin(), cand.end(), probe.begin());
          probe[j] -= eps;
          if (rs.rs_contains(std::span<const double>(probe))) minimal = false;
        }
      }
      if (minimal) {
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < d; ++j)
          if (cand[j] > 0.0) mask |= 1u << j;
        gs.add(mask, Point(cand));
      }
    }
    std::size_t j = 0;
    while (j < d && ++odo[j] == axis[j].size()) odo[j++] = 0;
    if (j == d) break;
  }
  return gs;
}

}  // namespace recfront
