#include "recfront/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "recfront/generators.hpp"
#include "recfront/rng.hpp"

namespace recfront {

void SimulationConfig::validate() const {
  if (d < 1) throw std::invalid_argument("SimulationConfig: d must be >= 1");
  if (replications < 1) throw std::invalid_argument("SimulationConfig: replications must be >= 1");
  if (n_checkpoints.empty()) throw std::invalid_argument("SimulationConfig: no checkpoints");
  std::int64_t prev = 0;
  for (std::int64_t n : n_checkpoints) {
    if (n <= prev)
      throw std::invalid_argument("SimulationConfig: checkpoints must be strictly increasing");
    prev = n;
  }
  if (boundary && boundary->form == BoundarySpec::Form::C && !(boundary->value > 0.0))
    throw std::invalid_argument("SimulationConfig: c must be > 0");
}

const StatAggregate* CheckpointAggregate::find(std::string_view name) const {
  for (const auto& [k, v] : stats)
    if (k == name) return &v;
  return nullptr;
}

const StatAggregate& CheckpointAggregate::at(std::string_view name) const {
  const StatAggregate* s = find(name);
  if (!s) throw std::invalid_argument("summary has no statistic named " + std::string(name));
  return *s;
}

const CheckpointAggregate& AggregateSummary::checkpoint(std::int64_t n) const {
  for (const auto& c : checkpoints)
    if (c.n == n) return c;
  throw std::invalid_argument("summary has no checkpoint n=" + std::to_string(n));
}

Point sample_point(std::mt19937_64& stream, int d) {
  if (d < 1) throw std::invalid_argument("sample_point: d must be >= 1");
  std::vector<double> c(static_cast<std::size_t>(d));
  for (auto& v : c) v = sample_exponential(stream);
  return Point(std::move(c));
}

ReplicationResult run_replication(const SimulationConfig& config, std::uint64_t rep_index) {
  config.validate();
  const int d = config.d;
  std::mt19937_64 stream = replication_engine(config.master_seed, rep_index);
  RecordSet rs(static_cast<std::size_t>(d), config.ties);

  ReplicationResult rep;
  rep.rep_index = rep_index;
  rep.checkpoints.reserve(config.n_checkpoints.size());

  std::vector<double> buf(static_cast<std::size_t>(d));
  std::int64_t t = 0;
  for (std::int64_t target : config.n_checkpoints) {
    while (t < target) {
      for (auto& v : buf) v = sample_exponential(stream);
      rs.insert(std::span<const double>(buf));
      ++t;
    }

    CheckpointResult ck;
    ck.n = target;
    FrontierRecordStats fs = rs.frontier_record_stats();
    ck.rho = fs.rho;
    ck.f_plus = fs.f_plus;
    ck.hf_minus = fs.hat_f_minus;
    ck.leading = fs.leading.coords();

    if (config.collect.generators) {
      GeneratorSet gs = all_generators(rs);
      ck.gamma = gs.gamma();
      ck.gamma_by_dim = gs.counts_by_dimension();
      TrailingSummary ts = trailing_summary(gs);
      ck.f_minus = ts.f_minus;
      ck.trailing = ts.trailing.coords();
      if (config.boundary && config.collect.truncated && target >= 16) {
        BoundaryValues bv = boundary_eval(*config.boundary, d, static_cast<double>(target));
        ck.gamma_trunc = static_cast<std::int64_t>(gamma_truncated(gs, bv.b));
      }
    }
    if (config.boundary && config.collect.truncated && target >= 16) {
      BoundaryValues bv = boundary_eval(*config.boundary, d, static_cast<double>(target));
      ck.b_n = bv.b;
      ck.rho_trunc = static_cast<std::int64_t>(rs.rho_truncated(bv.b));
      if (config.boundary->form == BoundarySpec::Form::A)
        ck.r_n_a = static_cast<double>(ck.rho_trunc);
    }
    if (d >= 2 && target >= 3) {
      CenteringConstants cc = centering(d, static_cast<double>(target));
      double l2 = std::log(std::log(static_cast<double>(target)));
      ck.hf_centered = l2 * (ck.hf_minus - cc.trailing_center);
    }
    rep.checkpoints.push_back(std::move(ck));
  }

  if (config.collect.path_audits) {
    double prev_fm = -std::numeric_limits<double>::infinity();
    double prev_hfm = -std::numeric_limits<double>::infinity();
    for (const CheckpointResult& ck : rep.checkpoints) {
      bool ordered = ck.hf_minus <= ck.f_plus;
      if (!std::isnan(ck.f_minus)) ordered = ordered && ck.f_minus <= ck.hf_minus;
      if (!ordered) rep.ordering_violations += 1;
      if (ck.hf_minus < prev_hfm) rep.hf_monotonicity_violations += 1;
      if (!std::isnan(ck.f_minus)) {
        if (ck.f_minus < prev_fm) rep.f_monotonicity_violations += 1;
        prev_fm = ck.f_minus;
      }
      prev_hfm = ck.hf_minus;
    }
  }
  return rep;
}

namespace {

struct StatColumn {
  std::string name;
  std::vector<double> values;  // in replication order; folded once at the end
};

void emit_stats(const SimulationConfig& cfg, const CheckpointResult& ck,
                std::vector<StatColumn>& cols, bool first) {
  auto push = [&](const std::string& name, double v) {
    if (first) {
      cols.push_back({name, {}});
      cols.back().values.reserve(static_cast<std::size_t>(cfg.replications));
    }
    for (auto& c : cols)
      if (c.name == name) {
        c.values.push_back(v);
        return;
      }
    throw std::logic_error("statistic set changed between replications");
  };
  push("rho", static_cast<double>(ck.rho));
  if (cfg.collect.generators) {
    push("gamma", static_cast<double>(ck.gamma));
    for (int k = 1; k <= cfg.d; ++k)
      push("gamma_dim_" + std::to_string(k),
           static_cast<double>(ck.gamma_by_dim[static_cast<std::size_t>(k)]));
  }
  push("f_plus", ck.f_plus);
  push("hf_minus", ck.hf_minus);
  if (cfg.collect.generators) push("f_minus", ck.f_minus);
  if (!std::isnan(ck.hf_centered)) push("hf_centered", ck.hf_centered);
  if (ck.rho_trunc >= 0) push("rho_trunc", static_cast<double>(ck.rho_trunc));
  if (ck.gamma_trunc >= 0) push("gamma_trunc", static_cast<double>(ck.gamma_trunc));
  if (ck.r_n_a) push("r_n_a", *ck.r_n_a);
}

}  // namespace

AggregateSummary run_experiment_range(const SimulationConfig& config, std::uint64_t rep_lo,
                                      std::uint64_t rep_hi, int threads) {
  config.validate();
  if (rep_lo >= rep_hi) throw std::invalid_argument("run_experiment_range: empty range");
  if (threads < 1) threads = 1;
  const std::uint64_t count = rep_hi - rep_lo;

  std::vector<ReplicationResult> slots(count);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::string error_message;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count || failed.load()) break;
      try {
        slots[i] = run_replication(config, rep_lo + i);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true))
          error_message = "replication " + std::to_string(rep_lo + i) + ": " + e.what();
        break;
      }
    }
  };

  if (threads == 1 || count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                                                               count)) -
                      1;
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::runtime_error("run_experiment: " + error_message);

  AggregateSummary out;
  out.config = config;
  out.replications_consumed = count;

  const std::size_t n_ck = config.n_checkpoints.size();
  for (std::size_t ci = 0; ci < n_ck; ++ci) {
    std::vector<StatColumn> cols;
    for (std::uint64_t i = 0; i < count; ++i)
      emit_stats(config, slots[i].checkpoints[ci], cols, i == 0);
    CheckpointAggregate agg;
    agg.n = config.n_checkpoints[ci];
    agg.b_n = slots[0].checkpoints[ci].b_n;
    for (auto& c : cols)
      agg.stats.emplace_back(std::move(c.name), StatAggregate::from_samples(std::move(c.values)));
    out.checkpoints.push_back(std::move(agg));
  }
  for (const auto& rep : slots) {
    out.ordering_violations += rep.ordering_violations;
    out.f_monotonicity_violations += rep.f_monotonicity_violations;
    out.hf_monotonicity_violations += rep.hf_monotonicity_violations;
  }
  return out;
}

AggregateSummary run_experiment(const SimulationConfig& config, int threads) {
  config.validate();
  return run_experiment_range(config, 0, static_cast<std::uint64_t>(config.replications), threads);
}

namespace {

bool same_shape(const SimulationConfig& a, const SimulationConfig& b) {
  bool boundary_same = (!a.boundary && !b.boundary) ||
                       (a.boundary && b.boundary && a.boundary->form == b.boundary->form &&
                        a.boundary->value == b.boundary->value);
  return a.d == b.d && a.n_checkpoints == b.n_checkpoints && a.master_seed == b.master_seed &&
         boundary_same && a.collect.generators == b.collect.generators &&
         a.collect.truncated == b.collect.truncated &&
         a.collect.path_audits == b.collect.path_audits && a.ties == b.ties;
}

}  // namespace

AggregateSummary merge(const AggregateSummary& a, const AggregateSummary& b) {
  if (!same_shape(a.config, b.config))
    throw std::invalid_argument("merge: summaries have different shapes");
  if (a.replications_consumed == 0) return b;
  if (b.replications_consumed == 0) return a;
  if (a.checkpoints.size() != b.checkpoints.size())
    throw std::invalid_argument("merge: summaries have different shapes");
  AggregateSummary out;
  out.config = a.config;
  out.replications_consumed = a.replications_consumed + b.replications_consumed;
  out.ordering_violations = a.ordering_violations + b.ordering_violations;
  out.f_monotonicity_violations = a.f_monotonicity_violations + b.f_monotonicity_violations;
  out.hf_monotonicity_violations = a.hf_monotonicity_violations + b.hf_monotonicity_violations;
  for (std::size_t ci = 0; ci < a.checkpoints.size(); ++ci) {
    const auto& ca = a.checkpoints[ci];
    const auto& cb = b.checkpoints[ci];
    if (ca.n != cb.n || ca.stats.size() != cb.stats.size())
      throw std::invalid_argument("merge: summaries have different shapes");
    CheckpointAggregate m;
    m.n = ca.n;
    m.b_n = ca.b_n;
    for (std::size_t si = 0; si < ca.stats.size(); ++si) {
      if (ca.stats[si].first != cb.stats[si].first)
        throw std::invalid_argument("merge: summaries have different statistics");
      m.stats.emplace_back(ca.stats[si].first,
                           StatAggregate::merged(ca.stats[si].second, cb.stats[si].second));
    }
    out.checkpoints.push_back(std::move(m));
  }
  return out;
}

VarianceReport variance_vs_mean_report(const AggregateSummary& summary,
                                       std::int64_t checkpoint_n) {
  const CheckpointAggregate& ck = summary.checkpoint(checkpoint_n);
  const StatAggregate& stat = ck.at("rho_trunc");
  if (stat.count() < 1000)
    throw std::invalid_argument("variance_vs_mean_report: needs at least 10^3 replications");
  const std::vector<double>& x = stat.samples();
  const auto n = static_cast<double>(x.size());

  VarianceReport r;
  r.mean_hat = stat.mean();
  r.var_hat = stat.variance();
  r.ratio = r.mean_hat == 0.0 ? 0.0 : r.var_hat / r.mean_hat;

  // jackknife over replications
  double s1 = 0.0, s2 = 0.0;
  for (double v : x) {
    s1 += v;
    s2 += v * v;
  }
  std::vector<double> jm(x.size()), jv(x.size()), jr(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double m = (s1 - x[i]) / (n - 1.0);
    double ss = s2 - x[i] * x[i];
    double var = (ss - (n - 1.0) * m * m) / (n - 2.0);
    jm[i] = m;
    jv[i] = var;
    jr[i] = m == 0.0 ? 0.0 : var / m;
  }
  auto jack_se = [&](const std::vector<double>& th) {
    double mean = 0.0;
    for (double v : th) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : th) ss += (v - mean) * (v - mean);
    return std::sqrt((n - 1.0) / n * ss);
  };
  r.se_mean = jack_se(jm);
  r.se_var = jack_se(jv);
  r.se_ratio = jack_se(jr);
  return r;
}

}  // namespace recfront
