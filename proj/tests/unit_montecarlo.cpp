#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "recfront/montecarlo.hpp"
#include "recfront/rng.hpp"
#include "recfront/statistics.hpp"

using namespace recfront;

namespace {
SimulationConfig base_config() {
  SimulationConfig cfg;
  cfg.d = 3;
  cfg.n_checkpoints = {50, 200};
  cfg.replications = 48;
  cfg.master_seed = 11;
  return cfg;
}
}  // namespace

TEST_CASE("exponential sampler moments and tail") {
  auto eng = replication_engine(1, 0);
  const int n = 1000000;
  double sum = 0.0, tail = 0.0;
  double lo = 1e300;
  for (int i = 0; i < n; ++i) {
    const double v = sample_exponential(eng);
    sum += v;
    if (v > 2.0) tail += 1.0;
    lo = std::min(lo, v);
  }
  CHECK(sum / n == doctest::Approx(1.0).epsilon(3e-3));
  // P(X > 2) = e^{-2}; allow 3 binomial SEs
  const double p = std::exp(-2.0);
  CHECK(std::abs(tail / n - p) < 3 * std::sqrt(p * (1 - p) / n));
  CHECK(lo > 0.0);  // draws are strictly positive
}

TEST_CASE("replication streams are deterministic and decorrelated") {
  auto a1 = replication_engine(42, 7);
  auto a2 = replication_engine(42, 7);
  CHECK(a1() == a2());
  CHECK(replication_seed(42, 7) != replication_seed(42, 8));
  CHECK(replication_seed(42, 7) != replication_seed(43, 7));

  const Point p1 = sample_point(a1, 4);
  CHECK(p1.dim() == 4);
  const ReplicationResult r1 = run_replication(base_config(), 3);
  const ReplicationResult r2 = run_replication(base_config(), 3);
  CHECK(r1.checkpoints.size() == 2);
  CHECK(r1.checkpoints[1].rho == r2.checkpoints[1].rho);
  CHECK(r1.checkpoints[1].f_plus == r2.checkpoints[1].f_plus);
}

TEST_CASE("checkpoint snapshots carry the path statistics") {
  SimulationConfig cfg = base_config();
  cfg.boundary = BoundarySpec::c_form(2.0);
  const ReplicationResult r = run_replication(cfg, 0);
  for (const CheckpointResult& ck : r.checkpoints) {
    CHECK(ck.gamma == 2 * ck.rho + 1);  // d=3 identity
    CHECK(ck.f_minus <= ck.hf_minus);
    CHECK(ck.hf_minus <= ck.f_plus);
    CHECK(std::accumulate(ck.gamma_by_dim.begin(), ck.gamma_by_dim.end(), std::uint64_t{0}) ==
          ck.gamma);
    CHECK(ck.leading.size() == 3);
    if (ck.n >= 16) {
      CHECK(std::isfinite(ck.b_n));
      CHECK(ck.rho_trunc >= 0);
      CHECK(ck.gamma_trunc >= 0);
    }
  }
  CHECK(r.ordering_violations == 0);
  CHECK(r.f_monotonicity_violations == 0);
  // hF- may legitimately dip when a new record undercuts every current
  // record's sum; bounded by the number of checkpoint transitions
  CHECK(r.hf_monotonicity_violations < r.checkpoints.size());
}

TEST_CASE("aggregation is bit-identical for any worker count") {
  SimulationConfig cfg = base_config();
  cfg.boundary = BoundarySpec::c_form(2.0);
  const AggregateSummary s1 = run_experiment(cfg, 1);
  const AggregateSummary s4 = run_experiment(cfg, 4);
  const AggregateSummary s16 = run_experiment(cfg, 16);
  REQUIRE(s1.checkpoints.size() == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    REQUIRE(s1.checkpoints[c].stats.size() == s4.checkpoints[c].stats.size());
    for (std::size_t i = 0; i < s1.checkpoints[c].stats.size(); ++i) {
      const auto& [name, agg] = s1.checkpoints[c].stats[i];
      CHECK(name == s4.checkpoints[c].stats[i].first);
      CHECK(agg.mean() == s4.checkpoints[c].stats[i].second.mean());
      CHECK(agg.mean() == s16.checkpoints[c].stats[i].second.mean());
      CHECK(agg.variance() == s16.checkpoints[c].stats[i].second.variance());
      CHECK(agg.quantile(0.5) == s16.checkpoints[c].stats[i].second.quantile(0.5));
    }
  }
}

TEST_CASE("merge: identity, commutativity, and split-equals-whole") {
  SimulationConfig cfg = base_config();
  const AggregateSummary whole = run_experiment(cfg, 2);
  const AggregateSummary lo = run_experiment_range(cfg, 0, 17, 2);
  const AggregateSummary hi = run_experiment_range(cfg, 17, 48, 2);

  const AggregateSummary m1 = merge(lo, hi);
  const AggregateSummary m2 = merge(hi, lo);
  AggregateSummary empty;
  empty.config = cfg;
  const AggregateSummary m3 = merge(whole, empty);

  REQUIRE(m1.replications_consumed == 48);
  for (std::size_t c = 0; c < whole.checkpoints.size(); ++c)
    for (std::size_t i = 0; i < whole.checkpoints[c].stats.size(); ++i) {
      const StatAggregate& w = whole.checkpoints[c].stats[i].second;
      const StatAggregate& a = m1.checkpoints[c].stats[i].second;
      const StatAggregate& b = m2.checkpoints[c].stats[i].second;
      const StatAggregate& d = m3.checkpoints[c].stats[i].second;
      CHECK(a.mean() == w.mean());
      CHECK(a.variance() == w.variance());
      CHECK(a.quantile(0.05) == w.quantile(0.05));
      CHECK(b.mean() == w.mean());
      CHECK(b.variance() == w.variance());
      CHECK(d.mean() == w.mean());
      CHECK(d.count() == w.count());
    }

  SimulationConfig other = cfg;
  other.d = 2;
  AggregateSummary bad;
  bad.config = other;
  CHECK_THROWS_AS((void)merge(whole, bad), std::invalid_argument);
}

TEST_CASE("pooled mean and variance against a direct oracle") {
  // 1000 synthetic values pooled from two halves of different sizes
  std::vector<double> all(1000);
  auto eng = replication_engine(5, 5);
  for (double& v : all) v = sample_exponential(eng) * 3.0 + 1.0;
  const std::vector<double> left(all.begin(), all.begin() + 400);
  const std::vector<double> right(all.begin() + 400, all.end());

  const StatAggregate merged =
      StatAggregate::merged(StatAggregate::from_samples(left), StatAggregate::from_samples(right));
  const StatAggregate direct = StatAggregate::from_samples(all);

  CHECK(merged.count() == 1000);
  CHECK(merged.mean() == direct.mean());
  CHECK(merged.variance() == direct.variance());
  CHECK(merged.min() == direct.min());
  CHECK(merged.max() == direct.max());
  for (const double p : {0.05, 0.5, 0.95}) CHECK(merged.quantile(p) == direct.quantile(p));

  // classic pooled-variance formula as an independent cross-check
  const double n1 = 400, n2 = 600;
  const double m1 = std::accumulate(left.begin(), left.end(), 0.0) / n1;
  const double m2 = std::accumulate(right.begin(), right.end(), 0.0) / n2;
  double s1 = 0, s2 = 0;
  for (const double v : left) s1 += (v - m1) * (v - m1);
  for (const double v : right) s2 += (v - m2) * (v - m2);
  const double pooled_mean = (n1 * m1 + n2 * m2) / (n1 + n2);
  const double pooled_var =
      (s1 + s2 + n1 * n2 / (n1 + n2) * (m1 - m2) * (m1 - m2)) / (n1 + n2 - 1);
  CHECK(merged.mean() == doctest::Approx(pooled_mean).epsilon(1e-12));
  CHECK(merged.variance() == doctest::Approx(pooled_var).epsilon(1e-10));
}

TEST_CASE("grid sketch keeps moments when samples overflow the full-sample cap") {
  std::vector<double> a(60000), b(70000);
  auto eng = replication_engine(6, 6);
  for (double& v : a) v = sample_exponential(eng);
  for (double& v : b) v = 2.0 + sample_exponential(eng);
  const StatAggregate ga = StatAggregate::from_samples(a);
  const StatAggregate gb = StatAggregate::from_samples(b);
  CHECK_FALSE(ga.gridded());
  const StatAggregate m = StatAggregate::merged(ga, gb);
  CHECK(m.gridded());
  CHECK(m.count() == 130000);

  std::vector<double> all;
  all.insert(all.end(), a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  const double mean = std::accumulate(all.begin(), all.end(), 0.0) / all.size();
  double m2 = 0;
  for (const double v : all) m2 += (v - mean) * (v - mean);
  CHECK(m.mean() == doctest::Approx(mean).epsilon(1e-12));
  CHECK(m.variance() == doctest::Approx(m2 / (all.size() - 1)).epsilon(1e-10));
  std::sort(all.begin(), all.end());
  CHECK(m.quantile(0.5) == doctest::Approx(all[all.size() / 2]).epsilon(2e-2));
  CHECK(m.min() == all.front());
  CHECK(m.max() == all.back());

  // gridded merge is exactly commutative
  const StatAggregate mc = StatAggregate::merged(gb, ga);
  CHECK(m.mean() == mc.mean());
  CHECK(m.variance() == mc.variance());
  CHECK(m.quantile(0.25) == mc.quantile(0.25));
}

TEST_CASE("empirical means track exact expectations at modest scale") {
  SimulationConfig cfg;
  cfg.d = 2;
  cfg.n_checkpoints = {100};
  cfg.replications = 4000;
  cfg.master_seed = 77;
  const AggregateSummary s = run_experiment(cfg, 2);
  const StatAggregate& rho = s.checkpoint(100).at("rho");
  // E rho_{2,100} = H_100 = 5.187377...
  const double se = std::sqrt(rho.variance() / static_cast<double>(rho.count()));
  CHECK(std::abs(rho.mean() - 5.1873775176) < 4 * se);
  const StatAggregate& gamma = s.checkpoint(100).at("gamma");
  CHECK(gamma.mean() == rho.mean() + 1.0);  // path identity survives averaging
}

TEST_CASE("variance report prerequisites and degenerate boundary") {
  SimulationConfig cfg = base_config();
  cfg.boundary = BoundarySpec::c_form(2.0);
  const AggregateSummary s = run_experiment(cfg, 1);
  // too few replications
  CHECK_THROWS_AS((void)variance_vs_mean_report(s, 200), std::invalid_argument);

  // enormous c pushes b_n to 0: every truncated count is zero
  SimulationConfig zero = base_config();
  zero.n_checkpoints = {200};
  zero.replications = 1200;
  zero.boundary = BoundarySpec::c_form(150.0);
  const AggregateSummary sz = run_experiment(zero, 2);
  const VarianceReport vr = variance_vs_mean_report(sz, 200);
  CHECK(vr.mean_hat == 0.0);
  CHECK(vr.var_hat == 0.0);
  CHECK(vr.ratio == 0.0);
}

TEST_CASE("config validation") {
  SimulationConfig cfg = base_config();
  cfg.d = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config();
  cfg.n_checkpoints = {100, 100};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config();
  cfg.n_checkpoints = {};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = base_config();
  cfg.replications = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
