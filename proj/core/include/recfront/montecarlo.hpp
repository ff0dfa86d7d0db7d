#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "recfront/asymptotics.hpp"
#include "recfront/point.hpp"
#include "recfront/record_set.hpp"
#include "recfront/statistics.hpp"

namespace recfront {

struct CollectFlags {
  bool generators = true;   // gamma, gamma by dimension, F-, trailing point
  bool truncated = true;    // rho(b_n), gamma(b_n); needs a boundary
  bool path_audits = true;  // ordering and monotonicity violation counting
};

struct SimulationConfig {
  int d = 2;
  std::vector<std::int64_t> n_checkpoints;  // strictly increasing, >= 1
  std::int64_t replications = 1;
  std::uint64_t master_seed = 0;
  std::optional<BoundarySpec> boundary;
  CollectFlags collect;
  TiePolicy ties = TiePolicy::Strict;

  void validate() const;  // throws std::invalid_argument
};

// One replication's snapshot at one checkpoint.
struct CheckpointResult {
  std::int64_t n = 0;
  std::uint64_t rho = 0;
  std::uint64_t gamma = 0;
  std::vector<std::uint64_t> gamma_by_dim;  // size d+1; empty if not collected
  double f_plus = 0.0;
  double hf_minus = 0.0;  // min record coordinate-sum
  double f_minus = std::numeric_limits<double>::quiet_NaN();  // min generator sum
  std::vector<double> leading;   // argmax record (lambda)
  std::vector<double> trailing;  // argmin generator (tau); empty if not collected
  // boundary-dependent values; b_n is NaN when no boundary applies at this n
  double b_n = std::numeric_limits<double>::quiet_NaN();
  std::int64_t rho_trunc = -1;
  std::int64_t gamma_trunc = -1;
  std::optional<double> r_n_a;  // rho(b_n) under the a-form boundary
  // (L2 n)(hf_minus - trailing_center), the conjectured-limit diagnostic
  double hf_centered = std::numeric_limits<double>::quiet_NaN();
};

struct ReplicationResult {
  std::uint64_t rep_index = 0;
  std::vector<CheckpointResult> checkpoints;
  std::uint64_t ordering_violations = 0;        // F- <= hF- <= F+ failures
  std::uint64_t f_monotonicity_violations = 0;  // F- nondecreasing failures
  // hF- dips happen on real paths (a new record may undercut every current
  // record's sum); counted separately so reports can attribute them
  std::uint64_t hf_monotonicity_violations = 0;
};

struct CheckpointAggregate {
  std::int64_t n = 0;
  double b_n = std::numeric_limits<double>::quiet_NaN();
  // fixed emission order: rho, gamma, gamma_dim_k, f_plus, hf_minus, f_minus,
  // hf_centered, rho_trunc, gamma_trunc, r_n_a (as collected)
  std::vector<std::pair<std::string, StatAggregate>> stats;

  [[nodiscard]] const StatAggregate* find(std::string_view name) const;
  // throwing variant for required statistics
  [[nodiscard]] const StatAggregate& at(std::string_view name) const;
};

struct AggregateSummary {
  SimulationConfig config;  // replications = total configured, not consumed
  std::uint64_t replications_consumed = 0;
  std::vector<CheckpointAggregate> checkpoints;
  std::uint64_t ordering_violations = 0;
  std::uint64_t f_monotonicity_violations = 0;
  std::uint64_t hf_monotonicity_violations = 0;

  [[nodiscard]] const CheckpointAggregate& checkpoint(std::int64_t n) const;
};

// d independent Exp(1) coordinates.
Point sample_point(std::mt19937_64& stream, int d);

// Streams n observations through a RecordSet, snapshotting at each
// checkpoint; the stream is derived from (master_seed, rep_index) only.
ReplicationResult run_replication(const SimulationConfig& config, std::uint64_t rep_index);

// Replications [rep_lo, rep_hi) mapped across `threads` workers and folded
// in replication order, so the result is independent of the worker count.
AggregateSummary run_experiment_range(const SimulationConfig& config, std::uint64_t rep_lo,
                                      std::uint64_t rep_hi, int threads = 1);

AggregateSummary run_experiment(const SimulationConfig& config, int threads = 1);

// Shape-checked combination (same config apart from replication count).
AggregateSummary merge(const AggregateSummary& a, const AggregateSummary& b);

struct VarianceReport {
  double mean_hat = 0.0;
  double var_hat = 0.0;
  double ratio = 0.0;  // var/mean; 0 when mean is 0
  double se_mean = 0.0;
  double se_var = 0.0;
  double se_ratio = 0.0;  // jackknife standard errors
};

// Jackknife mean/variance/ratio report for rho(b_n) at the given checkpoint.
// Requires raw samples and at least 10^3 replications.
VarianceReport variance_vs_mean_report(const AggregateSummary& summary, std::int64_t checkpoint_n);

}  // namespace recfront
