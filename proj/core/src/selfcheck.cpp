#include "recfront/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "recfront/asymptotics.hpp"
#include "recfront/exact_expectations.hpp"
#include "recfront/generators.hpp"
#include "recfront/montecarlo.hpp"
#include "recfront/rational.hpp"
#include "recfront/record_set.hpp"
#include "recfront/reporting.hpp"
#include "recfront/rng.hpp"
#include "recfront/special_functions.hpp"

namespace recfront {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// Direct alternating-binomial evaluation of the Roman harmonic number,
// used only as an oracle against the recurrence path.
ExactRational roman_alternating(std::int64_t n, int k) {
  ExactRational sum = 0;
  for (std::int64_t j = 1; j <= n; ++j) {
    ExactInt denom = 1;
    for (int i = 0; i < k; ++i) denom *= j;
    const ExactRational term(binomial_exact(n, j), denom);
    if (j % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

struct Suite {
  std::uint64_t seed;
  std::ostream* progress;
  // ordering / monotonicity totals across the experiments of criteria 3-7
  std::uint64_t audit_ordering = 0;
  std::uint64_t audit_monotonic_f = 0;
  std::uint64_t audit_monotonic_hf = 0;

  std::uint64_t criterion_seed(int index) const { return mix64(seed + static_cast<std::uint64_t>(index)); }

  CriterionResult c1() const {
    CriterionResult r{1, "worked-example generator set (d=4, two records)", false, 0.0, ""};
    RecordSet rs(4);
    rs.insert(Point({2, 8, 3, 7}));
    rs.insert(Point({5, 1, 4, 6}));

    const auto t0 = Clock::now();
    const GeneratorSet gs = all_generators(rs);
    r.seconds = seconds_since(t0);

    GeneratorSet expected(4, rs.epoch());
    expected.add(0x1u, Point({5, 0, 0, 0}));
    expected.add(0x2u, Point({0, 8, 0, 0}));
    expected.add(0x4u, Point({0, 0, 4, 0}));
    expected.add(0x8u, Point({0, 0, 0, 7}));
    expected.add(0x3u, Point({2, 1, 0, 0}));
    expected.add(0x9u, Point({2, 0, 0, 6}));
    expected.add(0x6u, Point({0, 1, 3, 0}));
    expected.add(0xCu, Point({0, 0, 3, 6}));

    const std::vector<std::size_t> want_dims{0, 4, 4, 0, 0};
    const bool match = gs == expected && gs.counts_by_dimension() == want_dims;
    r.passed = match && r.seconds < 1e-3;
    r.detail = fmt("gamma=%zu dims=%zu/%zu/%zu match=%s (budget 1 ms)", gs.gamma(),
                   gs.counts_by_dimension()[1], gs.counts_by_dimension()[2],
                   gs.counts_by_dimension()[3], match ? "yes" : "NO");
    return r;
  }

  CriterionResult c2() const {
    CriterionResult r{2, "generator enumeration matches brute force on random instances", false,
                      0.0, ""};
    const auto t0 = Clock::now();
    const int cases[3][2] = {{2, 100}, {3, 60}, {4, 40}};
    int instances = 0;
    int mismatches = 0;
    std::string first_bad;
    for (const auto& [d, n_max] : cases) {
      for (int i = 0; i < 500; ++i) {
        auto eng = replication_engine(criterion_seed(2) ^ (static_cast<std::uint64_t>(d) << 56),
                                      static_cast<std::uint64_t>(i));
        const int n = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(n_max));
        RecordSet rs(static_cast<std::size_t>(d));
        for (int j = 0; j < n; ++j) rs.insert(sample_point(eng, d));
        const GeneratorSet fast = all_generators(rs);
        const GeneratorSet oracle = brute_force_generators(rs);
        ++instances;
        if (!(fast == oracle)) {
          ++mismatches;
          if (first_bad.empty()) first_bad = fmt(" first at d=%d instance=%d n=%d", d, i, n);
        }
      }
    }
    r.seconds = seconds_since(t0);
    r.passed = mismatches == 0 && r.seconds < 120.0;
    r.detail = fmt("%d instances, %d mismatches%s (budget 120 s)", instances, mismatches,
                   first_bad.c_str());
    return r;
  }

  CriterionResult c3() {
    CriterionResult r{3, "gamma-rho identities hold on every sample path", false, 0.0, ""};
    const auto t0 = Clock::now();
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    for (const int d : {2, 3}) {
      SimulationConfig cfg;
      cfg.d = d;
      cfg.n_checkpoints = {100, 1000, 10000};
      cfg.replications = 1000;
      cfg.master_seed = criterion_seed(3) + static_cast<std::uint64_t>(d);
      for (std::uint64_t rep = 0; rep < 1000; ++rep) {
        const ReplicationResult rr = run_replication(cfg, rep);
        audit_ordering += rr.ordering_violations;
        audit_monotonic_f += rr.f_monotonicity_violations;
        audit_monotonic_hf += rr.hf_monotonicity_violations;
        for (const CheckpointResult& ck : rr.checkpoints) {
          ++checked;
          const std::uint64_t want = d == 2 ? ck.rho + 1 : 2 * ck.rho + 1;
          if (ck.gamma != want) ++violations;
        }
      }
    }
    r.seconds = seconds_since(t0);
    r.passed = violations == 0 && r.seconds < 120.0;
    r.detail = fmt("%llu checkpoints, %llu identity violations (budget 120 s)",
                   static_cast<unsigned long long>(checked),
                   static_cast<unsigned long long>(violations));
    return r;
  }

  CriterionResult c4() const {
    CriterionResult r{4, "exact-formula concordance (recurrence, quadrature, truncated mean)",
                      false, 0.0, ""};
    const auto t0 = Clock::now();
    int roman_bad = 0;
    for (std::int64_t n = 1; n <= 25; ++n)
      for (int k = 0; k <= 5; ++k)
        if (roman_harmonic(n, k) != roman_alternating(n, k)) ++roman_bad;

    double worst_iota = 0.0;
    for (int d = 1; d <= 4; ++d)
      for (std::int64_t n = d; n <= 50; ++n) {
        const double exact = to_double(expected_iota_exact(d, n));
        const double quad = iota_quadrature(d, n).value;
        worst_iota = std::max(worst_iota, std::abs(quad / exact - 1.0));
      }

    double worst_rho = 0.0;
    const double inf = std::numeric_limits<double>::infinity();
    for (int d = 1; d <= 4; ++d)
      for (std::int64_t n = 1; n <= 200; ++n) {
        const double exact = to_double(expected_rho_exact(d, n));
        const double quad = expected_rho_truncated(d, n, inf).value;
        worst_rho = std::max(worst_rho, std::abs(quad / exact - 1.0));
      }

    r.seconds = seconds_since(t0);
    r.passed = roman_bad == 0 && worst_iota <= 1e-8 && worst_rho <= 1e-8 && r.seconds < 60.0;
    r.detail = fmt("roman mismatches=%d, worst iota relerr=%.2e, worst rho relerr=%.2e "
                   "(tol 1e-8, budget 60 s)",
                   roman_bad, worst_iota, worst_rho);
    return r;
  }

  CriterionResult c5() {
    CriterionResult r{5, "Monte Carlo means match exact expectations (3 SE)", false, 0.0, ""};
    const auto t0 = Clock::now();
    const int cases[4][2] = {{2, 100}, {3, 100}, {3, 1000}, {4, 1000}};
    bool ok = true;
    std::ostringstream det;
    det << std::setprecision(3);
    for (const auto& [d, n] : cases) {
      SimulationConfig cfg;
      cfg.d = d;
      cfg.n_checkpoints = {n};
      cfg.replications = 10000;
      cfg.master_seed = criterion_seed(5) + static_cast<std::uint64_t>(16 * d + n);
      cfg.collect.truncated = false;
      const AggregateSummary s = run_experiment(cfg);
      audit_ordering += s.ordering_violations;
      audit_monotonic_f += s.f_monotonicity_violations;
      audit_monotonic_hf += s.hf_monotonicity_violations;
      const auto& ck = s.checkpoint(n);
      const struct {
        const char* stat;
        double exact;
      } targets[2] = {{"rho", expected_rho_value(d, n)}, {"gamma", expected_gamma_value(d, n)}};
      for (const auto& t : targets) {
        const StatAggregate& a = ck.at(t.stat);
        const double se = std::sqrt(a.variance() / static_cast<double>(a.count()));
        const double dev = std::abs(a.mean() - t.exact);
        const bool pass = dev <= 3.0 * se;
        ok = ok && pass;
        det << (pass ? "" : "FAIL ") << t.stat << "(" << d << "," << n << ") dev/SE="
            << (se > 0 ? dev / se : 0.0) << "; ";
      }
    }
    r.seconds = seconds_since(t0);
    r.passed = ok && r.seconds < 300.0;
    r.detail = det.str() + "(budget 300 s)";
    return r;
  }

  CriterionResult c6() {
    CriterionResult r{6, "empirical threshold probability within expectation bound (3 SE)", false,
                      0.0, ""};
    const auto t0 = Clock::now();
    SimulationConfig cfg;
    cfg.d = 3;
    cfg.n_checkpoints = {100000};
    cfg.replications = 10000;
    cfg.master_seed = criterion_seed(6);
    cfg.collect.generators = false;
    cfg.collect.truncated = false;
    const AggregateSummary s = run_experiment(cfg);
    audit_ordering += s.ordering_violations;
    audit_monotonic_f += s.f_monotonicity_violations;
    audit_monotonic_hf += s.hf_monotonicity_violations;
    const std::vector<double>& hf = s.checkpoint(100000).at("hf_minus").samples();

    bool ok = true;
    std::ostringstream det;
    det << std::setprecision(4);
    for (const double c : {2.0, 3.0}) {
      const double b = boundary_eval(BoundarySpec::c_form(c), 3, 1e5).b;
      const double R = static_cast<double>(hf.size());
      const double p_hat =
          static_cast<double>(std::upper_bound(hf.begin(), hf.end(), b) - hf.begin()) / R;
      const double bound = expected_rho_truncated(3, 100000, b).value;
      const double se = std::sqrt(p_hat * (1.0 - p_hat) / R);
      const bool pass = p_hat <= bound + 3.0 * se;
      ok = ok && pass;
      det << (pass ? "" : "FAIL ") << "c=" << c << ": p_hat=" << p_hat << " bound=" << bound
          << "+3*" << se << "; ";
    }
    r.seconds = seconds_since(t0);
    r.passed = ok && r.seconds < 300.0;
    r.detail = det.str() + "(budget 300 s)";
    return r;
  }

  CriterionResult c7() {
    CriterionResult r{7, "variance-to-mean ratio of truncated record count in [0.8, 1.2]", false,
                      0.0, ""};
    const auto t0 = Clock::now();
    SimulationConfig cfg;
    cfg.d = 3;
    cfg.n_checkpoints = {100000};
    cfg.replications = 20000;
    cfg.master_seed = criterion_seed(7);
    cfg.boundary = BoundarySpec::c_form(2.0);
    cfg.collect.generators = false;
    const AggregateSummary s = run_experiment(cfg);
    audit_ordering += s.ordering_violations;
    audit_monotonic_f += s.f_monotonicity_violations;
    audit_monotonic_hf += s.hf_monotonicity_violations;
    const VarianceReport vr = variance_vs_mean_report(s, 100000);
    r.seconds = seconds_since(t0);
    const bool ok = vr.ratio >= 0.8 && vr.ratio <= 1.2;
    r.passed = ok && r.seconds < 600.0;
    r.detail = fmt("mean=%.4f var=%.4f ratio=%.4f (se %.4f), window [0.8, 1.2] (budget 600 s)",
                   vr.mean_hat, vr.var_hat, vr.ratio, vr.se_ratio);
    return r;
  }

  CriterionResult c8() const {
    CriterionResult r{8, "asymptotic coefficients and improving relative error", false, 0.0, ""};
    const auto t0 = Clock::now();
    double worst_a0 = 0.0;
    for (int d = 1; d <= 8; ++d) worst_a0 = std::max(worst_a0, std::abs(a_coefficient(d, 0) - 1.0));
    const double a21_err = std::abs(a_coefficient(2, 1) - (1.0 + kEulerGamma));

    bool decreasing = true;
    std::ostringstream det;
    det << std::setprecision(3);
    for (const int d : {2, 3, 4}) {
      const auto relerr = [d](double n) {
        return std::abs(expected_gamma_asymptotic(d, n) /
                            expected_gamma_value(d, static_cast<std::int64_t>(n)) -
                        1.0);
      };
      const double coarse = relerr(1e3);
      const double fine = relerr(1e6);
      decreasing = decreasing && fine < coarse;
      det << "d=" << d << ": " << coarse << " -> " << fine << "; ";
    }
    r.seconds = seconds_since(t0);
    r.passed = worst_a0 <= 1e-12 && a21_err <= 1e-10 && decreasing && r.seconds < 60.0;
    r.detail = fmt("max|a_{d,0}-1|=%.1e, |a_{2,1}-(1+g)|=%.1e, relerr ", worst_a0, a21_err) +
               det.str() + "(budget 60 s)";
    return r;
  }

  CriterionResult c9() const {
    CriterionResult r{9, "bit-identical summaries across 1, 4, and 16 workers", false, 0.0, ""};
    const auto t0 = Clock::now();
    SimulationConfig cfg;
    cfg.d = 3;
    cfg.n_checkpoints = {100, 1000, 10000};
    cfg.replications = 200;
    cfg.master_seed = criterion_seed(9);
    cfg.boundary = BoundarySpec::c_form(2.0);
    const std::string j1 = summary_to_json(run_experiment(cfg, 1));
    const std::string j4 = summary_to_json(run_experiment(cfg, 4));
    const std::string j16 = summary_to_json(run_experiment(cfg, 16));
    r.seconds = seconds_since(t0);
    const bool ok = j1 == j4 && j4 == j16;
    r.passed = ok && r.seconds < 120.0;
    r.detail = fmt("json bytes=%zu, 1==4: %s, 4==16: %s (budget 120 s)", j1.size(),
                   j1 == j4 ? "yes" : "NO", j4 == j16 ? "yes" : "NO");
    return r;
  }

  CriterionResult c10() const {
    CriterionResult r{10, "path ordering and monotonicity audits clean", false, 0.0, ""};
    r.passed = audit_ordering == 0 && audit_monotonic_f == 0 && audit_monotonic_hf == 0;
    r.detail = fmt("ordering=%llu, F- dips=%llu, hF- dips=%llu across criteria 3-7",
                   static_cast<unsigned long long>(audit_ordering),
                   static_cast<unsigned long long>(audit_monotonic_f),
                   static_cast<unsigned long long>(audit_monotonic_hf));
    return r;
  }
};

}  // namespace

SelfCheckReport run_acceptance_suite(std::uint64_t master_seed, std::ostream* progress) {
  Suite suite{master_seed, progress};
  SelfCheckReport report;
  report.all_passed = true;

  const auto emit = [&](CriterionResult r) {
    if (progress)
      *progress << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.index << ": " << r.name
                << "  [" << std::fixed << std::setprecision(r.seconds < 0.01 ? 5 : 2) << r.seconds
                << " s]  " << r.detail << "\n"
                << std::defaultfloat << std::flush;
    report.all_passed = report.all_passed && r.passed;
    report.criteria.push_back(std::move(r));
  };

  emit(suite.c1());
  emit(suite.c2());
  emit(suite.c3());
  emit(suite.c4());
  emit(suite.c5());
  emit(suite.c6());
  emit(suite.c7());
  emit(suite.c8());
  emit(suite.c9());
  emit(suite.c10());
  return report;
}

}  // namespace recfront
