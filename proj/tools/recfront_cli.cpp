// recfront: command line driver for record-frontier experiments.
//
// Subcommands:
//   simulate  run a seeded Monte Carlo experiment, write CSV + JSON
//   exact     tabulate exact expected counts (and truncated means)
//   asympt    tabulate asymptotic coefficients, centerings, and bounds
//   check     run the acceptance suite; exit 0 iff every criterion passes
//   plot      render SVG plots (d=2 frontier, exact-vs-asymptotic curves)
//
// Exit codes: 0 success, 1 usage error, 2 acceptance failure,
// 3 runtime diagnostic (ties, quadrature failures).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recfront/asymptotics.hpp"
#include "recfront/exact_expectations.hpp"
#include "recfront/generators.hpp"
#include "recfront/montecarlo.hpp"
#include "recfront/rational.hpp"
#include "recfront/record_set.hpp"
#include "recfront/reporting.hpp"
#include "recfront/rng.hpp"
#include "recfront/selfcheck.hpp"
#include "recfront/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace recfront;

namespace {

// --n accepts plain integers (repeatable) or logspace:<lo>:<hi>:<count>,
// which expands to geometrically spaced values (deduplicated, sorted).
std::vector<std::int64_t> parse_n_values(const std::vector<std::string>& specs) {
  std::vector<std::int64_t> out;
  for (const std::string& s : specs) {
    if (s.rfind("logspace:", 0) == 0) {
      double lo = 0, hi = 0;
      long long count = 0;
      if (std::sscanf(s.c_str(), "logspace:%lf:%lf:%lld", &lo, &hi, &count) != 3 || lo < 1 ||
          hi < lo || count < 2)
        throw CLI::ValidationError("--n", "expected logspace:<lo>:<hi>:<count> with lo>=1, hi>=lo, count>=2");
      for (long long i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        out.push_back(static_cast<std::int64_t>(std::llround(lo * std::pow(hi / lo, t))));
      }
    } else {
      try {
        out.push_back(std::stoll(s));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected an integer or logspace:<lo>:<hi>:<count>");
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty() || out.front() < 1) throw CLI::ValidationError("--n", "values must be >= 1");
  return out;
}

std::optional<BoundarySpec> parse_boundary(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0;
  if (std::sscanf(s.c_str(), "c=%lf", &v) == 1) return BoundarySpec::c_form(v);
  if (std::sscanf(s.c_str(), "a=%lf", &v) == 1) return BoundarySpec::a_form(v);
  throw CLI::ValidationError("--boundary", "expected c=<value> or a=<value>");
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << body;
  if (!os) throw std::runtime_error("short write to " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

fs::path ensure_out_dir(const std::string& out) {
  fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
  fs::create_directories(dir);
  return dir;
}

int cmd_simulate(int d, const std::vector<std::int64_t>& ns, std::int64_t reps,
                 std::uint64_t seed, const std::optional<BoundarySpec>& boundary, int threads,
                 bool strict_ties, const std::string& out) {
  SimulationConfig cfg;
  cfg.d = d;
  cfg.n_checkpoints = ns;
  cfg.replications = reps;
  cfg.master_seed = seed;
  cfg.boundary = boundary;
  cfg.ties = strict_ties ? TiePolicy::Strict : TiePolicy::Permissive;
  cfg.validate();

  const AggregateSummary summary = run_experiment(cfg, threads);
  const fs::path dir = ensure_out_dir(out);
  write_file(dir / "summary.csv", to_csv(summary));
  write_file(dir / "summary.json", summary_to_json(summary));

  for (const CheckpointAggregate& ck : summary.checkpoints) {
    std::printf("n=%lld: mean rho=%.6g mean gamma=%.6g", static_cast<long long>(ck.n),
                ck.at("rho").mean(), ck.find("gamma") ? ck.at("gamma").mean() : -1.0);
    if (const StatAggregate* rt = ck.find("rho_trunc"))
      std::printf(" mean rho(b_n)=%.6g (b_n=%.6g)", rt->mean(), ck.b_n);
    std::printf("\n");
  }
  std::printf("replications=%llu ordering_violations=%llu f_dips=%llu hf_dips=%llu\n",
              static_cast<unsigned long long>(summary.replications_consumed),
              static_cast<unsigned long long>(summary.ordering_violations),
              static_cast<unsigned long long>(summary.f_monotonicity_violations),
              static_cast<unsigned long long>(summary.hf_monotonicity_violations));
  return 0;
}

int cmd_exact(int d, const std::vector<std::int64_t>& ns,
              const std::optional<BoundarySpec>& boundary, const std::string& out) {
  json rows = json::array();
  const bool trunc = boundary.has_value();
  std::printf("%8s %18s %18s %18s", "n", "rho_exact", "iota_exact", "gamma_exact");
  if (trunc) std::printf(" %12s %18s", "b_n", "rho_trunc_mean");
  std::printf("\n");
  for (const std::int64_t n : ns) {
    const double rho = expected_rho_value(d, n);
    const double iota = expected_iota_value(d, n);
    const double gamma = expected_gamma_value(d, n);
    const char* prov = n <= 500 ? "exact_rational" : "positive_recurrence_float";
    json row{{"d", d}, {"n", n},           {"rho_exact", rho},  {"iota_exact", iota},
             {"gamma_exact", gamma},       {"provenance", prov}};
    std::printf("%8lld %18.12g %18.12g %18.12g", static_cast<long long>(n), rho, iota, gamma);
    if (trunc) {
      const BoundaryValues bv = boundary_eval(*boundary, d, static_cast<double>(n));
      const double rt = expected_rho_truncated(d, n, bv.b).value;
      row["b_n"] = bv.b;
      row["rho_trunc_mean"] = rt;
      row["rho_trunc_provenance"] = "quadrature";
      std::printf(" %12.6g %18.12g", bv.b, rt);
    }
    std::printf("\n");
    rows.push_back(std::move(row));
  }
  if (!out.empty()) {
    const fs::path dir = ensure_out_dir(out);
    json doc{{"version", kVersion}, {"subcommand", "exact"}, {"results", rows}};
    write_file(dir / "exact.json", doc.dump(2));
  }
  return 0;
}

int cmd_asympt(int d, const std::vector<std::int64_t>& ns, bool coeffs,
               const std::optional<BoundarySpec>& boundary, const std::string& out) {
  json doc{{"version", kVersion}, {"subcommand", "asympt"}};
  if (coeffs) {
    json arr = json::array();
    for (int j = 0; j <= d - 1; ++j) {
      const double a = a_coefficient(d, j);
      std::printf("a_{%d,%d} = %.12g\n", d, j, a);
      arr.push_back(json{{"d", d}, {"j", j}, {"value", a}});
    }
    doc["coefficients"] = std::move(arr);
  }
  json rows = json::array();
  for (const std::int64_t n : ns) {
    const double nd = static_cast<double>(n);
    json row{{"d", d}, {"n", n}, {"provenance", "asymptotic_main_term"}};
    std::printf("n=%lld:", static_cast<long long>(n));
    if (nd >= 3) {
      const double gh = expected_gamma_asymptotic(d, nd);
      const double ih = iota_hat(d, nd);
      row["gamma_asymptotic"] = gh;
      row["iota_asymptotic"] = ih;
      std::printf(" gamma_asymptotic=%.10g iota_asymptotic=%.10g", gh, ih);
    }
    if (d >= 2 && nd > std::exp(1.0)) {
      const CenteringConstants cc = centering(d, nd);
      row["fplus_center"] = cc.fplus_center;
      row["trailing_center"] = cc.trailing_center;
      std::printf(" fplus_center=%.10g trailing_center=%.10g", cc.fplus_center,
                  cc.trailing_center);
    }
    if (boundary && nd >= 16) {
      const BoundaryValues bv = boundary_eval(*boundary, d, nd);
      const ProbabilityBounds pb = probability_bounds(d, nd, *boundary);
      row["b_n"] = bv.b;
      row["beta_n"] = bv.beta;
      row["c_n"] = bv.c_n;
      row["markov_hf"] = pb.markov_hF;
      row["chebyshev_hf"] = pb.chebyshev_hF;
      std::printf(" b_n=%.10g beta_n=%.10g markov_hf=%.6g chebyshev_hf=%.6g", bv.b, bv.beta,
                  pb.markov_hF, pb.chebyshev_hF);
      if (pb.markov_F) {
        row["markov_f"] = *pb.markov_F;
        std::printf(" markov_f=%.6g", *pb.markov_F);
      }
    }
    std::printf("\n");
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  if (!out.empty()) {
    const fs::path dir = ensure_out_dir(out);
    write_file(dir / "asympt.json", doc.dump(2));
  }
  return 0;
}

int cmd_plot(int d, std::int64_t n, std::uint64_t seed, bool strict_ties, const std::string& out) {
  const fs::path dir = ensure_out_dir(out);
  if (d == 2) {
    auto eng = replication_engine(seed, 0);
    RecordSet rs(2, strict_ties ? TiePolicy::Strict : TiePolicy::Permissive);
    for (std::int64_t i = 0; i < n; ++i) rs.insert(sample_point(eng, 2));
    const GeneratorSet gs = all_generators(rs);
    std::printf("frontier at n=%lld: rho=%zu gamma=%zu\n", static_cast<long long>(n), rs.size(),
                gs.gamma());
    write_file(dir / "frontier.svg", frontier_svg(rs, gs));
  } else {
    std::printf("frontier plot requires d=2; writing only the convergence plot\n");
  }

  std::vector<std::array<double, 3>> rows;
  const double lo = 10.0, hi = static_cast<double>(std::max<std::int64_t>(n, 100));
  for (int i = 0; i < 24; ++i) {
    const double t = static_cast<double>(i) / 23.0;
    const auto ni = static_cast<std::int64_t>(std::llround(lo * std::pow(hi / lo, t)));
    rows.push_back({static_cast<double>(ni), expected_gamma_value(d, ni),
                    expected_gamma_asymptotic(d, static_cast<double>(ni))});
  }
  write_file(dir / "convergence.svg", convergence_svg(d, rows));
  return 0;
}

int cmd_check(std::uint64_t seed, const std::string& out) {
  const SelfCheckReport report = run_acceptance_suite(seed, &std::cout);
  if (!out.empty()) {
    json arr = json::array();
    for (const CriterionResult& c : report.criteria)
      arr.push_back(json{{"index", c.index},
                         {"name", c.name},
                         {"passed", c.passed},
                         {"seconds", c.seconds},
                         {"detail", c.detail}});
    json doc{{"version", kVersion},
             {"master_seed", seed},
             {"all_passed", report.all_passed},
             {"criteria", arr}};
    const fs::path dir = ensure_out_dir(out);
    write_file(dir / "check.json", doc.dump(2));
  }
  std::cout << (report.all_passed ? "ALL CRITERIA PASSED" : "ACCEPTANCE FAILURE") << "\n";
  return report.all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"record frontier statistics: simulation, exact formulas, asymptotics"};
  app.require_subcommand(1);

  int d = 2;
  std::vector<std::string> n_specs;
  std::int64_t reps = 100;
  std::uint64_t seed = 0;
  std::string boundary_spec;
  std::string out;
  int threads = 1;
  bool strict_ties = true;
  bool coeffs = false;

  const auto add_common = [&](CLI::App* sub, bool needs_seed) {
    sub->add_option("--d", d, "dimension (>= 1)")->check(CLI::Range(1, 20));
    sub->add_option("--n", n_specs,
                    "observation count; repeatable, or logspace:<lo>:<hi>:<count>");
    auto* s = sub->add_option("--seed", seed, "master seed (uint64)");
    if (needs_seed) s->required();
    sub->add_option("--boundary", boundary_spec, "boundary family, c=<value> or a=<value>");
    sub->add_option("--out", out, "output directory");
    sub->add_flag("--strict-ties,!--permissive-ties", strict_ties,
                  "fail on coordinate ties (default) / proceed past them");
    return sub;
  };

  CLI::App* sim = add_common(app.add_subcommand("simulate", "run a seeded experiment"), true);
  sim->add_option("--reps", reps, "replication count")->check(CLI::PositiveNumber);
  sim->add_option("--threads", threads, "worker count (results identical for any value)")
      ->check(CLI::Range(1, 256));

  add_common(app.add_subcommand("exact", "tabulate exact expected counts"), false);

  CLI::App* asym = add_common(app.add_subcommand("asympt", "tabulate asymptotic quantities"), false);
  asym->add_flag("--coeffs", coeffs, "print the expansion coefficients a_{d,j}");

  add_common(app.add_subcommand("plot", "render SVG plots"), true);

  CLI::App* chk = app.add_subcommand("check", "run the acceptance suite");
  chk->add_option("--seed", seed, "master seed (uint64)")->required();
  chk->add_option("--out", out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const std::optional<BoundarySpec> boundary = parse_boundary(boundary_spec);
    std::vector<std::int64_t> ns =
        n_specs.empty() ? std::vector<std::int64_t>{1000} : parse_n_values(n_specs);
    if (app.got_subcommand("simulate"))
      return cmd_simulate(d, ns, reps, seed, boundary, threads, strict_ties, out);
    if (app.got_subcommand("exact")) return cmd_exact(d, ns, boundary, out);
    if (app.got_subcommand("asympt")) return cmd_asympt(d, ns, coeffs, boundary, out);
    if (app.got_subcommand("plot")) return cmd_plot(d, ns.back(), seed, strict_ties, out);
    if (app.got_subcommand("check")) return cmd_check(seed, out);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const TieError& e) {
    std::cerr << "tie diagnostic: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
