#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "recfront/generators.hpp"
#include "recfront/montecarlo.hpp"
#include "recfront/record_set.hpp"

namespace recfront {

// One row per (checkpoint, statistic):
//   d,n,stat,mean,var,min,max,q05,q50,q95,count,seed
// Doubles are written with %.17g so parsing reproduces them bit-exactly.
void write_csv(const AggregateSummary& summary, std::ostream& os);
std::string to_csv(const AggregateSummary& summary);

struct CsvRow {
  int d = 0;
  std::int64_t n = 0;
  std::string stat;
  double mean = 0, var = 0, min = 0, max = 0, q05 = 0, q50 = 0, q95 = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

std::vector<CsvRow> parse_csv(std::istream& is);

// {config, results[], diagnostics[]} with master_seed, config and code
// version embedded; keys sorted, no timestamps, so equal summaries
// serialize to identical strings.
std::string summary_to_json(const AggregateSummary& summary);

// Self-contained SVG of a d=2 record frontier: staircase boundary, one
// circle of class "record" per remaining record, one circle of class
// "generator" per generator, and the three lines x1+x2 = F+, hF-, F-.
std::string frontier_svg(const RecordSet& rs, const GeneratorSet& gs);

// Exact vs asymptotic expected generator counts; rows are (n, exact,
// asymptotic) with n on a log axis.
std::string convergence_svg(int d, const std::vector<std::array<double, 3>>& rows);

}  // namespace recfront
