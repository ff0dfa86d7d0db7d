#include "recfront/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "recfront/version.hpp"

namespace recfront {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void write_csv(const AggregateSummary& summary, std::ostream& os) {
  os << "d,n,stat,mean,var,min,max,q05,q50,q95,count,seed\n";
  for (const auto& ck : summary.checkpoints) {
    for (const auto& [name, stat] : ck.stats) {
      os << summary.config.d << ',' << ck.n << ',' << name << ',' << fmt17(stat.mean()) << ','
         << fmt17(stat.variance()) << ',' << fmt17(stat.min()) << ',' << fmt17(stat.max()) << ','
         << fmt17(stat.quantile(0.05)) << ',' << fmt17(stat.quantile(0.50)) << ','
         << fmt17(stat.quantile(0.95)) << ',' << stat.count() << ','
         << summary.config.master_seed << '\n';
    }
  }
}

std::string to_csv(const AggregateSummary& summary) {
  std::ostringstream os;
  write_csv(summary, os);
  return os.str();
}

std::vector<CsvRow> parse_csv(std::istream& is) {
  std::vector<CsvRow> rows;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("parse_csv: empty input");
  if (line != "d,n,stat,mean,var,min,max,q05,q50,q95,count,seed")
    throw std::invalid_argument("parse_csv: unexpected header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t pos = 0;
    while (true) {
      std::size_t c = line.find(',', pos);
      if (c == std::string::npos) {
        f.push_back(line.substr(pos));
        break;
      }
      f.push_back(line.substr(pos, c - pos));
      pos = c + 1;
    }
    if (f.size() != 12) throw std::invalid_argument("parse_csv: bad field count");
    CsvRow r;
    r.d = std::stoi(f[0]);
    r.n = std::stoll(f[1]);
    r.stat = f[2];
    r.mean = std::strtod(f[3].c_str(), nullptr);
    r.var = std::strtod(f[4].c_str(), nullptr);
    r.min = std::strtod(f[5].c_str(), nullptr);
    r.max = std::strtod(f[6].c_str(), nullptr);
    r.q05 = std::strtod(f[7].c_str(), nullptr);
    r.q50 = std::strtod(f[8].c_str(), nullptr);
    r.q95 = std::strtod(f[9].c_str(), nullptr);
    r.count = std::stoull(f[10]);
    r.seed = std::stoull(f[11]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string summary_to_json(const AggregateSummary& summary) {
  using json = nlohmann::ordered_json;
  json cfg;
  cfg["d"] = summary.config.d;
  cfg["checkpoints"] = summary.config.n_checkpoints;
  cfg["replications"] = summary.config.replications;
  cfg["master_seed"] = summary.config.master_seed;
  if (summary.config.boundary) {
    cfg["boundary"] = {
        {"form", summary.config.boundary->form == BoundarySpec::Form::C ? "c" : "a"},
        {"value", summary.config.boundary->value}};
  } else {
    cfg["boundary"] = nullptr;
  }
  cfg["collect"] = {{"generators", summary.config.collect.generators},
                    {"truncated", summary.config.collect.truncated},
                    {"path_audits", summary.config.collect.path_audits}};
  cfg["ties"] = summary.config.ties == TiePolicy::Strict ? "strict" : "permissive";

  json results = json::array();
  for (const auto& ck : summary.checkpoints) {
    json stats;
    for (const auto& [name, stat] : ck.stats) {
      json s;
      s["count"] = stat.count();
      s["mean"] = stat.mean();
      s["variance"] = stat.variance();
      s["min"] = stat.min();
      s["max"] = stat.max();
      s["q05"] = stat.quantile(0.05);
      s["q50"] = stat.quantile(0.50);
      s["q95"] = stat.quantile(0.95);
      s["sketch"] = stat.gridded() ? "quantile_grid" : "full_sample";
      s["provenance"] = "monte_carlo";
      stats[name] = std::move(s);
    }
    json row;
    row["n"] = ck.n;
    if (std::isnan(ck.b_n))
      row["b_n"] = nullptr;
    else
      row["b_n"] = ck.b_n;
    row["stats"] = std::move(stats);
    results.push_back(std::move(row));
  }

  json diagnostics = json::array();
  diagnostics.push_back({{"name", "replications_consumed"},
                         {"value", summary.replications_consumed}});
  diagnostics.push_back({{"name", "ordering_violations"}, {"value", summary.ordering_violations}});
  diagnostics.push_back({{"name", "f_monotonicity_violations"},
                         {"value", summary.f_monotonicity_violations}});
  diagnostics.push_back({{"name", "hf_monotonicity_violations"},
                         {"value", summary.hf_monotonicity_violations}});
  // exploratory only: the conjectured-limit diagnostic, emitted with no assertion
  for (const auto& ck : summary.checkpoints) {
    if (const StatAggregate* hc = ck.find("hf_centered")) {
      json q = json::array();
      for (int i = 1; i <= 9; ++i) q.push_back(hc->quantile(0.1 * i));
      diagnostics.push_back({{"name", "hf_centered_deciles"}, {"checkpoint", ck.n}, {"value", q}});
    }
  }

  json root;
  root["version"] = kVersion;
  root["master_seed"] = summary.config.master_seed;
  root["config"] = std::move(cfg);
  root["results"] = std::move(results);
  root["diagnostics"] = std::move(diagnostics);
  return root.dump(2);
}

namespace {

struct Mapper {
  double lo_x, lo_y, sx, sy, height, margin;
  double x(double v) const { return margin + (v - lo_x) * sx; }
  double y(double v) const { return height - margin - (v - lo_y) * sy; }
};

void svg_open(std::ostringstream& os, double w, double h) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
     << "<style>\n"
     << ".frontier{fill:none;stroke:#24292f;stroke-width:1.5}\n"
     << ".record{fill:#1f6feb;stroke:none}\n"
     << ".generator{fill:none;stroke:#cf222e;stroke-width:1.5}\n"
     << ".hyper{fill:none;stroke-width:1;stroke-dasharray:5 4}\n"
     << ".fplus{stroke:#8250df}\n.hfminus{stroke:#116329}\n.fminus{stroke:#bc4c00}\n"
     << ".axis{stroke:#57606a;stroke-width:1}\n"
     << ".lbl{font:11px sans-serif;fill:#24292f}\n"
     << ".exact{fill:none;stroke:#1f6feb;stroke-width:1.5}\n"
     << ".asymptotic{fill:none;stroke:#cf222e;stroke-width:1.5;stroke-dasharray:6 4}\n"
     << "</style>\n";
}

void svg_axes(std::ostringstream& os, const Mapper& m, double w, double h, double hi_x,
              double hi_y, const char* xlab, const char* ylab, bool log_x) {
  os << "<line class=\"axis\" x1=\"" << m.x(m.lo_x) << "\" y1=\"" << m.y(m.lo_y) << "\" x2=\""
     << w - m.margin / 2 << "\" y2=\"" << m.y(m.lo_y) << "\"/>\n";
  os << "<line class=\"axis\" x1=\"" << m.x(m.lo_x) << "\" y1=\"" << m.y(m.lo_y) << "\" x2=\""
     << m.x(m.lo_x) << "\" y2=\"" << m.margin / 2 << "\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    double fx = m.lo_x + (hi_x - m.lo_x) * i / 5.0;
    double fy = m.lo_y + (hi_y - m.lo_y) * i / 5.0;
    os << "<line class=\"axis\" x1=\"" << m.x(fx) << "\" y1=\"" << m.y(m.lo_y) << "\" x2=\""
       << m.x(fx) << "\" y2=\"" << m.y(m.lo_y) + 4 << "\"/>\n";
    os << "<text class=\"lbl\" x=\"" << m.x(fx) << "\" y=\"" << m.y(m.lo_y) + 16
       << "\" text-anchor=\"middle\">"
       << fmt_short(log_x ? std::pow(10.0, fx) : fx) << "</text>\n";
    os << "<line class=\"axis\" x1=\"" << m.x(m.lo_x) - 4 << "\" y1=\"" << m.y(fy) << "\" x2=\""
       << m.x(m.lo_x) << "\" y2=\"" << m.y(fy) << "\"/>\n";
    os << "<text class=\"lbl\" x=\"" << m.x(m.lo_x) - 6 << "\" y=\"" << m.y(fy) + 4
       << "\" text-anchor=\"end\">" << fmt_short(fy) << "</text>\n";
  }
  os << "<text class=\"lbl\" x=\"" << (w / 2) << "\" y=\"" << h - 8
     << "\" text-anchor=\"middle\">" << xlab << "</text>\n";
  os << "<text class=\"lbl\" x=\"14\" y=\"" << (h / 2)
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << (h / 2) << ")\">" << ylab
     << "</text>\n";
}

}  // namespace

std::string frontier_svg(const RecordSet& rs, const GeneratorSet& gs) {
  if (rs.dim() != 2) throw std::invalid_argument("frontier_svg: requires d = 2");
  if (rs.size() == 0) throw std::invalid_argument("frontier_svg: empty record set");
  FrontierRecordStats fs = rs.frontier_record_stats();
  TrailingSummary ts = trailing_summary(gs);

  std::vector<std::pair<double, double>> recs;
  recs.reserve(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    auto s = rs.record_span(i);
    recs.emplace_back(s[0], s[1]);
  }
  std::sort(recs.begin(), recs.end());

  const double w = 640, h = 640, margin = 60;
  double extent = fs.f_plus * 1.05;
  double scale = (w - 2 * margin) / extent;
  Mapper m{0.0, 0.0, scale, scale, h, margin};

  std::ostringstream os;
  svg_open(os, w, h);
  svg_axes(os, m, w, h, extent, extent, "x1", "x2", false);

  // frontier staircase: horizontal into each record, vertical down to the next
  os << "<path class=\"frontier\" d=\"M" << m.x(0) << ' ' << m.y(recs[0].second);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    os << " H" << m.x(recs[i].first);
    os << " V" << m.y(i + 1 < recs.size() ? recs[i + 1].second : 0.0);
  }
  os << "\"/>\n";

  const std::tuple<double, const char*, const char*> hyper_lines[] = {
      {fs.f_plus, "fplus", "x1+x2 = F+"},
      {fs.hat_f_minus, "hfminus", "x1+x2 = hF-"},
      {ts.f_minus, "fminus", "x1+x2 = F-"}};
  for (const auto& [value, cls, label] : hyper_lines) {
    os << "<line class=\"hyper " << cls << "\" x1=\"" << m.x(0) << "\" y1=\"" << m.y(value)
       << "\" x2=\"" << m.x(value) << "\" y2=\"" << m.y(0) << "\"/>\n";
    os << "<text class=\"lbl\" x=\"" << m.x(value * 0.55) + 4 << "\" y=\""
       << m.y(value * 0.45) - 4 << "\">" << label << "</text>\n";
  }

  for (const auto& [x, y] : recs)
    os << "<circle class=\"record\" cx=\"" << m.x(x) << "\" cy=\"" << m.y(y) << "\" r=\"3\"/>\n";
  for (const auto& [mask, pts] : gs.by_support())
    for (const Point& p : pts)
      os << "<circle class=\"generator\" cx=\"" << m.x(p[0]) << "\" cy=\"" << m.y(p[1])
         << "\" r=\"4.5\"/>\n";

  os << "</svg>\n";
  return os.str();
}

std::string convergence_svg(int d, const std::vector<std::array<double, 3>>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("convergence_svg: needs at least two rows");
  double lo_n = std::log10(rows.front()[0]), hi_n = std::log10(rows.back()[0]);
  double hi_v = 0.0;
  for (const auto& r : rows) hi_v = std::max({hi_v, r[1], r[2]});

  const double w = 640, h = 480, margin = 60;
  Mapper m{lo_n, 0.0, (w - 2 * margin) / (hi_n - lo_n), (h - 2 * margin) / (hi_v * 1.05), h,
           margin};

  std::ostringstream os;
  svg_open(os, w, h);
  svg_axes(os, m, w, h, hi_n, hi_v * 1.05, "n", "expected generators", true);

  for (int series = 1; series <= 2; ++series) {
    os << "<path class=\"" << (series == 1 ? "exact" : "asymptotic") << "\" d=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << (i == 0 ? 'M' : 'L') << m.x(std::log10(rows[i][0])) << ' '
         << m.y(rows[i][static_cast<std::size_t>(series)]);
    }
    os << "\"/>\n";
  }
  os << "<text class=\"lbl\" x=\"" << margin + 10 << "\" y=\"" << margin << "\">d = " << d
     << "; solid: exact, dashed: asymptotic main term</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace recfront
