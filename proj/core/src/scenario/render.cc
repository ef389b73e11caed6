#include "drmcost/scenario/render.h"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "drmcost/common/error.h"

namespace drmcost::scenario {
namespace {

constexpr std::string_view kCsvHeader = "scenario,variant,clock_hz,kind,name,cycles,seconds,percent";

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double seconds_of(cost::Cycles cycles, std::uint64_t clock_hz) {
  return static_cast<double>(cycles) / static_cast<double>(clock_hz);
}

double share(cost::Cycles part, cost::Cycles total) {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(total);
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string render_table(std::span<const LabeledReport> reports) {
  std::ostringstream out;
  for (const auto& [scenario, r] : reports) {
    out << "scenario " << scenario << "  variant " << r.variant << "  clock " << r.clock_hz << " Hz\n";
    out << "  " << pad_right("algorithm", 14) << pad_left("cycles", 14) << pad_left("ms", 12)
        << pad_left("share %", 10) << '\n';
    for (auto id : cost::kAllAlgorithms) {
      out << "  " << pad_right(std::string(cost::to_string(id)), 14) << pad_left(std::to_string(r.cycles(id)), 14)
          << pad_left(fixed(1e3 * seconds_of(r.cycles(id), r.clock_hz), 3), 12) << pad_left(fixed(r.percent(id), 2), 10)
          << '\n';
    }
    out << "  " << pad_right("phase", 14) << '\n';
    for (auto phase : cost::kAllPhases) {
      out << "  " << pad_right(std::string(cost::to_string(phase)), 14)
          << pad_left(std::to_string(r.cycles(phase)), 14) << pad_left(fixed(1e3 * r.seconds(phase), 3), 12)
          << pad_left(fixed(share(r.cycles(phase), r.total_cycles), 2), 10) << '\n';
    }
    out << "  " << pad_right("total", 14) << pad_left(std::to_string(r.total_cycles), 14)
        << pad_left(fixed(1e3 * r.total_seconds, 3), 12) << '\n';
    out << "  energy proxy (cycles) " << r.energy_proxy << "\n\n";
  }

  // Ratio matrix per scenario, row over column.
  std::map<std::string, std::vector<const cost::Report*>> by_scenario;
  for (const auto& lr : reports) by_scenario[lr.scenario].push_back(&lr.report);
  for (const auto& [scenario, rs] : by_scenario) {
    if (rs.size() < 2) continue;
    out << "time ratio (row / column), scenario " << scenario << '\n';
    out << "  " << pad_right("", 14);
    for (const auto* c : rs) out << pad_left(c->variant, 14);
    out << '\n';
    for (const auto* row : rs) {
      out << "  " << pad_right(row->variant, 14);
      for (const auto* col : rs) {
        out << pad_left(col->total_cycles == 0 ? "-" : fixed(row->total_seconds / col->total_seconds, 3), 14);
      }
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::string render_csv(std::span<const LabeledReport> reports) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& [scenario, r] : reports) {
    if (scenario.find(',') != std::string::npos || r.variant.find(',') != std::string::npos) {
      throw Error(Errc::invalid_argument, "scenario and variant names must not contain commas");
    }
    const std::string prefix = scenario + "," + r.variant + "," + std::to_string(r.clock_hz) + ",";
    for (auto id : cost::kAllAlgorithms) {
      out << prefix << "algorithm," << cost::to_string(id) << ',' << r.cycles(id) << ','
          << shortest(seconds_of(r.cycles(id), r.clock_hz)) << ',' << shortest(r.percent(id)) << '\n';
    }
    for (auto phase : cost::kAllPhases) {
      out << prefix << "phase," << cost::to_string(phase) << ',' << r.cycles(phase) << ','
          << shortest(r.seconds(phase)) << ',' << shortest(share(r.cycles(phase), r.total_cycles)) << '\n';
    }
    out << prefix << "total,total," << r.total_cycles << ',' << shortest(r.total_seconds) << ','
        << shortest(r.total_cycles == 0 ? 0.0 : 100.0) << '\n';
    out << prefix << "energy_proxy,cycles," << r.energy_proxy << ",,\n";
  }
  return out.str();
}

nlohmann::ordered_json report_json(const LabeledReport& lr) {
  const auto& r = lr.report;
  nlohmann::ordered_json j;
  j["scenario"] = lr.scenario;
  j["variant"] = r.variant;
  j["clock_hz"] = r.clock_hz;
  j["total_cycles"] = r.total_cycles;
  j["total_seconds"] = r.total_seconds;
  j["energy_proxy"] = r.energy_proxy;
  for (auto id : cost::kAllAlgorithms) {
    j["algorithms"][std::string(cost::to_string(id))] = {{"cycles", r.cycles(id)},
                                                          {"seconds", seconds_of(r.cycles(id), r.clock_hz)},
                                                          {"percent", r.percent(id)}};
  }
  for (auto phase : cost::kAllPhases) {
    j["phases"][std::string(cost::to_string(phase))] = {{"cycles", r.cycles(phase)}, {"seconds", r.seconds(phase)}};
  }
  return j;
}

std::string render_json(std::span<const LabeledReport> reports) {
  nlohmann::ordered_json root;
  root["reports"] = nlohmann::ordered_json::array();
  for (const auto& lr : reports) root["reports"].push_back(report_json(lr));
  return root.dump(2) + "\n";
}

std::vector<RenderedFile> render_plotdata(std::span<const LabeledReport> reports) {
  std::ostringstream share_out;
  share_out << "# algorithm";
  for (const auto& [scenario, r] : reports) share_out << ' ' << scenario << '/' << r.variant;
  share_out << "\n# percent of total cycles\n";
  for (auto id : cost::kAllAlgorithms) {
    share_out << cost::to_string(id);
    for (const auto& lr : reports) share_out << ' ' << fixed(lr.report.percent(id), 4);
    share_out << '\n';
  }

  std::ostringstream totals;
  totals << "# index scenario variant total_s";
  for (auto phase : cost::kAllPhases) totals << ' ' << cost::to_string(phase) << "_s";
  totals << '\n';
  std::size_t index = 0;
  for (const auto& [scenario, r] : reports) {
    totals << index++ << ' ' << scenario << ' ' << r.variant << ' ' << fixed(r.total_seconds, 9);
    for (auto phase : cost::kAllPhases) totals << ' ' << fixed(r.seconds(phase), 9);
    totals << '\n';
  }
  return {{"algorithm_share.dat", share_out.str()}, {"variant_totals.dat", totals.str()}};
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    line.remove_prefix(pos + 1);
  }
}

template <typename T>
T parse_number(std::string_view text, std::size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "plotdata") return ReportFormat::PlotData;
  throw Error(Errc::unknown_format, "unknown format '" + std::string(name) + "' (table, csv, json, plotdata)");
}

std::vector<RenderedFile> render_reports(std::span<const LabeledReport> reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Table:
      return {{"report.txt", render_table(reports)}};
    case ReportFormat::Csv:
      return {{"report.csv", render_csv(reports)}};
    case ReportFormat::Json:
      return {{"report.json", render_json(reports)}};
    case ReportFormat::PlotData:
      return render_plotdata(reports);
  }
  throw Error(Errc::unknown_format, "unhandled report format");
}

std::vector<RenderedFile> render_runs(std::span<const ScenarioRun> runs, ReportFormat format) {
  std::vector<LabeledReport> labeled;
  for (const auto& run : runs) {
    if (!run.round_trip_verified) {
      throw Error(Errc::integrity_check_failed,
                  "scenario " + run.scenario.name + " under " + run.variant + " did not recover its content");
    }
    labeled.push_back({run.scenario.name, run.report});
  }
  return render_reports(labeled, format);
}

std::vector<LabeledReport> parse_csv_reports(std::string_view text) {
  std::vector<LabeledReport> out;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw Error(Errc::parse_error, "missing CSV header");
      header_seen = true;
      continue;
    }
    auto cols = split(line, ',');
    if (cols.size() != 8) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 8 columns");
    }
    const std::string scenario(cols[0]);
    const std::string variant(cols[1]);
    const auto clock = parse_number<std::uint64_t>(cols[2], line_no);
    if (out.empty() || out.back().scenario != scenario || out.back().report.variant != variant) {
      LabeledReport fresh{scenario, {}};
      fresh.report.variant = variant;
      fresh.report.clock_hz = clock;
      out.push_back(std::move(fresh));
    }
    auto& r = out.back().report;
    if (r.clock_hz != clock) throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": clock changes");
    const auto cycles = parse_number<cost::Cycles>(cols[5], line_no);
    const std::string_view kind = cols[3];
    const std::string_view name = cols[4];
    if (kind == "algorithm") {
      auto id = cost::parse_algorithm(name);
      if (!id) throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": unknown algorithm");
      r.algorithm_cycles[cost::index_of(*id)] = cycles;
      r.algorithm_percent[cost::index_of(*id)] = parse_number<double>(cols[7], line_no);
    } else if (kind == "phase") {
      auto phase = cost::parse_phase(name);
      if (!phase) throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": unknown phase");
      r.phase_cycles[cost::index_of(*phase)] = cycles;
    } else if (kind == "total") {
      r.total_cycles = cycles;
      r.total_seconds = parse_number<double>(cols[6], line_no);
    } else if (kind == "energy_proxy") {
      r.energy_proxy = cycles;
    } else {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": unknown row kind");
    }
  }
  if (!header_seen) throw Error(Errc::parse_error, "empty CSV");
  return out;
}

}  // namespace drmcost::scenario
