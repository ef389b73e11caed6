#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drmcost/cost/cost_model.h"
#include "drmcost/scenario/scenario.h"

namespace drmcost::scenario {

enum class ReportFormat : std::uint8_t { Table, Csv, Json, PlotData };

/// "table", "csv", "json" or "plotdata". Throws Error(unknown_format).
ReportFormat parse_format(std::string_view name);

struct LabeledReport {
  std::string scenario;
  cost::Report report;

  bool operator==(const LabeledReport&) const = default;
};

struct RenderedFile {
  std::string name;
  std::string contents;
};

// Only modeled quantities are rendered, so the output is a pure function of
// the reports. Plot data yields algorithm_share.dat and variant_totals.dat;
// every other format yields a single report.<ext>.
std::vector<RenderedFile> render_reports(std::span<const LabeledReport> reports, ReportFormat format);

/// Throws Error(integrity_check_failed) if any run failed its round trip.
std::vector<RenderedFile> render_runs(std::span<const ScenarioRun> runs, ReportFormat format);

/// Inverse of the CSV rendering. Throws Error(parse_error).
std::vector<LabeledReport> parse_csv_reports(std::string_view text);

}  // namespace drmcost::scenario
