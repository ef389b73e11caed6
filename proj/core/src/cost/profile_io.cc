#include <charconv>
#include <fstream>
#include <sstream>

#include "drmcost/common/error.h"
#include "drmcost/cost/cost_model.h"

namespace drmcost::cost {
namespace {

Cycles parse_cycles(const std::string& text, const std::string& where) {
  Cycles v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::parse_error, where + "'" + text + "' is not a cycle count");
  }
  return v;
}

}  // namespace

CostTables parse_cost_tables(std::string_view text, const CostTables& base) {
  CostTables tables = base;
  CostProfile* current = nullptr;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string where = "profile line " + std::to_string(line_no) + ": ";
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head) || head.front() == '#') continue;

    if (head == "[software]") {
      current = &tables.software;
      continue;
    }
    if (head == "[hardware]") {
      current = &tables.hardware;
      continue;
    }
    if (current == nullptr) throw Error(Errc::parse_error, where + "entry before [software] or [hardware]");

    auto algorithm = parse_algorithm(head);
    if (!algorithm) throw Error(Errc::parse_error, where + "unknown algorithm '" + head + "'");
    std::string offset, unit_cycles, unit, extra;
    if (!(fields >> offset >> unit_cycles >> unit) || (fields >> extra)) {
      throw Error(Errc::parse_error, where + "expected 'algorithm offset unit_cycles block|op'");
    }
    CostEntry entry{parse_cycles(offset, where), parse_cycles(unit_cycles, where), CostUnit::PerBlock128};
    if (unit == "op") {
      entry.unit = CostUnit::PerOp1024;
    } else if (unit != "block") {
      throw Error(Errc::parse_error, where + "unit must be 'block' or 'op'");
    }
    if (is_rsa(*algorithm) != (entry.unit == CostUnit::PerOp1024)) {
      throw Error(Errc::unit_mismatch, where + std::string(to_string(*algorithm)) + " has the wrong unit");
    }
    current->set(*algorithm, entry);
  }
  return tables;
}

CostTables load_cost_tables(const std::filesystem::path& path, const CostTables& base) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open profile file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cost_tables(buf.str(), base);
}

std::string format_cost_tables(const CostTables& tables) {
  std::string out = "# algorithm offset_cycles unit_cycles block|op\n";
  auto emit = [&out](const char* header, const CostProfile& profile) {
    out.append(header).push_back('\n');
    for (auto id : kAllAlgorithms) {
      const CostEntry& e = profile[id];
      out.append(to_string(id));
      out.append(" " + std::to_string(e.offset_cycles) + " " + std::to_string(e.unit_cycles));
      out.append(e.unit == CostUnit::PerOp1024 ? " op\n" : " block\n");
    }
  };
  emit("[software]", tables.software);
  emit("[hardware]", tables.hardware);
  return out;
}

}  // namespace drmcost::cost
