// drmcost: run DRM lifecycle scenarios with real crypto and price the
// recorded operation traces under hardware/software partitionings.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drmcost/common/error.h"
#include "drmcost/cost/cost_model.h"
#include "drmcost/cost/trace.h"
#include "drmcost/crypto/key_fixture.h"
#include "drmcost/crypto/rsa.h"
#include "drmcost/scenario/render.h"
#include "drmcost/scenario/scenario.h"

namespace fs = std::filesystem;
using namespace drmcost;

namespace {

struct CommonOptions {
  std::string scenario;
  std::uint64_t seed = 1;
  std::string keys_file;
  std::string ca_file;
  std::int64_t now = 0;
  std::uint32_t play_limit = 0;
  bool sign_ro = false;
};

struct PriceOptions {
  std::string variant = "all";
  std::uint64_t clock_hz = cost::kDefaultClockHz;
  std::string format = "table";
  std::string out;
  std::string profile;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(contents.data(), static_cast<std::streamsize>(contents.size()))) {
    throw Error(Errc::io_error, "cannot write " + path.string());
  }
}

std::vector<cost::ArchVariant> variants_for(const std::string& name) {
  if (name == "all") return {cost::ArchVariant::all_software(), cost::ArchVariant::mixed(), cost::ArchVariant::all_hardware()};
  return {cost::parse_variant(name)};
}

scenario::RunOptions run_options(const CommonOptions& common, const PriceOptions& price) {
  scenario::RunOptions opts;
  opts.clock_hz = price.clock_hz;
  opts.seed = common.seed;
  if (!price.profile.empty()) opts.tables = cost::load_cost_tables(price.profile);
  if (!common.keys_file.empty()) {
    opts.keys = scenario::ActorKeys::from_fixture(crypto::load_key_fixture(common.keys_file));
  }
  if (!common.ca_file.empty()) opts.ca_fixture = roap::load_ca_fixture(common.ca_file);
  if (common.now != 0) opts.now = roap::at_seconds(common.now);
  if (common.play_limit != 0) opts.play_limit = common.play_limit;
  opts.sign_ro = common.sign_ro;
  return opts;
}

void emit(const std::vector<scenario::RenderedFile>& files, const std::string& out_dir) {
  if (out_dir.empty()) {
    for (const auto& f : files) {
      if (files.size() > 1) std::cout << "==> " << f.name << " <==\n";
      std::cout << f.contents;
    }
    return;
  }
  for (const auto& f : files) {
    write_file(fs::path(out_dir) / f.name, f.contents);
    std::cerr << "wrote " << (fs::path(out_dir) / f.name).string() << '\n';
  }
}

int cmd_run(const CommonOptions& common, const PriceOptions& price) {
  const auto sc = scenario::build_scenario(common.scenario);
  const auto variants = variants_for(price.variant);
  const auto format = scenario::parse_format(price.format);
  auto runs = scenario::run_variants(sc, variants, run_options(common, price));
  emit(scenario::render_runs(runs, format), price.out);
  for (const auto& run : runs) {
    // Host time is the cost of simulating on this machine, not a modeled value.
    std::fprintf(stderr, "host wall time %s/%s: %.3f s\n", run.scenario.name.c_str(), run.variant.c_str(),
                 run.host_seconds);
  }
  return 0;
}

int cmd_trace(const CommonOptions& common, const PriceOptions& price, const std::string& out) {
  const auto sc = scenario::build_scenario(common.scenario);
  const auto exec = scenario::execute_scenario(sc, run_options(common, price));
  if (!exec.round_trip_verified) throw Error(Errc::integrity_check_failed, "content did not round-trip");
  const std::string text = cost::format_trace(exec.trace);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return 0;
}

int cmd_price(const std::string& trace_file, const std::string& label, const PriceOptions& price) {
  const auto trace = cost::parse_trace(read_file(trace_file));
  const auto format = scenario::parse_format(price.format);
  const cost::CostTables tables = price.profile.empty() ? cost::CostTables{} : cost::load_cost_tables(price.profile);
  std::vector<scenario::LabeledReport> reports;
  const std::string name = label.empty() ? fs::path(trace_file).stem().string() : label;
  for (const auto& v : variants_for(price.variant)) {
    reports.push_back({name, cost::estimate(trace, v, price.clock_hz, tables)});
  }
  emit(scenario::render_reports(reports, format), price.out);
  return 0;
}

int cmd_keygen(const std::string& out, const std::vector<std::string>& names) {
  std::vector<crypto::NamedKeyPair> pairs;
  for (const auto& n : names) pairs.push_back({n, crypto::generate_rsa_keypair()});
  write_file(out, crypto::format_key_fixture(pairs));
  return 0;
}

void add_price_options(CLI::App* cmd, PriceOptions& price, bool with_format = true) {
  cmd->add_option("--variant", price.variant, "sw, mixed, hw or all")->capture_default_str();
  cmd->add_option("--clock-hz", price.clock_hz, "Modeled clock frequency")->capture_default_str()->check(
      CLI::PositiveNumber);
  cmd->add_option("--profile", price.profile, "Cost table override file")->check(CLI::ExistingFile);
  if (with_format) {
    cmd->add_option("--format", price.format, "table, csv, json or plotdata")->capture_default_str();
    cmd->add_option("--out", price.out, "Output directory (stdout when omitted)");
  }
}

void add_common_options(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--scenario", common.scenario, "music_player, ringtone or custom:SIZE:N")->required();
  cmd->add_option("--seed", common.seed, "Content generator seed")->capture_default_str();
  cmd->add_option("--keys", common.keys_file, "RSA key fixture with ca, ri and agent pairs")->check(CLI::ExistingFile);
  cmd->add_option("--ca", common.ca_file, "CA fixture: subjects, validity windows, revocations")
      ->check(CLI::ExistingFile);
  cmd->add_option("--now", common.now, "Protocol time in unix seconds (default 2005-01-01)");
  cmd->add_option("--play-limit", common.play_limit, "Issue the RO with this play count");
  cmd->add_flag("--sign-ro", common.sign_ro, "Have the RI sign the rights object");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DRM agent cost model: run scenarios and price operation traces"};
  app.require_subcommand(1);

  CommonOptions common;
  PriceOptions price;
  std::string trace_out;
  std::string trace_in;
  std::string label;
  std::string keys_out;
  std::vector<std::string> key_names{"ca", "ri", "agent"};

  auto* run = app.add_subcommand("run", "Execute a scenario and report modeled cost");
  add_common_options(run, common);
  add_price_options(run, price);

  auto* trace = app.add_subcommand("trace", "Execute a scenario and write its operation trace");
  add_common_options(trace, common);
  add_price_options(trace, price, false);
  trace->add_option("--out", trace_out, "Trace file (stdout when omitted)");

  auto* price_cmd = app.add_subcommand("price", "Price a recorded trace");
  price_cmd->add_option("--trace", trace_in, "Trace file")->required()->check(CLI::ExistingFile);
  price_cmd->add_option("--label", label, "Scenario label in the report (default: file stem)");
  add_price_options(price_cmd, price);

  auto* keygen = app.add_subcommand("keygen", "Write a fresh RSA-1024 key fixture");
  keygen->add_option("--out", keys_out, "Fixture file")->required();
  keygen->add_option("--names", key_names, "Key pair names")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(common, price);
    if (*trace) return cmd_trace(common, price, trace_out);
    if (*price_cmd) return cmd_price(trace_in, label, price);
    if (*keygen) return cmd_keygen(keys_out, key_names);
  } catch (const scenario::PhaseError& e) {
    std::cerr << "drmcost: " << e.phase() << " phase failed: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "drmcost: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "drmcost: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
