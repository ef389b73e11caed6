#include "drmcost/scenario/scenario.h"

#include <charconv>
#include <chrono>
#include <future>
#include <random>

#include "drmcost/objects/dcf.h"
#include "drmcost/roap/agent.h"
#include "drmcost/roap/lifecycle.h"
#include "drmcost/roap/rights_issuer.h"

namespace drmcost::scenario {
namespace {

constexpr std::string_view kContentId = "cid-0001";
constexpr std::string_view kRoId = "ro-0001";
constexpr std::string_view kRightsUrl = "https://ri.example/roap";

template <typename Fn>
auto in_phase(const char* phase, Fn&& fn) {
  try {
    return fn();
  } catch (const PhaseError&) {
    throw;
  } catch (const Error& e) {
    throw PhaseError(phase, e);
  }
}

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return v;
}

}  // namespace

Scenario music_player() { return {"music_player", kMusicPlayerBytes, kMusicPlayerPlays, objects::Permissions::unlimited()}; }

Scenario ringtone() { return {"ringtone", kRingtoneBytes, kRingtoneCalls, objects::Permissions::unlimited()}; }

Scenario custom(std::uint64_t size_bytes, std::uint32_t accesses) {
  if (size_bytes < 1 || accesses < 1) {
    throw Error(Errc::invalid_argument, "custom scenario needs size >= 1 and accesses >= 1");
  }
  return {"custom:" + std::to_string(size_bytes) + ":" + std::to_string(accesses), size_bytes, accesses,
          objects::Permissions::unlimited()};
}

Scenario build_scenario(std::string_view name) {
  if (name == "music_player") return music_player();
  if (name == "ringtone") return ringtone();
  constexpr std::string_view kCustom = "custom:";
  if (name.starts_with(kCustom)) {
    std::string_view rest = name.substr(kCustom.size());
    auto colon = rest.find(':');
    auto size = parse_u64(rest.substr(0, colon));
    auto accesses = colon == std::string_view::npos ? std::nullopt : parse_u64(rest.substr(colon + 1));
    if (!size || !accesses || *accesses > UINT32_MAX) {
      throw Error(Errc::unknown_scenario, "expected custom:SIZE:N, got '" + std::string(name) + "'");
    }
    return custom(*size, static_cast<std::uint32_t>(*accesses));
  }
  throw Error(Errc::unknown_scenario, "unknown scenario '" + std::string(name) + "'");
}

ActorKeys ActorKeys::generate() {
  return {crypto::generate_rsa_keypair(), crypto::generate_rsa_keypair(), crypto::generate_rsa_keypair()};
}

ActorKeys ActorKeys::from_fixture(std::span<const crypto::NamedKeyPair> pairs) {
  return {crypto::find_key(pairs, "ca"), crypto::find_key(pairs, "ri"), crypto::find_key(pairs, "agent")};
}

roap::CaFixture default_ca_fixture() {
  roap::CaFixture fixture;
  fixture.ca_id = "cmla-root";
  const auto from = roap::at_seconds(1'072'915'200);  // 2004-01-01
  const auto to = roap::at_seconds(1'230'768'000);    // 2009-01-01
  fixture.subjects = {{"agent-0001", from, to}, {"ri-0001", from, to}};
  return fixture;
}

roap::Timestamp default_now() { return roap::at_seconds(1'104'537'600); }

PhaseError::PhaseError(std::string phase, const Error& cause)
    : Error(cause.code(), cause.detail()), phase_(std::move(phase)) {}

Bytes generate_content(std::uint64_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bytes out(size);
  std::size_t i = 0;
  while (i < size) {
    std::uint64_t word = rng();
    for (int k = 0; k < 8 && i < size; ++k, ++i) out[i] = static_cast<std::uint8_t>(word >> (8 * k));
  }
  return out;
}

Execution execute_scenario(const Scenario& scenario, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const ActorKeys keys = options.keys ? *options.keys : ActorKeys::generate();
  const roap::CaFixture fixture = options.ca_fixture ? *options.ca_fixture : default_ca_fixture();
  const roap::Timestamp now = options.now;

  roap::CertificateAuthority ca(fixture.ca_id, keys.ca);
  for (const auto& id : fixture.revoked) ca.revoke(id);

  roap::RightsIssuer ri(options.ri_id, keys.ri, ca.issue(fixture, options.ri_id, keys.ri.public_key()),
                        ca.public_key(), options.sizes);
  ri.set_ocsp_response(ca.ocsp_status(options.ri_id, now));
  ri.set_revocation_source(&ca);
  roap::DrmAgent agent(options.agent_id, keys.agent, ca.issue(fixture, options.agent_id, keys.agent.public_key()),
                       ca.public_key(), options.sizes);

  const Bytes content = generate_content(scenario.content_size_bytes, options.seed);
  objects::Permissions permissions = scenario.permissions;
  if (options.play_limit) permissions = objects::Permissions::limited(*options.play_limit);

  const std::string content_id(kContentId);
  const std::string ro_id(kRoId);
  auto packaged = in_phase("Packaging", [&] {
    return objects::package_content(content, content_id, {{"author", "drmcost"}, {"title", scenario.name}},
                                    std::string(kRightsUrl));
  });
  ri.add_catalog_entry(ro_id, packaged.dcf, packaged.kcek, permissions, options.sign_ro);

  Execution out;
  in_phase("Registration", [&] { return roap::run_registration(agent, ri, now, out.trace); });
  auto ro = in_phase("Acquisition", [&] { return roap::acquire_ro(agent, ri, ro_id, now, out.trace); });
  in_phase("Installation", [&] { return roap::install_ro(agent, ro, packaged.dcf, out.trace); });

  bool all_match = true;
  for (std::uint32_t i = 0; i < scenario.access_count; ++i) {
    Bytes plain = in_phase("Consumption", [&] { return roap::consume(agent, content_id, packaged.dcf, out.trace); });
    all_match = all_match && plain == content;
  }
  out.round_trip_verified = all_match;
  out.host_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

ScenarioRun run_scenario(const Scenario& scenario, const cost::ArchVariant& variant, const RunOptions& options) {
  Execution exec = execute_scenario(scenario, options);
  ScenarioRun run;
  run.scenario = scenario;
  run.variant = variant.name;
  run.clock_hz = options.clock_hz;
  run.report = cost::estimate(exec.trace, variant, options.clock_hz, options.tables);
  run.trace = std::move(exec.trace);
  run.round_trip_verified = exec.round_trip_verified;
  run.host_seconds = exec.host_seconds;
  return run;
}

std::vector<ScenarioRun> run_variants(const Scenario& scenario, std::span<const cost::ArchVariant> variants,
                                      const RunOptions& options) {
  RunOptions shared = options;
  if (!shared.keys) shared.keys = ActorKeys::generate();

  std::vector<std::future<ScenarioRun>> pending;
  for (const auto& variant : variants) {
    pending.push_back(std::async(std::launch::async, [&scenario, &shared, variant] {
      return run_scenario(scenario, variant, shared);
    }));
  }
  std::vector<ScenarioRun> out;
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace drmcost::scenario
