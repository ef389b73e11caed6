#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drmcost/common/error.h"
#include "drmcost/cost/cost_model.h"
#include "drmcost/cost/trace.h"
#include "drmcost/crypto/key_fixture.h"
#include "drmcost/crypto/rsa.h"
#include "drmcost/objects/rights_object.h"
#include "drmcost/roap/certificate.h"
#include "drmcost/roap/message.h"

namespace drmcost::scenario {

/// A use case: register, acquire, install once, then consume
/// `access_count` times.
struct Scenario {
  std::string name;
  std::uint64_t content_size_bytes = 0;
  std::uint32_t access_count = 0;
  objects::Permissions permissions;

  bool operator==(const Scenario&) const = default;
};

inline constexpr std::uint64_t kMusicPlayerBytes = 3'670'016;  // 3.5 MiB
inline constexpr std::uint32_t kMusicPlayerPlays = 5;
inline constexpr std::uint64_t kRingtoneBytes = 30'720;  // 30 KiB
inline constexpr std::uint32_t kRingtoneCalls = 25;

Scenario music_player();
Scenario ringtone();
/// Throws Error(invalid_argument) unless size >= 1 and accesses >= 1.
Scenario custom(std::uint64_t size_bytes, std::uint32_t accesses);
/// "music_player", "ringtone" or "custom:SIZE:N". Throws Error(unknown_scenario).
Scenario build_scenario(std::string_view name);

struct ActorKeys {
  crypto::RsaKeyPair ca;
  crypto::RsaKeyPair ri;
  crypto::RsaKeyPair agent;

  static ActorKeys generate();
  /// Uses the pairs named "ca", "ri" and "agent".
  static ActorKeys from_fixture(std::span<const crypto::NamedKeyPair> pairs);
};

/// Subjects agent-0001 and ri-0001, valid 2004-01-01 .. 2009-01-01, nothing revoked.
roap::CaFixture default_ca_fixture();
/// 2005-01-01T00:00:00Z.
roap::Timestamp default_now();

struct RunOptions {
  std::uint64_t clock_hz = cost::kDefaultClockHz;
  std::uint64_t seed = 1;
  cost::CostTables tables;
  roap::MessageSizes sizes;
  /// Fresh key pairs are generated when absent.
  std::optional<ActorKeys> keys;
  std::optional<roap::CaFixture> ca_fixture;
  roap::Timestamp now = default_now();
  std::string agent_id = "agent-0001";
  std::string ri_id = "ri-0001";
  /// Replaces the scenario's unlimited play permission with a count limit.
  std::optional<std::uint32_t> play_limit;
  bool sign_ro = false;
};

/// Protocol failure attributed to the lifecycle phase it happened in
/// ("Packaging", "Registration", "Acquisition", "Installation", "Consumption").
class PhaseError : public Error {
 public:
  PhaseError(std::string phase, const Error& cause);

  const std::string& phase() const noexcept { return phase_; }

 private:
  std::string phase_;
};

/// Deterministic pseudorandom content.
Bytes generate_content(std::uint64_t size, std::uint64_t seed);

struct Execution {
  cost::OpTrace trace;
  bool round_trip_verified = false;
  double host_seconds = 0.0;
};

/// Runs the full lifecycle with real crypto and returns the agent trace.
/// Throws PhaseError.
Execution execute_scenario(const Scenario& scenario, const RunOptions& options);

struct ScenarioRun {
  Scenario scenario;
  std::string variant;
  std::uint64_t clock_hz = cost::kDefaultClockHz;
  cost::OpTrace trace;
  cost::Report report;
  bool round_trip_verified = false;
  /// Host wall-clock time of the simulation itself; not part of the model.
  double host_seconds = 0.0;
};

ScenarioRun run_scenario(const Scenario& scenario, const cost::ArchVariant& variant, const RunOptions& options);

/// One independent run per variant, executed concurrently with isolated actors.
std::vector<ScenarioRun> run_variants(const Scenario& scenario, std::span<const cost::ArchVariant> variants,
                                      const RunOptions& options);

}  // namespace drmcost::scenario
