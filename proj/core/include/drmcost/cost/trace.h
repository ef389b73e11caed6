#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace drmcost::cost {

enum class AlgorithmId : std::uint8_t { AesEnc, AesDec, Sha1, HmacSha1, RsaPub, RsaPriv };
inline constexpr std::size_t kAlgorithmCount = 6;
inline constexpr std::array<AlgorithmId, kAlgorithmCount> kAllAlgorithms = {
    AlgorithmId::AesEnc, AlgorithmId::AesDec,  AlgorithmId::Sha1,
    AlgorithmId::HmacSha1, AlgorithmId::RsaPub, AlgorithmId::RsaPriv};

enum class Phase : std::uint8_t { Registration, Acquisition, Installation, Consumption };
inline constexpr std::size_t kPhaseCount = 4;
inline constexpr std::array<Phase, kPhaseCount> kAllPhases = {Phase::Registration, Phase::Acquisition,
                                                              Phase::Installation, Phase::Consumption};

std::string_view to_string(AlgorithmId id);
std::string_view to_string(Phase phase);
std::optional<AlgorithmId> parse_algorithm(std::string_view name);
std::optional<Phase> parse_phase(std::string_view name);

constexpr std::size_t index_of(AlgorithmId id) { return static_cast<std::size_t>(id); }
constexpr std::size_t index_of(Phase phase) { return static_cast<std::size_t>(phase); }
constexpr bool is_rsa(AlgorithmId id) { return id == AlgorithmId::RsaPub || id == AlgorithmId::RsaPriv; }

inline constexpr std::uint64_t kRsaOperandBits = 1024;

struct OpEvent {
  Phase phase;
  AlgorithmId algorithm;
  std::uint64_t input_bits;

  bool operator==(const OpEvent&) const = default;
  auto operator<=>(const OpEvent&) const = default;
};

/// Ordered log of metered crypto operations for one protocol run.
class OpTrace {
 public:
  /// Throws Error(invalid_argument) for zero-bit events and for RSA events
  /// whose size is not 1024 bits.
  void record(OpEvent event);
  void record(Phase phase, AlgorithmId algorithm, std::uint64_t input_bits) {
    record(OpEvent{phase, algorithm, input_bits});
  }
  void append(const OpTrace& other);

  const std::vector<OpEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  auto begin() const { return events_.begin(); }
  auto end() const { return events_.end(); }

  std::size_t count(Phase phase, AlgorithmId algorithm) const;
  std::uint64_t bits(Phase phase, AlgorithmId algorithm) const;
  /// Events of one phase, sorted; equality of these is the trace-determinism check.
  std::vector<OpEvent> multiset(Phase phase) const;

  bool operator==(const OpTrace&) const = default;

 private:
  std::vector<OpEvent> events_;
};

/// Text form: one `phase algorithm input_bits` line per event; blank lines
/// and lines starting with '#' are ignored.
std::string format_trace(const OpTrace& trace);
OpTrace parse_trace(std::string_view text);

}  // namespace drmcost::cost
