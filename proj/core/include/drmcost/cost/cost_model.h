#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drmcost/cost/trace.h"

namespace drmcost::cost {

using Cycles = std::uint64_t;

inline constexpr std::uint64_t kDefaultClockHz = 200'000'000;
inline constexpr std::uint64_t kBlockBits = 128;

enum class CostUnit : std::uint8_t { PerBlock128, PerOp1024 };

/// One row of the execution-time table: a fixed offset (key schedule or
/// fixed-length inner hash) plus a rate per 128-bit block or 1024-bit op.
struct CostEntry {
  Cycles offset_cycles = 0;
  Cycles unit_cycles = 0;
  CostUnit unit = CostUnit::PerBlock128;

  bool operator==(const CostEntry&) const = default;
};

/// Rates for every algorithm under one realization (software or hardware).
class CostProfile {
 public:
  /// ARM9 software figures.
  static CostProfile software();
  /// Dedicated hardware macro figures.
  static CostProfile hardware();

  const CostEntry& operator[](AlgorithmId id) const { return entries_[index_of(id)]; }
  void set(AlgorithmId id, CostEntry entry) { entries_[index_of(id)] = entry; }

  bool operator==(const CostProfile&) const = default;

 private:
  std::array<CostEntry, kAlgorithmCount> entries_{};
};

enum class Realization : std::uint8_t { Software, Hardware };

struct CostTables {
  CostProfile software = CostProfile::software();
  CostProfile hardware = CostProfile::hardware();

  const CostProfile& profile(Realization r) const { return r == Realization::Software ? software : hardware; }
  bool operator==(const CostTables&) const = default;
};

/// Assignment of each algorithm to a software or hardware realization.
struct ArchVariant {
  std::string name;
  std::array<Realization, kAlgorithmCount> assignment{};

  Realization operator[](AlgorithmId id) const { return assignment[index_of(id)]; }

  static ArchVariant all_software();
  /// AES, SHA-1 and HMAC-SHA-1 in hardware; RSA in software.
  static ArchVariant mixed();
  static ArchVariant all_hardware();
};

/// Accepts "sw", "mixed", "hw" and the long preset names.
/// Throws Error(unknown_variant).
ArchVariant parse_variant(std::string_view name);

/// Per-block: offset + unit * ceil(bits / 128). Per-op: unit * ceil(bits / 1024).
/// Throws Error(unit_mismatch) when an RSA row is priced per block or a
/// symmetric row per op.
Cycles cost_of(const OpEvent& event, const CostEntry& entry);

struct Report {
  std::string variant;
  std::uint64_t clock_hz = kDefaultClockHz;
  std::array<Cycles, kAlgorithmCount> algorithm_cycles{};
  std::array<Cycles, kPhaseCount> phase_cycles{};
  Cycles total_cycles = 0;
  double total_seconds = 0.0;
  /// Share of total_cycles per algorithm, in percent; all zero for an empty trace.
  std::array<double, kAlgorithmCount> algorithm_percent{};
  /// Relative energy estimate: energy is taken to be proportional to cycles.
  Cycles energy_proxy = 0;

  Cycles cycles(AlgorithmId id) const { return algorithm_cycles[index_of(id)]; }
  Cycles cycles(Phase phase) const { return phase_cycles[index_of(phase)]; }
  double percent(AlgorithmId id) const { return algorithm_percent[index_of(id)]; }
  double seconds(Phase phase) const { return static_cast<double>(cycles(phase)) / static_cast<double>(clock_hz); }

  bool operator==(const Report&) const = default;
};

/// Throws Error(invalid_argument) when clock_hz is zero.
Report estimate(const OpTrace& trace, const ArchVariant& variant, std::uint64_t clock_hz = kDefaultClockHz,
                const CostTables& tables = {});

struct Comparison {
  std::vector<Report> reports;
  /// ratio[i][j] = reports[i].total_seconds / reports[j].total_seconds.
  std::vector<std::vector<double>> ratio;
};

/// Requires at least two variants.
Comparison compare(const OpTrace& trace, std::span<const ArchVariant> variants,
                   std::uint64_t clock_hz = kDefaultClockHz, const CostTables& tables = {});

// Profile override file:
//
//   [software]
//   AesEnc 360 830 block
//   RsaPriv 0 37740000 op
//   [hardware]
//   ...
//
// Each line is `algorithm offset_cycles unit_cycles block|op`. Rows not
// mentioned keep the values of `base`.
CostTables parse_cost_tables(std::string_view text, const CostTables& base = {});
CostTables load_cost_tables(const std::filesystem::path& path, const CostTables& base = {});
std::string format_cost_tables(const CostTables& tables);

}  // namespace drmcost::cost
