#include <gtest/gtest.h>

#include <random>

#include "drmcost/common/error.h"
#include "drmcost/cost/cost_model.h"

namespace drmcost::cost {
namespace {

OpEvent one_unit(AlgorithmId id) { return {Phase::Consumption, id, is_rsa(id) ? 1024u : 128u}; }

OpTrace random_trace(std::mt19937_64& rng, std::size_t n) {
  OpTrace t;
  std::uniform_int_distribution<std::size_t> alg(0, kAlgorithmCount - 1), phase(0, kPhaseCount - 1);
  std::uniform_int_distribution<std::uint64_t> bits(1, 1 << 20);
  for (std::size_t i = 0; i < n; ++i) {
    auto id = kAllAlgorithms[alg(rng)];
    t.record(kAllPhases[phase(rng)], id, is_rsa(id) ? kRsaOperandBits : bits(rng));
  }
  return t;
}

TEST(CostTable, SoftwareOneUnitCosts) {
  const auto sw = CostProfile::software();
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::AesEnc), sw[AlgorithmId::AesEnc]), 1'190u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::AesDec), sw[AlgorithmId::AesDec]), 1'780u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::Sha1), sw[AlgorithmId::Sha1]), 400u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::HmacSha1), sw[AlgorithmId::HmacSha1]), 1'600u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::RsaPub), sw[AlgorithmId::RsaPub]), 2'160'000u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::RsaPriv), sw[AlgorithmId::RsaPriv]), 37'740'000u);
}

TEST(CostTable, HardwareOneUnitCosts) {
  const auto hw = CostProfile::hardware();
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::AesEnc), hw[AlgorithmId::AesEnc]), 10u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::AesDec), hw[AlgorithmId::AesDec]), 20u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::Sha1), hw[AlgorithmId::Sha1]), 20u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::HmacSha1), hw[AlgorithmId::HmacSha1]), 260u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::RsaPub), hw[AlgorithmId::RsaPub]), 10'000u);
  EXPECT_EQ(cost_of(one_unit(AlgorithmId::RsaPriv), hw[AlgorithmId::RsaPriv]), 260'000u);
}

TEST(CostOf, WorkedExamples) {
  const auto sw = CostProfile::software();
  // 3.5 MiB decrypted: 229,376 blocks at 830 plus the 950 key schedule.
  EXPECT_EQ(cost_of({Phase::Consumption, AlgorithmId::AesDec, 29'360'128}, sw[AlgorithmId::AesDec]), 190'383'030u);
  EXPECT_EQ(cost_of({Phase::Consumption, AlgorithmId::Sha1, 128}, sw[AlgorithmId::Sha1]), 400u);
  EXPECT_EQ(cost_of({Phase::Consumption, AlgorithmId::RsaPriv, 1024}, CostProfile::hardware()[AlgorithmId::RsaPriv]),
            260'000u);
  // Partial blocks round up.
  EXPECT_EQ(cost_of({Phase::Consumption, AlgorithmId::Sha1, 129}, sw[AlgorithmId::Sha1]), 800u);
  EXPECT_EQ(cost_of({Phase::Consumption, AlgorithmId::Sha1, 1}, sw[AlgorithmId::Sha1]), 400u);
}

TEST(CostOf, UnitMismatchIsAnError) {
  try {
    cost_of(one_unit(AlgorithmId::RsaPub), CostEntry{0, 5, CostUnit::PerBlock128});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unit_mismatch);
  }
  EXPECT_THROW(cost_of(one_unit(AlgorithmId::Sha1), CostEntry{0, 5, CostUnit::PerOp1024}), Error);
}

TEST(Estimate, PkiOperationsOnly) {
  OpTrace t;
  for (int i = 0; i < 3; ++i) t.record(Phase::Registration, AlgorithmId::RsaPriv, 1024);
  for (int i = 0; i < 4; ++i) t.record(Phase::Registration, AlgorithmId::RsaPub, 1024);
  const auto sw = estimate(t, ArchVariant::all_software());
  EXPECT_EQ(sw.total_cycles, 121'860'000u);
  EXPECT_DOUBLE_EQ(sw.total_seconds, 0.6093);
  const auto hw = estimate(t, ArchVariant::all_hardware());
  EXPECT_EQ(hw.total_cycles, 820'000u);
  EXPECT_DOUBLE_EQ(hw.total_seconds, 0.0041);
  // RSA stays in software under the mixed split.
  EXPECT_EQ(estimate(t, ArchVariant::mixed()).total_cycles, 121'860'000u);
}

TEST(Estimate, EmptyTraceIsAllZero) {
  const auto r = estimate(OpTrace{}, ArchVariant::mixed());
  EXPECT_EQ(r.total_cycles, 0u);
  EXPECT_EQ(r.total_seconds, 0.0);
  EXPECT_EQ(r.energy_proxy, 0u);
  for (auto id : kAllAlgorithms) {
    EXPECT_EQ(r.cycles(id), 0u);
    EXPECT_EQ(r.percent(id), 0.0);
  }
  for (auto p : kAllPhases) EXPECT_EQ(r.cycles(p), 0u);
}

TEST(Estimate, ZeroClockRejected) {
  EXPECT_THROW(estimate(OpTrace{}, ArchVariant::mixed(), 0), Error);
}

TEST(Estimate, SecondsScaleWithClock) {
  OpTrace t;
  t.record(Phase::Acquisition, AlgorithmId::RsaPriv, 1024);
  const auto a = estimate(t, ArchVariant::all_software(), 200'000'000);
  const auto b = estimate(t, ArchVariant::all_software(), 100'000'000);
  EXPECT_EQ(a.total_cycles, b.total_cycles);
  EXPECT_DOUBLE_EQ(b.total_seconds, 2 * a.total_seconds);
}

TEST(Variants, PresetsAndParsing) {
  EXPECT_EQ(parse_variant("sw").name, "all_software");
  EXPECT_EQ(parse_variant("mixed").name, "mixed");
  EXPECT_EQ(parse_variant("hw").name, "all_hardware");
  EXPECT_EQ(parse_variant("all_hardware").name, "all_hardware");
  const auto mixed = ArchVariant::mixed();
  for (auto id : kAllAlgorithms) {
    EXPECT_EQ(mixed[id], is_rsa(id) ? Realization::Software : Realization::Hardware);
  }
  try {
    parse_variant("fpga");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_variant);
  }
}

TEST(Compare, IdenticalVariantsHaveUnitRatio) {
  std::mt19937_64 rng(1);
  const auto t = random_trace(rng, 50);
  const std::vector<ArchVariant> vs = {ArchVariant::mixed(), ArchVariant::mixed()};
  const auto c = compare(t, vs);
  ASSERT_EQ(c.reports.size(), 2u);
  EXPECT_EQ(c.ratio[0][1], 1.0);
  EXPECT_EQ(c.ratio[1][0], 1.0);
  EXPECT_THROW(compare(t, std::span(vs).first(1)), Error);
}

TEST(Compare, RatioMatchesTotals) {
  std::mt19937_64 rng(2);
  const auto t = random_trace(rng, 50);
  const std::vector<ArchVariant> vs = {ArchVariant::all_software(), ArchVariant::all_hardware()};
  const auto c = compare(t, vs);
  EXPECT_DOUBLE_EQ(c.ratio[0][1], c.reports[0].total_seconds / c.reports[1].total_seconds);
  EXPECT_GT(c.ratio[0][1], 1.0);
}

// Properties over random traces.

TEST(CostProperties, ConservationSums) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    const auto t = random_trace(rng, 1 + round * 3);
    for (const auto& v : {ArchVariant::all_software(), ArchVariant::mixed(), ArchVariant::all_hardware()}) {
      const auto r = estimate(t, v);
      Cycles by_alg = 0, by_phase = 0;
      double pct = 0;
      for (auto id : kAllAlgorithms) {
        by_alg += r.cycles(id);
        pct += r.percent(id);
      }
      for (auto p : kAllPhases) by_phase += r.cycles(p);
      EXPECT_EQ(by_alg, r.total_cycles);
      EXPECT_EQ(by_phase, r.total_cycles);
      EXPECT_NEAR(pct, 100.0, 1e-9);
      EXPECT_EQ(r.energy_proxy, r.total_cycles);
    }
  }
}

TEST(CostProperties, LinearOverConcatenation) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 30; ++round) {
    const auto a = random_trace(rng, 20);
    const auto b = random_trace(rng, 20);
    OpTrace ab = a;
    ab.append(b);
    for (const auto& v : {ArchVariant::all_software(), ArchVariant::mixed(), ArchVariant::all_hardware()}) {
      const auto ra = estimate(a, v), rb = estimate(b, v), rab = estimate(ab, v);
      EXPECT_EQ(rab.total_cycles, ra.total_cycles + rb.total_cycles);
      for (auto p : kAllPhases) EXPECT_EQ(rab.cycles(p), ra.cycles(p) + rb.cycles(p));
    }
  }
}

TEST(CostProperties, MonotoneInInputSize) {
  const auto sw = CostProfile::software();
  const auto hw = CostProfile::hardware();
  for (auto id : kAllAlgorithms) {
    if (is_rsa(id)) continue;
    Cycles prev_sw = 0, prev_hw = 0;
    for (std::uint64_t bits = 1; bits < 5000; bits += 37) {
      const OpEvent e{Phase::Consumption, id, bits};
      const Cycles csw = cost_of(e, sw[id]), chw = cost_of(e, hw[id]);
      EXPECT_GE(csw, prev_sw);
      EXPECT_GE(chw, prev_hw);
      prev_sw = csw;
      prev_hw = chw;
    }
  }
}

TEST(CostProperties, HardwareNeverSlowerThanSoftware) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const auto t = random_trace(rng, 40);
    const auto sw = estimate(t, ArchVariant::all_software());
    const auto mixed = estimate(t, ArchVariant::mixed());
    const auto hw = estimate(t, ArchVariant::all_hardware());
    EXPECT_LE(mixed.total_cycles, sw.total_cycles);
    EXPECT_LE(hw.total_cycles, mixed.total_cycles);
    for (auto id : kAllAlgorithms) EXPECT_LE(hw.cycles(id), sw.cycles(id));
  }
}

TEST(ProfileIo, OverridesAndRoundTrip) {
  const CostTables base;
  EXPECT_EQ(parse_cost_tables(format_cost_tables(base)), base);
  const auto t = parse_cost_tables("# cheaper private key\n[software]\nRsaPriv 0 20000000 op\n");
  EXPECT_EQ(t.software[AlgorithmId::RsaPriv].unit_cycles, 20'000'000u);
  EXPECT_EQ(t.software[AlgorithmId::RsaPub], base.software[AlgorithmId::RsaPub]);
  EXPECT_EQ(t.hardware, base.hardware);
}

TEST(ProfileIo, RejectsMalformedRows) {
  EXPECT_THROW(parse_cost_tables("RsaPriv 0 1 op\n"), Error);  // no section
  EXPECT_THROW(parse_cost_tables("[software]\nRsaPriv 0 1\n"), Error);
  EXPECT_THROW(parse_cost_tables("[software]\nMd5 0 1 block\n"), Error);
  EXPECT_THROW(parse_cost_tables("[firmware]\n"), Error);
  EXPECT_THROW(parse_cost_tables("[software]\nRsaPriv 0 1 block\n"), Error);
}

}  // namespace
}  // namespace drmcost::cost
