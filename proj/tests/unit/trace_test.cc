#include <gtest/gtest.h>

#include "drmcost/common/error.h"
#include "drmcost/cost/trace.h"

namespace drmcost::cost {
namespace {

TEST(Trace, NamesRoundTrip) {
  for (auto id : kAllAlgorithms) EXPECT_EQ(parse_algorithm(to_string(id)), id);
  for (auto p : kAllPhases) EXPECT_EQ(parse_phase(to_string(p)), p);
  EXPECT_FALSE(parse_algorithm("Md5"));
  EXPECT_FALSE(parse_phase("Packaging"));
}

TEST(Trace, RejectsImpossibleEvents) {
  OpTrace t;
  EXPECT_THROW(t.record(Phase::Consumption, AlgorithmId::AesDec, 0), Error);
  EXPECT_THROW(t.record(Phase::Registration, AlgorithmId::RsaPriv, 2048), Error);
  EXPECT_NO_THROW(t.record(Phase::Registration, AlgorithmId::RsaPriv, 1024));
  EXPECT_EQ(t.size(), 1u);
}

TEST(Trace, CountsBitsAndMultiset) {
  OpTrace t;
  t.record(Phase::Consumption, AlgorithmId::AesDec, 256);
  t.record(Phase::Consumption, AlgorithmId::Sha1, 100);
  t.record(Phase::Consumption, AlgorithmId::AesDec, 128);
  t.record(Phase::Installation, AlgorithmId::AesDec, 256);
  EXPECT_EQ(t.count(Phase::Consumption, AlgorithmId::AesDec), 2u);
  EXPECT_EQ(t.bits(Phase::Consumption, AlgorithmId::AesDec), 384u);
  const auto ms = t.multiset(Phase::Consumption);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
}

TEST(Trace, TextRoundTrip) {
  OpTrace t;
  t.record(Phase::Registration, AlgorithmId::Sha1, 8192);
  t.record(Phase::Registration, AlgorithmId::RsaPriv, 1024);
  t.record(Phase::Consumption, AlgorithmId::AesDec, 29'360'128);
  EXPECT_EQ(parse_trace(format_trace(t)), t);
  EXPECT_EQ(parse_trace("# comment\n\nAcquisition RsaPub 1024\n").size(), 1u);
}

TEST(Trace, TextParseErrors) {
  EXPECT_THROW(parse_trace("Registration Sha1\n"), Error);
  EXPECT_THROW(parse_trace("Registration Md5 10\n"), Error);
  EXPECT_THROW(parse_trace("Nowhere Sha1 10\n"), Error);
  EXPECT_THROW(parse_trace("Registration Sha1 ten\n"), Error);
  EXPECT_THROW(parse_trace("Registration Sha1 10 extra\n"), Error);
  EXPECT_THROW(parse_trace("Registration RsaPub 1000\n"), Error);
}

}  // namespace
}  // namespace drmcost::cost
