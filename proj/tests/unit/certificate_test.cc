#include <gtest/gtest.h>

#include "drmcost/common/error.h"
#include "drmcost/roap/certificate.h"
#include "test_support.h"

namespace drmcost::roap {
namespace {

using drmcost::testing::ca_fixture;
using drmcost::testing::key;

TEST(Certificate, IssueVerifyAndRoundTrip) {
  const CertificateAuthority ca("cmla-root", key("ca"));
  const auto cert = ca.issue(ca_fixture(), "agent-0001", key("agent").public_key());
  EXPECT_EQ(cert.issuer_id, "cmla-root");
  EXPECT_EQ(parse_certificate(serialize_certificate(cert)), cert);
  EXPECT_TRUE(verify_certificate(cert, ca.public_key(), at_seconds(1'104'537'600)));
  EXPECT_FALSE(verify_certificate(cert, key("ri").public_key(), at_seconds(1'104'537'600)));
}

TEST(Certificate, ValidityWindowIsInclusive) {
  const CertificateAuthority ca("cmla-root", key("ca"));
  const auto cert = ca.issue("x", key("agent").public_key(), at_seconds(100), at_seconds(200));
  EXPECT_FALSE(within_validity(cert, at_seconds(99)));
  EXPECT_TRUE(within_validity(cert, at_seconds(100)));
  EXPECT_TRUE(within_validity(cert, at_seconds(200)));
  EXPECT_FALSE(within_validity(cert, at_seconds(201)));
}

TEST(Certificate, AnyFieldChangeBreaksSignature) {
  const CertificateAuthority ca("cmla-root", key("ca"));
  const auto cert = ca.issue(ca_fixture(), "agent-0001", key("agent").public_key());
  const auto now = at_seconds(1'104'537'600);
  auto c = cert;
  c.subject_id = "agent-0002";
  EXPECT_FALSE(verify_certificate(c, ca.public_key(), now));
  c = cert;
  c.subject_public_key = key("agent2").public_key();
  EXPECT_FALSE(verify_certificate(c, ca.public_key(), now));
  c = cert;
  c.not_after = at_seconds(2'000'000'000);
  EXPECT_FALSE(verify_certificate(c, ca.public_key(), now));
}

TEST(Ocsp, StatusReflectsRevocation) {
  CertificateAuthority ca("cmla-root", key("ca"));
  ca.revoke("agent-revoked");
  const auto now = at_seconds(1'104'537'600);
  const auto good = ca.ocsp_status("agent-0001", now);
  const auto bad = ca.ocsp_status("agent-revoked", now);
  EXPECT_EQ(good.status, CertStatus::Good);
  EXPECT_EQ(bad.status, CertStatus::Revoked);
  EXPECT_TRUE(verify_ocsp(good, ca.public_key()));
  EXPECT_TRUE(verify_ocsp(bad, ca.public_key()));
  EXPECT_EQ(parse_ocsp(serialize_ocsp(bad)), bad);
  auto forged = bad;
  forged.status = CertStatus::Good;
  EXPECT_FALSE(verify_ocsp(forged, ca.public_key()));
}

TEST(CaFixture, ParsesSubjectsAndRevocations) {
  const auto f = ca_fixture();
  EXPECT_EQ(f.ca_id, "cmla-root");
  EXPECT_EQ(f.subject("agent-expired").not_after, at_seconds(1'088'640'000));
  EXPECT_TRUE(f.revoked.contains("ri-revoked"));
  EXPECT_THROW(f.subject("nobody"), Error);
}

TEST(CaFixture, RejectsMalformedLines) {
  EXPECT_THROW(parse_ca_fixture("subject = a 1 2\n"), Error);  // no ca line
  EXPECT_THROW(parse_ca_fixture("ca = x\nsubject = a 5 2\n"), Error);
  EXPECT_THROW(parse_ca_fixture("ca = x\nsubject = a 1\n"), Error);
  EXPECT_THROW(parse_ca_fixture("ca = x\nbogus = 1\n"), Error);
  EXPECT_THROW(parse_ca_fixture("ca = x\nrevoked = a b\n"), Error);
}

}  // namespace
}  // namespace drmcost::roap
