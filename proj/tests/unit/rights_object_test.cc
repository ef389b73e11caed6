#include <gtest/gtest.h>

#include "drmcost/common/error.h"
#include "drmcost/common/kv_record.h"
#include "drmcost/crypto/primitives.h"
#include "drmcost/objects/rights_object.h"
#include "test_support.h"

namespace drmcost::objects {
namespace {

using drmcost::testing::key;

struct Issued {
  PackagedContent packaged;
  RightsObject ro;
};

Issued issue(Permissions perms = Permissions::unlimited(), bool sign = false) {
  auto p = package_content(scenario::generate_content(64, 1), "cid-1", {}, "url");
  auto ro = issue_rights_object(key("ri"), key("agent").public_key(), "ro-1", p.dcf, p.kcek, perms, sign);
  return {std::move(p), std::move(ro)};
}

TEST(RightsObject, IssuedFieldsHaveExpectedShapes) {
  const auto [p, ro] = issue();
  EXPECT_EQ(ro.ro_id, "ro-1");
  EXPECT_EQ(ro.content_id, "cid-1");
  EXPECT_EQ(ro.dcf_hash, compute_dcf_hash(p.dcf));
  EXPECT_EQ(ro.wrapped_kcek.size(), kWrappedKcekSize);
  EXPECT_EQ(ro.c1.size(), kC1Size);
  EXPECT_EQ(ro.c2.size(), kC2Size);
  EXPECT_FALSE(ro.signature.has_value());
}

TEST(RightsObject, KeysRecoverableOnlyWithAgentPrivateKey) {
  // Walk the key chain by hand with the raw primitives.
  const auto [p, ro] = issue();
  const auto& agent = key("agent");
  const auto z = crypto::rsa_apply(agent.modulus, agent.private_exponent, crypto::BigUint::from_bytes(ro.c1));
  const auto kek = crypto::SymmetricKey::from_bytes(crypto::kdf2(z.to_bytes(crypto::kRsaModulusBytes), 16));
  const Bytes pair = crypto::aes_key_unwrap(kek, ro.c2);
  ASSERT_EQ(pair.size(), 32u);
  const auto kmac = crypto::SymmetricKey::from_bytes(ByteView(pair).first(16));
  const auto krek = crypto::SymmetricKey::from_bytes(ByteView(pair).subspan(16));
  EXPECT_EQ(crypto::hmac_sha1(kmac.bytes(), as_bytes(canonical_body(ro))), ro.mac);
  EXPECT_EQ(crypto::SymmetricKey::from_bytes(crypto::aes_key_unwrap(krek, ro.wrapped_kcek)), p.kcek);
}

TEST(RightsObject, FreshSecretsPerIssue) {
  const auto a = issue().ro;
  const auto b = issue().ro;
  EXPECT_NE(a.c1, b.c1);
  EXPECT_NE(a.c2, b.c2);
  EXPECT_NE(a.mac, b.mac);
}

TEST(RightsObject, CodecRoundTrip) {
  for (bool sign : {false, true}) {
    for (auto perms : {Permissions::unlimited(), Permissions::limited(25)}) {
      const auto ro = issue(perms, sign).ro;
      const std::string text = serialize_rights_object(ro);
      EXPECT_EQ(parse_rights_object(text), ro);
      EXPECT_EQ(serialize_rights_object(parse_rights_object(text)), text);
    }
  }
}

TEST(RightsObject, SignatureCoversCanonicalBody) {
  const auto ro = issue(Permissions::unlimited(), true).ro;
  ASSERT_TRUE(ro.signature);
  EXPECT_TRUE(crypto::pss_verify(key("ri").public_key(), as_bytes(canonical_body(ro)), *ro.signature));
  EXPECT_EQ(canonical_body(ro).find("mac="), std::string::npos);
}

TEST(RightsObject, DuplicateFieldsRejected) {
  const std::string text = serialize_rights_object(issue().ro);
  const std::string dup = text + "ro_id=ro-2\n";
  EXPECT_THROW(parse_rights_object(dup), Error);
}

TEST(RightsObject, UnknownAndMissingFieldsRejected) {
  KvRecord r = KvRecord::parse(serialize_rights_object(issue().ro));
  KvRecord extra = r;
  extra.set("bonus", "1");
  EXPECT_THROW(parse_rights_object(extra.serialize()), Error);
  KvRecord missing = r;
  missing.erase("c2");
  EXPECT_THROW(parse_rights_object(missing.serialize()), Error);
}

TEST(RightsObject, MisSizedBinaryFieldsRejected) {
  KvRecord r = KvRecord::parse(serialize_rights_object(issue().ro));
  for (const char* field : {"c1", "c2", "wrapped_kcek", "mac", "dcf_hash"}) {
    KvRecord bad = r;
    Bytes value = bad.get_bytes(field);
    value.push_back(0);
    bad.set_bytes(field, value);
    EXPECT_THROW(parse_rights_object(bad.serialize()), Error) << field;
  }
}

}  // namespace
}  // namespace drmcost::objects
