#include <gtest/gtest.h>

#include "drmcost/common/bytes.h"
#include "drmcost/common/error.h"
#include "drmcost/crypto/key_fixture.h"
#include "drmcost/crypto/primitives.h"
#include "drmcost/crypto/rsa.h"
#include "test_support.h"

namespace drmcost::crypto {
namespace {

using drmcost::testing::key;

TEST(BigUint, ByteAndHexConversions) {
  const auto v = BigUint::from_hex("0102ff");
  EXPECT_EQ(v, BigUint(0x0102ff));
  EXPECT_EQ(to_hex(v.to_bytes(5)), "00000102ff");
  EXPECT_EQ(BigUint::from_bytes(v.to_bytes()), v);
  EXPECT_EQ(v.bit_length(), 17);
  EXPECT_THROW(v.to_bytes(2), Error);
  EXPECT_TRUE(BigUint().is_zero());
  EXPECT_LT(BigUint(5), BigUint(6));
}

TEST(Rsa, FixedPointsZeroAndOne) {
  const auto& kp = key("agent");
  for (std::uint64_t v : {0u, 1u}) {
    EXPECT_EQ(rsa_apply(kp.modulus, kp.public_exponent, BigUint(v)), BigUint(v));
    EXPECT_EQ(rsa_apply(kp.modulus, kp.private_exponent, BigUint(v)), BigUint(v));
  }
}

TEST(Rsa, MatchesIndependentModularExponentiation) {
  // Python pow(m, e, n) over the fixture's agent key.
  const auto& kp = key("agent");
  const auto m = BigUint::from_hex(
      "0123456789abcdef0123456789abcdef0123456789abcdef0123456789abcdef"
      "0123456789abcdef0123456789abcdef0123456789abcdef0123456789abcdef");
  const auto c = rsa_apply(kp.modulus, kp.public_exponent, m);
  EXPECT_EQ(to_hex(c.to_bytes(kRsaModulusBytes)),
            "34fac16c3409bb071239f7c33c782b7a09b1509814f8bc748ca53e14a07630c0d83dc711c1360be78bb1abd96770032e"
            "d8bc44a2b836455176dd6a0e01f30f88a745a5521d5e0f51a2b1d25bfcbed35217045bbc37bc34784638cf4795358679"
            "9c03e31a80e56b234e2096c7c53d42b2c07cabe35f69b5799f134333ee0b597e");
  EXPECT_EQ(rsa_apply(kp.modulus, kp.private_exponent, c), m);
}

TEST(Rsa, PrivateInvertsPublicOnRandomInputs) {
  const auto& kp = key("ri");
  for (int i = 0; i < 100; ++i) {
    const auto m = BigUint::random_below(kp.modulus);
    const auto c = rsa_apply(kp.modulus, kp.public_exponent, m);
    ASSERT_EQ(rsa_apply(kp.modulus, kp.private_exponent, c), m) << i;
  }
}

TEST(Rsa, InputAtOrAboveModulusIsRejected) {
  const auto& kp = key("agent");
  try {
    rsa_apply(kp.modulus, kp.public_exponent, kp.modulus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::out_of_range);
  }
}

TEST(Rsa, GeneratedKeysAreWellFormed) {
  const auto kp = generate_rsa_keypair();
  EXPECT_EQ(kp.modulus.bit_length(), kRsaModulusBits);
  EXPECT_EQ(kp.public_exponent, BigUint(65537));
  EXPECT_NO_THROW(validate_keypair(kp));
  auto broken = kp;
  broken.private_exponent = BigUint(3);
  EXPECT_THROW(validate_keypair(broken), Error);
}

TEST(Rsa, SignatureEncodingLayout) {
  const Bytes em = signature_encoding(as_bytes("abc"));
  ASSERT_EQ(em.size(), kRsaModulusBytes);
  Bytes expected = {0x00, 0x01};
  expected.insert(expected.end(), kRsaModulusBytes - 3 - kDigestSize, 0xff);
  expected.push_back(0x00);
  const Bytes digest = from_hex("a9993e364706816aba3e25717850c26c9cd0d89d");
  expected.insert(expected.end(), digest.begin(), digest.end());
  EXPECT_EQ(em, expected);
}

TEST(Rsa, SignVerifyAndRejectTampering) {
  const auto& kp = key("ri");
  const Bytes msg = to_bytes(as_bytes("registration response body"));
  Bytes sig = pss_sign(kp, msg);
  EXPECT_EQ(sig.size(), kRsaModulusBytes);
  EXPECT_TRUE(pss_verify(kp.public_key(), msg, sig));
  EXPECT_FALSE(pss_verify(kp.public_key(), as_bytes("registration response bodY"), sig));
  EXPECT_FALSE(pss_verify(key("agent").public_key(), msg, sig));
  sig[40] ^= 0x04;
  EXPECT_FALSE(pss_verify(kp.public_key(), msg, sig));
  EXPECT_FALSE(pss_verify(kp.public_key(), msg, Bytes(12)));
  EXPECT_FALSE(pss_verify(kp.public_key(), msg, Bytes(kRsaModulusBytes, 0xff)));
}

TEST(KeyFixture, FormatParseRoundTrip) {
  const auto& pairs = drmcost::testing::fixture_keys();
  ASSERT_GE(pairs.size(), 5u);
  EXPECT_EQ(parse_key_fixture(format_key_fixture(pairs)), pairs);
  EXPECT_THROW(find_key(pairs, "nobody"), Error);
}

TEST(KeyFixture, RejectsInconsistentKeys) {
  const auto& kp = key("ca");
  const std::string good = "name = x\nn = " + kp.modulus.to_hex() + "\ne = " + kp.public_exponent.to_hex() +
                           "\nd = " + kp.private_exponent.to_hex() + "\n";
  EXPECT_NO_THROW(parse_key_fixture(good));
  const std::string wrong_d = "name = x\nn = " + kp.modulus.to_hex() + "\ne = " + kp.public_exponent.to_hex() +
                              "\nd = " + key("ri").private_exponent.to_hex() + "\n";
  EXPECT_THROW(parse_key_fixture(wrong_d), Error);
  EXPECT_THROW(parse_key_fixture("name = x\nn = 00\n"), Error);
}

}  // namespace
}  // namespace drmcost::crypto
