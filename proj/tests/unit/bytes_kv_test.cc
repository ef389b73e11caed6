#include <gtest/gtest.h>

#include "drmcost/common/bytes.h"
#include "drmcost/common/error.h"
#include "drmcost/common/kv_record.h"

namespace drmcost {
namespace {

TEST(Bytes, HexRoundTrip) {
  const Bytes b = {0x00, 0x7f, 0x80, 0xff};
  EXPECT_EQ(to_hex(b), "007f80ff");
  EXPECT_EQ(from_hex("007F80ff"), b);
  EXPECT_THROW(from_hex("abc"), Error);
  EXPECT_THROW(from_hex("zz"), Error);
}

TEST(Bytes, Base64KnownValuesAndStrictness) {
  EXPECT_EQ(to_base64(as_bytes("foobar")), "Zm9vYmFy");
  EXPECT_EQ(to_base64(as_bytes("fo")), "Zm8=");
  EXPECT_EQ(from_base64("Zm9vYg=="), to_bytes(as_bytes("foob")));
  EXPECT_TRUE(from_base64("").empty());
  EXPECT_THROW(from_base64("Zm9"), Error);
  EXPECT_THROW(from_base64("Zm9v!mFy"), Error);
}

TEST(Bytes, BigEndianAppend) {
  Bytes b;
  append_u32_be(b, 0x01020304);
  append_u64_be(b, 5);
  EXPECT_EQ(to_hex(b), "010203040000000000000005");
}

TEST(KvRecord, SerializesSortedAndParsesBack) {
  KvRecord r;
  r.set("zeta", "last");
  r.set("alpha", "first");
  r.set_uint("count", 42);
  r.set_int("delta", -7);
  r.set_bytes("blob", Bytes{1, 2, 3});
  const std::string text = r.serialize();
  EXPECT_EQ(text, "alpha=first\nblob=AQID\ncount=42\ndelta=-7\nzeta=last\n");
  const KvRecord back = KvRecord::parse(text);
  EXPECT_EQ(back, r);
  EXPECT_EQ(back.get_uint("count"), 42u);
  EXPECT_EQ(back.get_int("delta"), -7);
  EXPECT_EQ(back.get_bytes("blob", 3), (Bytes{1, 2, 3}));
}

TEST(KvRecord, StrictParseRejectsMalformedInput) {
  auto code_of = [](std::string_view text) {
    try {
      KvRecord::parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  };
  EXPECT_EQ(code_of("a=1\na=2\n"), Errc::parse_error);
  EXPECT_EQ(code_of("a=1\nnoequals\n"), Errc::parse_error);
  EXPECT_EQ(code_of("Upper=1\n"), Errc::parse_error);
  EXPECT_EQ(code_of("a=1"), Errc::parse_error);
}

TEST(KvRecord, GettersNameTheField) {
  const KvRecord r = KvRecord::parse("blob=AQID\nn=12x\n");
  try {
    r.get("missing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
    EXPECT_NE(std::string(e.what()).find("missing"), std::string::npos);
  }
  EXPECT_THROW(r.get_bytes("blob", 4), Error);
  EXPECT_THROW(r.get_uint("n"), Error);
}

TEST(KvRecord, RejectsValuesThatWouldBreakTheEncoding) {
  KvRecord r;
  EXPECT_THROW(r.set("a", "line\nbreak"), Error);
  EXPECT_THROW(r.set("Bad", "x"), Error);
}

TEST(KvRecord, SerializeWithoutAndRequireOnly) {
  KvRecord r;
  r.set("a", "1");
  r.set("signature", "s");
  EXPECT_EQ(r.serialize_without({"signature"}), "a=1\n");
  EXPECT_NO_THROW(r.require_only({"a", "signature"}));
  EXPECT_THROW(r.require_only({"a"}), Error);
}

TEST(Error, WhatCarriesStableName) {
  const Error e(Errc::dcf_hash_mismatch, "details");
  EXPECT_EQ(std::string(e.what()), "dcf-hash-mismatch: details");
  EXPECT_EQ(e.detail(), "details");
}

}  // namespace
}  // namespace drmcost
