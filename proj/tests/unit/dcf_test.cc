#include <gtest/gtest.h>

#include "drmcost/common/error.h"
#include "drmcost/objects/dcf.h"
#include "drmcost/scenario/scenario.h"

namespace drmcost::objects {
namespace {

PackagedContent sample(std::size_t size = 100) {
  return package_content(scenario::generate_content(size, 3), "cid-42", {{"title", "Song"}, {"artist", "Band"}},
                         "https://ri.example/roap");
}

TEST(Dcf, PayloadSizeForMusicTrack) {
  const auto p = package_content(scenario::generate_content(3'670'016, 1), "cid", {}, "url");
  EXPECT_EQ(p.dcf.encrypted_payload.size(), 3'670'032u);
  EXPECT_EQ(p.dcf.plaintext_len, 3'670'016u);
}

TEST(Dcf, RoundTripThroughContainerAndKey) {
  for (std::size_t size : {1u, 15u, 16u, 17u, 1000u}) {
    const Bytes content = scenario::generate_content(size, size);
    const auto p = package_content(content, "cid", {{"title", "t"}}, "url");
    const Dcf parsed = parse_dcf(serialize_dcf(p.dcf));
    EXPECT_EQ(parsed, p.dcf);
    EXPECT_EQ(decrypt_content(parsed, p.kcek), content);
  }
}

TEST(Dcf, EachPackagingUsesFreshKeyAndIv) {
  const Bytes content = scenario::generate_content(64, 9);
  const auto a = package_content(content, "cid", {}, "url");
  const auto b = package_content(content, "cid", {}, "url");
  EXPECT_NE(a.kcek, b.kcek);
  EXPECT_NE(a.dcf.iv, b.dcf.iv);
  EXPECT_NE(a.dcf.encrypted_payload, b.dcf.encrypted_payload);
}

TEST(Dcf, EmptyContentIsRejected) {
  try {
    package_content({}, "cid", {}, "url");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_content);
  }
}

TEST(Dcf, BadMagicIsReported) {
  Bytes raw = serialize_dcf(sample().dcf);
  raw[0] = 'X';
  try {
    parse_dcf(raw);
    FAIL();
  } catch (const ContainerError& e) {
    EXPECT_EQ(e.code(), Errc::malformed_container);
    EXPECT_EQ(e.section(), "magic");
    EXPECT_EQ(e.offset(), 0u);
  }
}

TEST(Dcf, TruncatedNameSectionReportsSectionAndOffset) {
  const Bytes raw = serialize_dcf(sample().dcf);
  // magic(4) version(1) length(4) then "cid-42": cut inside the id.
  const ByteView cut = ByteView(raw).first(4 + 1 + 4 + 3);
  try {
    parse_dcf(cut);
    FAIL();
  } catch (const ContainerError& e) {
    EXPECT_EQ(e.section(), "content_id");
    EXPECT_EQ(e.offset(), 9u);
  }
}

TEST(Dcf, EveryTruncationFailsCleanly) {
  const Bytes raw = serialize_dcf(sample(40).dcf);
  for (std::size_t n = 0; n < raw.size(); ++n) {
    EXPECT_THROW(parse_dcf(ByteView(raw).first(n)), ContainerError) << n;
  }
}

TEST(Dcf, UnsupportedVersionAndInconsistentLengths) {
  Bytes raw = serialize_dcf(sample().dcf);
  raw[4] = 9;
  EXPECT_THROW(parse_dcf(raw), ContainerError);

  Dcf dcf = sample(100).dcf;
  dcf.plaintext_len = 200;
  EXPECT_THROW(serialize_dcf(dcf), ContainerError);
  dcf.plaintext_len = 100;
  dcf.encrypted_payload.pop_back();
  EXPECT_THROW(serialize_dcf(dcf), ContainerError);
}

TEST(Dcf, HashCoversEveryField) {
  const Dcf base = sample().dcf;
  const auto h = compute_dcf_hash(base);
  Dcf d = base;
  d.metadata["title"] = "Other";
  EXPECT_NE(compute_dcf_hash(d), h);
  d = base;
  d.encrypted_payload[5] ^= 1;
  EXPECT_NE(compute_dcf_hash(d), h);
  d = base;
  d.iv[0] ^= 1;
  EXPECT_NE(compute_dcf_hash(d), h);
  EXPECT_EQ(compute_dcf_hash(base), h);
}

TEST(Dcf, WrongKeyNeverYieldsContent) {
  const Bytes content = scenario::generate_content(256, 5);
  const auto p = package_content(content, "cid", {}, "url");
  try {
    EXPECT_NE(decrypt_content(p.dcf, crypto::SymmetricKey::generate()), content);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_padding);
  }
}

}  // namespace
}  // namespace drmcost::objects
