#include "drmcost/objects/rights_object.h"

#include <openssl/crypto.h>

#include "drmcost/common/error.h"

namespace drmcost::objects {
namespace {

constexpr std::string_view kVersion = "2.0";

KvRecord to_record(const RightsObject& ro) {
  KvRecord r;
  r.set("version", std::string(kVersion));
  r.set("ro_id", ro.ro_id);
  r.set("content_id", ro.content_id);
  write_permissions(r, ro.permissions);
  r.set_bytes("dcf_hash", crypto::as_view(ro.dcf_hash));
  r.set_bytes("wrapped_kcek", ro.wrapped_kcek);
  r.set_bytes("c1", ro.c1);
  r.set_bytes("c2", ro.c2);
  r.set_bytes("mac", crypto::as_view(ro.mac));
  if (ro.signature) r.set_bytes("signature", *ro.signature);
  return r;
}

crypto::Digest to_digest(const Bytes& b) {
  crypto::Digest d;
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

}  // namespace

void write_permissions(KvRecord& record, const Permissions& permissions) {
  record.set("permissions.play", permissions.play_allowed ? "true" : "false");
  if (permissions.play_count_limit) {
    record.set_uint("permissions.play_count_limit", *permissions.play_count_limit);
  }
}

Permissions read_permissions(const KvRecord& record) {
  Permissions p;
  const std::string& play = record.get("permissions.play");
  if (play == "true") {
    p.play_allowed = true;
  } else if (play == "false") {
    p.play_allowed = false;
  } else {
    throw Error(Errc::parse_error, "permissions.play must be true or false");
  }
  if (record.contains("permissions.play_count_limit")) {
    auto limit = record.get_uint("permissions.play_count_limit");
    if (limit < 1 || limit > UINT32_MAX) throw Error(Errc::parse_error, "play_count_limit must be >= 1");
    p.play_count_limit = static_cast<std::uint32_t>(limit);
  }
  return p;
}

std::string canonical_body(const RightsObject& ro) { return to_record(ro).serialize_without({"mac", "signature"}); }

std::string serialize_rights_object(const RightsObject& ro) { return to_record(ro).serialize(); }

RightsObject parse_rights_object(std::string_view text) {
  KvRecord r = KvRecord::parse(text);
  r.require_only({"version", "ro_id", "content_id", "permissions.play", "permissions.play_count_limit",
                  "dcf_hash", "wrapped_kcek", "c1", "c2", "mac", "signature"});
  if (r.get("version") != kVersion) throw Error(Errc::parse_error, "unsupported RO version " + r.get("version"));

  RightsObject ro;
  ro.ro_id = r.get("ro_id");
  ro.content_id = r.get("content_id");
  ro.permissions = read_permissions(r);
  ro.dcf_hash = to_digest(r.get_bytes("dcf_hash", crypto::kDigestSize));
  ro.wrapped_kcek = r.get_bytes("wrapped_kcek", kWrappedKcekSize);
  ro.c1 = r.get_bytes("c1", kC1Size);
  ro.c2 = r.get_bytes("c2", kC2Size);
  ro.mac = to_digest(r.get_bytes("mac", crypto::kDigestSize));
  if (r.contains("signature")) ro.signature = r.get_bytes("signature", crypto::kRsaModulusBytes);
  return ro;
}

RightsObject issue_rights_object(const crypto::RsaKeyPair& ri_keys, const crypto::RsaPublicKey& agent_key,
                                 std::string ro_id, const Dcf& dcf, const crypto::SymmetricKey& kcek,
                                 const Permissions& permissions, bool sign) {
  if (permissions.play_count_limit && *permissions.play_count_limit == 0) {
    throw Error(Errc::invalid_argument, "play_count_limit must be >= 1");
  }
  const auto kmac = crypto::SymmetricKey::generate();
  const auto krek = crypto::SymmetricKey::generate();
  const auto z = crypto::BigUint::random_below(agent_key.modulus);
  Bytes z_bytes = z.to_bytes(crypto::kRsaModulusBytes);
  Bytes kek_bytes = crypto::kdf2(z_bytes, crypto::kAesKeySize);
  const auto kek = crypto::SymmetricKey::from_bytes(kek_bytes);
  Bytes mac_and_rek = concat({kmac.bytes(), krek.bytes()});

  RightsObject ro;
  ro.ro_id = std::move(ro_id);
  ro.content_id = dcf.content_id;
  ro.permissions = permissions;
  ro.dcf_hash = compute_dcf_hash(dcf);
  ro.wrapped_kcek = crypto::aes_key_wrap(krek, kcek.bytes());
  ro.c1 = crypto::rsa_apply(agent_key.modulus, agent_key.exponent, z).to_bytes(kC1Size);
  ro.c2 = crypto::aes_key_wrap(kek, mac_and_rek);

  const std::string body = canonical_body(ro);
  ro.mac = crypto::hmac_sha1(kmac.bytes(), as_bytes(body));
  if (sign) ro.signature = crypto::pss_sign(ri_keys, as_bytes(body));

  OPENSSL_cleanse(z_bytes.data(), z_bytes.size());
  OPENSSL_cleanse(kek_bytes.data(), kek_bytes.size());
  OPENSSL_cleanse(mac_and_rek.data(), mac_and_rek.size());
  return ro;
}

}  // namespace drmcost::objects
