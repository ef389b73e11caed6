#include "drmcost/roap/agent.h"

#include <openssl/crypto.h>

#include "drmcost/common/error.h"

namespace drmcost::roap {
namespace {

/// Byte buffer that is cleared when it goes out of scope.
class WipedBytes {
 public:
  explicit WipedBytes(Bytes b) : bytes_(std::move(b)) {}
  WipedBytes(const WipedBytes&) = delete;
  WipedBytes& operator=(const WipedBytes&) = delete;
  ~WipedBytes() { OPENSSL_cleanse(bytes_.data(), bytes_.size()); }

  ByteView view() const { return bytes_; }
  ByteView first(std::size_t n) const { return view().first(n); }
  ByteView last(std::size_t n) const { return view().last(n); }
  std::size_t size() const { return bytes_.size(); }

 private:
  Bytes bytes_;
};

bool same_digest(const crypto::Digest& a, const crypto::Digest& b) {
  return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

void require_signature(MeteredCrypto& crypto, const crypto::RsaPublicKey& key, const RoapMessage& msg,
                       const char* what) {
  auto sig = msg.signature();
  if (!sig) {
    // Still priced: the agent hashes the body before it can tell.
    crypto.verify(key, as_bytes(msg.body()), {});
    throw Error(Errc::bad_signature, std::string(what) + " is not signed");
  }
  if (!crypto.verify(key, as_bytes(msg.body()), *sig)) {
    throw Error(Errc::bad_signature, std::string(what) + " signature does not verify");
  }
}

}  // namespace

DrmAgent::DrmAgent(std::string id, crypto::RsaKeyPair keys, Certificate certificate, crypto::RsaPublicKey ca_root,
                   MessageSizes sizes, std::optional<crypto::SymmetricKey> device_key)
    : id_(std::move(id)),
      keys_(std::move(keys)),
      certificate_(std::move(certificate)),
      ca_root_(std::move(ca_root)),
      sizes_(sizes),
      k_dev_(device_key ? *device_key : crypto::SymmetricKey::generate()) {}

RoapMessage DrmAgent::device_hello() const {
  RoapMessage msg(MessageType::DeviceHello, id_);
  msg.fields().set("version", std::string(kRoapVersion));
  msg.fields().set("algorithms", std::string(kMandatedAlgorithms));
  msg.pad_to(sizes_.device_hello);
  return msg;
}

RoapMessage DrmAgent::registration_request(const RoapMessage& ri_hello, Timestamp now, MeteredCrypto& crypto) {
  ri_hello.expect(MessageType::RiHello);
  if (ri_hello.fields().get("selected_algorithms") != kMandatedAlgorithms) {
    throw Error(Errc::invalid_argument, "RI selected an algorithm suite outside the mandated set");
  }
  RoapMessage msg(MessageType::RegistrationRequest, id_);
  msg.fields().set("ri", ri_hello.sender_id());
  msg.fields().set("session", ri_hello.fields().get("session"));
  msg.fields().set_int("time", seconds_of(now));
  msg.fields().set_bytes("certificate", as_bytes(serialize_certificate(certificate_)));
  msg.pad_to(sizes_.registration_request);
  msg.set_signature(crypto.sign(keys_, as_bytes(msg.body())));
  return msg;
}

const RiContext& DrmAgent::complete_registration(const RoapMessage& response, Timestamp now, MeteredCrypto& crypto) {
  response.expect(MessageType::RegistrationResponse);
  if (response.fields().get("agent") != id_) {
    throw Error(Errc::invalid_argument, "registration response addressed to another agent");
  }
  const Certificate ri_cert = parse_certificate(drmcost::to_string(response.fields().get_bytes("certificate")));
  const OcspResponse ocsp = parse_ocsp(drmcost::to_string(response.fields().get_bytes("ocsp")));
  if (ri_cert.subject_id != response.sender_id()) {
    throw Error(Errc::bad_signature, "RI certificate subject does not match the sender");
  }

  require_signature(crypto, ri_cert.subject_public_key, response, "registration response");

  if (!crypto.verify(ca_root_, as_bytes(certificate_body(ri_cert)), ri_cert.signature)) {
    throw Error(Errc::bad_signature, "RI certificate is not signed by the trusted CA");
  }
  if (!within_validity(ri_cert, now)) {
    throw Error(Errc::expired_certificate, "RI certificate for '" + ri_cert.subject_id + "' is outside its validity");
  }

  if (!crypto.verify(ca_root_, as_bytes(ocsp_body(ocsp)), ocsp.signature)) {
    throw Error(Errc::bad_signature, "OCSP response is not signed by the trusted CA");
  }
  if (ocsp.cert_subject_id != ri_cert.subject_id) {
    throw Error(Errc::invalid_ocsp, "OCSP response is for '" + ocsp.cert_subject_id + "'");
  }
  if (ocsp.status == CertStatus::Revoked) {
    throw Error(Errc::revoked_certificate, "RI certificate for '" + ri_cert.subject_id + "' has been revoked");
  }

  RiContext ctx{ri_cert.subject_id, ri_cert.subject_public_key, ri_cert.not_after, now};
  persist(ctx);
  auto [it, inserted] = ri_contexts_.insert_or_assign(ctx.ri_id, std::move(ctx));
  return it->second;
}

const RiContext* DrmAgent::ri_context(const std::string& ri_id) const {
  auto it = ri_contexts_.find(ri_id);
  return it == ri_contexts_.end() ? nullptr : &it->second;
}

const RiContext& DrmAgent::usable_context(const std::string& ri_id, Timestamp now) const {
  const RiContext* ctx = ri_context(ri_id);
  if (ctx == nullptr) throw Error(Errc::no_ri_context, "no RI context for '" + ri_id + "'");
  if (!ctx->valid_at(now)) throw Error(Errc::context_expired, "RI context for '" + ri_id + "' has expired");
  return *ctx;
}

RoapMessage DrmAgent::ro_request(const std::string& ri_id, const std::string& ro_id, Timestamp now,
                                 MeteredCrypto& crypto) {
  usable_context(ri_id, now);
  RoapMessage msg(MessageType::RoRequest, id_);
  msg.fields().set("ri", ri_id);
  msg.fields().set("ro_id", ro_id);
  msg.fields().set_int("time", seconds_of(now));
  msg.pad_to(sizes_.ro_request);
  msg.set_signature(crypto.sign(keys_, as_bytes(msg.body())));
  return msg;
}

objects::RightsObject DrmAgent::accept_ro_response(const RoapMessage& response, Timestamp now,
                                                   MeteredCrypto& crypto) {
  response.expect(MessageType::RoResponse);
  const RiContext& ctx = usable_context(response.sender_id(), now);
  if (response.fields().get("agent") != id_) {
    throw Error(Errc::invalid_argument, "RO response addressed to another agent");
  }
  require_signature(crypto, ctx.ri_public_key, response, "RO response");

  objects::RightsObject ro = objects::parse_rights_object(drmcost::to_string(response.fields().get_bytes("ro")));
  if (ro.ro_id != response.fields().get("ro_id")) {
    throw Error(Errc::parse_error, "RO response carries a different RO than it names");
  }
  ro_origin_[ro.ro_id] = ctx.ri_id;
  return ro;
}

const InstalledRo& DrmAgent::install(const objects::RightsObject& ro, const objects::Dcf& dcf,
                                     MeteredCrypto& crypto) {
  if (ro.content_id != dcf.content_id) {
    throw Error(Errc::invalid_argument, "RO '" + ro.ro_id + "' does not govern content '" + dcf.content_id + "'");
  }

  // C1 -> Z. A C1 that is not even below our modulus was not encrypted to us.
  crypto::BigUint z;
  try {
    z = crypto.rsa_private(keys_, crypto::BigUint::from_bytes(ro.c1));
  } catch (const Error& e) {
    if (e.code() != Errc::out_of_range) throw;
    throw Error(Errc::integrity_check_failed, "C1 is not decryptable with this device's key");
  }
  WipedBytes z_bytes(z.to_bytes(crypto::kRsaModulusBytes));
  WipedBytes kek_bytes(crypto.kdf2(z_bytes.view(), crypto::kAesKeySize));
  const auto kek = crypto::SymmetricKey::from_bytes(kek_bytes.view());

  // C2 -> K_MAC || K_REK
  WipedBytes mac_and_rek(crypto.key_unwrap(kek, ro.c2));
  const auto kmac = crypto::SymmetricKey::from_bytes(mac_and_rek.first(crypto::kAesKeySize));

  const std::string body = objects::canonical_body(ro);
  if (!same_digest(crypto.hmac_sha1(kmac, as_bytes(body)), ro.mac)) {
    throw Error(Errc::mac_mismatch, "RO '" + ro.ro_id + "' fails its MAC check");
  }
  if (ro.signature) {
    auto origin = ro_origin_.find(ro.ro_id);
    const RiContext* ctx = origin == ro_origin_.end() ? nullptr : ri_context(origin->second);
    if (ctx == nullptr || !crypto.verify(ctx->ri_public_key, as_bytes(body), *ro.signature)) {
      throw Error(Errc::signature_invalid, "RO '" + ro.ro_id + "' signature does not verify");
    }
  }

  InstalledRo installed;
  installed.ro_id = ro.ro_id;
  installed.content_id = ro.content_id;
  installed.permissions = ro.permissions;
  installed.remaining_plays = ro.permissions.play_count_limit;
  installed.dcf_hash = ro.dcf_hash;
  installed.wrapped_kcek = ro.wrapped_kcek;
  installed.c1 = ro.c1;
  installed.c2 = ro.c2;
  installed.c2dev = crypto.key_wrap(k_dev_, mac_and_rek.view());
  installed.mac = ro.mac;
  installed.signature = ro.signature;

  persist(installed);
  auto [it, inserted] = installed_.insert_or_assign(installed.ro_id, std::move(installed));
  return it->second;
}

Bytes DrmAgent::consume(const std::string& content_id, const objects::Dcf& dcf, MeteredCrypto& crypto) {
  InstalledRo* chosen = nullptr;
  bool exhausted = false;
  for (auto& [ro_id, ro] : installed_) {
    if (ro.content_id != content_id || !ro.permissions.play_allowed) continue;
    if (ro.remaining_plays && *ro.remaining_plays == 0) {
      exhausted = true;
      continue;
    }
    chosen = &ro;
    break;
  }
  if (chosen == nullptr) {
    if (exhausted) throw Error(Errc::plays_exhausted, "play count for '" + content_id + "' is used up");
    throw Error(Errc::no_rights, "no installed RO grants play for '" + content_id + "'");
  }
  InstalledRo& ro = *chosen;

  // 1. C2dev -> K_MAC || K_REK
  WipedBytes mac_and_rek(crypto.key_unwrap(k_dev_, ro.c2dev));
  const auto kmac = crypto::SymmetricKey::from_bytes(mac_and_rek.first(crypto::kAesKeySize));
  const auto krek = crypto::SymmetricKey::from_bytes(mac_and_rek.last(crypto::kAesKeySize));

  // 2. RO integrity.
  const std::string body = objects::canonical_body(ro.as_rights_object());
  if (!same_digest(crypto.hmac_sha1(kmac, as_bytes(body)), ro.mac)) {
    throw Error(Errc::mac_mismatch, "installed RO '" + ro.ro_id + "' fails its MAC check");
  }

  // 3. DCF integrity.
  if (!same_digest(crypto.sha1(objects::serialize_dcf(dcf)), ro.dcf_hash)) {
    throw Error(Errc::dcf_hash_mismatch, "DCF for '" + content_id + "' does not match the hash in its RO");
  }

  WipedBytes kcek_bytes(crypto.key_unwrap(krek, ro.wrapped_kcek));
  const auto kcek = crypto::SymmetricKey::from_bytes(kcek_bytes.view());
  Bytes plaintext = crypto.aes_cbc_decrypt(kcek, dcf.iv, dcf.encrypted_payload);
  if (plaintext.size() != dcf.plaintext_len) {
    OPENSSL_cleanse(plaintext.data(), plaintext.size());
    throw Error(Errc::invalid_padding, "decrypted length does not match the DCF header");
  }

  if (ro.remaining_plays) {
    --*ro.remaining_plays;
    persist(ro);
  }
  return plaintext;
}

void DrmAgent::attach_store(AgentStore store) {
  for (auto& ctx : store.load_ri_contexts()) ri_contexts_.insert_or_assign(ctx.ri_id, std::move(ctx));
  for (auto& ro : store.load_installed()) installed_.insert_or_assign(ro.ro_id, std::move(ro));
  store_ = std::move(store);
}

void DrmAgent::persist(const RiContext& ctx) const {
  if (store_) store_->save(ctx);
}

void DrmAgent::persist(const InstalledRo& ro) const {
  if (store_) store_->save(ro);
}

}  // namespace drmcost::roap
