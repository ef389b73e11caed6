#pragma once

#include <map>
#include <optional>
#include <string>

#include "drmcost/common/bytes.h"
#include "drmcost/crypto/primitives.h"
#include "drmcost/crypto/rsa.h"
#include "drmcost/objects/dcf.h"
#include "drmcost/objects/rights_object.h"
#include "drmcost/roap/agent_store.h"
#include "drmcost/roap/certificate.h"
#include "drmcost/roap/message.h"
#include "drmcost/roap/metered_crypto.h"

namespace drmcost::roap {

/// The trusted DRM Agent on the terminal. Every crypto operation it performs
/// goes through the MeteredCrypto passed in by the caller, so the trace
/// contains exactly the terminal-side work.
///
/// Not thread-safe; one protocol run owns an agent at a time.
class DrmAgent {
 public:
  /// K_DEV is generated here unless supplied; it is never exported.
  DrmAgent(std::string id, crypto::RsaKeyPair keys, Certificate certificate, crypto::RsaPublicKey ca_root,
           MessageSizes sizes = {}, std::optional<crypto::SymmetricKey> device_key = std::nullopt);

  const std::string& id() const { return id_; }
  const Certificate& certificate() const { return certificate_; }
  crypto::RsaPublicKey public_key() const { return keys_.public_key(); }

  // Registration (4-pass).
  RoapMessage device_hello() const;
  RoapMessage registration_request(const RoapMessage& ri_hello, Timestamp now, MeteredCrypto& crypto);
  /// Verifies the response signature, the RI certificate and the stapled
  /// OCSP response, in that order, then stores the RI context.
  const RiContext& complete_registration(const RoapMessage& response, Timestamp now, MeteredCrypto& crypto);

  // Acquisition.
  RoapMessage ro_request(const std::string& ri_id, const std::string& ro_id, Timestamp now, MeteredCrypto& crypto);
  objects::RightsObject accept_ro_response(const RoapMessage& response, Timestamp now, MeteredCrypto& crypto);

  // Installation and consumption.
  const InstalledRo& install(const objects::RightsObject& ro, const objects::Dcf& dcf, MeteredCrypto& crypto);
  Bytes consume(const std::string& content_id, const objects::Dcf& dcf, MeteredCrypto& crypto);

  const RiContext* ri_context(const std::string& ri_id) const;
  const std::map<std::string, RiContext>& ri_contexts() const { return ri_contexts_; }
  const std::map<std::string, InstalledRo>& installed() const { return installed_; }

  /// Loads whatever the store already holds and persists every later
  /// change to it.
  void attach_store(AgentStore store);

 private:
  const RiContext& usable_context(const std::string& ri_id, Timestamp now) const;
  void persist(const RiContext& ctx) const;
  void persist(const InstalledRo& ro) const;

  std::string id_;
  crypto::RsaKeyPair keys_;
  Certificate certificate_;
  crypto::RsaPublicKey ca_root_;
  MessageSizes sizes_;
  crypto::SymmetricKey k_dev_;
  std::map<std::string, RiContext> ri_contexts_;
  std::map<std::string, InstalledRo> installed_;
  std::map<std::string, std::string> ro_origin_;  // ro_id -> ri_id that delivered it
  std::optional<AgentStore> store_;
};

}  // namespace drmcost::roap
