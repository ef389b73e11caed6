#pragma once

#include <map>
#include <optional>
#include <string>

#include "drmcost/crypto/primitives.h"
#include "drmcost/crypto/rsa.h"
#include "drmcost/objects/dcf.h"
#include "drmcost/objects/rights_object.h"
#include "drmcost/roap/certificate.h"
#include "drmcost/roap/message.h"

namespace drmcost::roap {

/// Rights Issuer. Its computation is not metered: the model prices the
/// terminal only.
class RightsIssuer {
 public:
  RightsIssuer(std::string id, crypto::RsaKeyPair keys, Certificate certificate, crypto::RsaPublicKey ca_root,
               MessageSizes sizes = {});

  const std::string& id() const { return id_; }
  const Certificate& certificate() const { return certificate_; }

  /// The OCSP response stapled to every registration response.
  void set_ocsp_response(OcspResponse ocsp) { ocsp_ = std::move(ocsp); }
  /// When set, agent certificates are checked for revocation at registration.
  void set_revocation_source(const CertificateAuthority* ca) { revocation_source_ = ca; }

  void add_catalog_entry(std::string ro_id, const objects::Dcf& dcf, crypto::SymmetricKey kcek,
                         objects::Permissions permissions, bool sign_ro = false);

  RoapMessage handle_device_hello(const RoapMessage& hello);
  RoapMessage handle_registration_request(const RoapMessage& request, Timestamp now);
  /// Throws not_registered, bad_signature or unknown_ro_id.
  RoapMessage handle_ro_request(const RoapMessage& request, Timestamp now);

  bool is_registered(const std::string& agent_id) const { return registered_.contains(agent_id); }

 private:
  struct CatalogEntry {
    objects::Dcf dcf;
    crypto::SymmetricKey kcek;
    objects::Permissions permissions;
    bool sign_ro = false;
  };

  std::string id_;
  crypto::RsaKeyPair keys_;
  Certificate certificate_;
  crypto::RsaPublicKey ca_root_;
  MessageSizes sizes_;
  std::optional<OcspResponse> ocsp_;
  const CertificateAuthority* revocation_source_ = nullptr;
  std::map<std::string, CatalogEntry> catalog_;
  std::map<std::string, crypto::RsaPublicKey> registered_;
  std::uint64_t next_session_ = 1;
};

}  // namespace drmcost::roap
