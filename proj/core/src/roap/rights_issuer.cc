#include "drmcost/roap/rights_issuer.h"

#include <cstdio>

#include "drmcost/common/error.h"

namespace drmcost::roap {

RightsIssuer::RightsIssuer(std::string id, crypto::RsaKeyPair keys, Certificate certificate,
                           crypto::RsaPublicKey ca_root, MessageSizes sizes)
    : id_(std::move(id)),
      keys_(std::move(keys)),
      certificate_(std::move(certificate)),
      ca_root_(std::move(ca_root)),
      sizes_(sizes) {}

void RightsIssuer::add_catalog_entry(std::string ro_id, const objects::Dcf& dcf, crypto::SymmetricKey kcek,
                                     objects::Permissions permissions, bool sign_ro) {
  catalog_.insert_or_assign(std::move(ro_id), CatalogEntry{dcf, std::move(kcek), permissions, sign_ro});
}

RoapMessage RightsIssuer::handle_device_hello(const RoapMessage& hello) {
  hello.expect(MessageType::DeviceHello);
  if (hello.fields().get("algorithms").find("RSA-1024") == std::string::npos) {
    throw Error(Errc::invalid_argument, "device does not support the mandated algorithm suite");
  }
  char session[17];
  std::snprintf(session, sizeof session, "%016llx", static_cast<unsigned long long>(next_session_++));

  RoapMessage msg(MessageType::RiHello, id_);
  msg.fields().set("version", std::string(kRoapVersion));
  msg.fields().set("selected_algorithms", std::string(kMandatedAlgorithms));
  msg.fields().set("session", session);
  msg.pad_to(sizes_.ri_hello);
  return msg;
}

RoapMessage RightsIssuer::handle_registration_request(const RoapMessage& request, Timestamp now) {
  request.expect(MessageType::RegistrationRequest);
  const Certificate agent_cert = parse_certificate(drmcost::to_string(request.fields().get_bytes("certificate")));
  if (agent_cert.subject_id != request.sender_id()) {
    throw Error(Errc::bad_signature, "agent certificate subject does not match the sender");
  }
  if (!crypto::pss_verify(ca_root_, as_bytes(certificate_body(agent_cert)), agent_cert.signature)) {
    throw Error(Errc::bad_signature, "agent certificate is not signed by the trusted CA");
  }
  if (!within_validity(agent_cert, now)) {
    throw Error(Errc::expired_certificate, "agent certificate for '" + agent_cert.subject_id + "' is not valid");
  }
  if (revocation_source_ != nullptr) {
    OcspResponse status = revocation_source_->ocsp_status(agent_cert.subject_id, now);
    if (status.status == CertStatus::Revoked) {
      throw Error(Errc::revoked_certificate, "agent certificate for '" + agent_cert.subject_id + "' is revoked");
    }
  }
  auto sig = request.signature();
  if (!sig || !crypto::pss_verify(agent_cert.subject_public_key, as_bytes(request.body()), *sig)) {
    throw Error(Errc::bad_signature, "registration request signature does not verify");
  }
  if (!ocsp_) throw Error(Errc::invalid_ocsp, "RI has no OCSP response to staple");

  registered_.insert_or_assign(agent_cert.subject_id, agent_cert.subject_public_key);

  RoapMessage msg(MessageType::RegistrationResponse, id_);
  msg.fields().set("agent", agent_cert.subject_id);
  msg.fields().set("status", "Success");
  msg.fields().set("session", request.fields().get("session"));
  msg.fields().set_bytes("certificate", as_bytes(serialize_certificate(certificate_)));
  msg.fields().set_bytes("ocsp", as_bytes(serialize_ocsp(*ocsp_)));
  msg.pad_to(sizes_.registration_response);
  msg.set_signature(crypto::pss_sign(keys_, as_bytes(msg.body())));
  return msg;
}

RoapMessage RightsIssuer::handle_ro_request(const RoapMessage& request, Timestamp now) {
  request.expect(MessageType::RoRequest);
  auto agent = registered_.find(request.sender_id());
  if (agent == registered_.end()) {
    throw Error(Errc::not_registered, "agent '" + request.sender_id() + "' has not registered with " + id_);
  }
  auto sig = request.signature();
  if (!sig || !crypto::pss_verify(agent->second, as_bytes(request.body()), *sig)) {
    throw Error(Errc::bad_signature, "RO request signature does not verify");
  }
  const std::string& ro_id = request.fields().get("ro_id");
  auto entry = catalog_.find(ro_id);
  if (entry == catalog_.end()) throw Error(Errc::unknown_ro_id, "RI '" + id_ + "' does not sell '" + ro_id + "'");
  (void)now;

  const auto& item = entry->second;
  objects::RightsObject ro =
      objects::issue_rights_object(keys_, agent->second, ro_id, item.dcf, item.kcek, item.permissions, item.sign_ro);
  const std::string ro_text = objects::serialize_rights_object(ro);

  RoapMessage msg(MessageType::RoResponse, id_);
  msg.fields().set("agent", agent->first);
  msg.fields().set("status", "Success");
  msg.fields().set("ro_id", ro_id);
  msg.fields().set_bytes("ro", as_bytes(ro_text));
  msg.pad_to(sizes_.ro_response_envelope + ro_text.size());
  msg.set_signature(crypto::pss_sign(keys_, as_bytes(msg.body())));
  return msg;
}

}  // namespace drmcost::roap
