#include "drmcost/roap/certificate.h"

#include <fstream>
#include <sstream>

#include "drmcost/common/error.h"
#include "drmcost/common/kv_record.h"

namespace drmcost::roap {
namespace {

KvRecord certificate_record(const Certificate& cert) {
  KvRecord r;
  r.set("type", "certificate");
  r.set("subject", cert.subject_id);
  r.set("subject_key.n", cert.subject_public_key.modulus.to_hex());
  r.set("subject_key.e", cert.subject_public_key.exponent.to_hex());
  r.set("issuer", cert.issuer_id);
  r.set_int("not_before", seconds_of(cert.not_before));
  r.set_int("not_after", seconds_of(cert.not_after));
  if (!cert.signature.empty()) r.set_bytes("signature", cert.signature);
  return r;
}

KvRecord ocsp_record(const OcspResponse& resp) {
  KvRecord r;
  r.set("type", "ocsp");
  r.set("cert_subject", resp.cert_subject_id);
  r.set("responder", resp.responder_id);
  r.set("status", resp.status == CertStatus::Good ? "good" : "revoked");
  r.set_int("produced_at", seconds_of(resp.produced_at));
  if (!resp.signature.empty()) r.set_bytes("signature", resp.signature);
  return r;
}

void expect_type(const KvRecord& r, std::string_view type) {
  if (r.get("type") != type) throw Error(Errc::parse_error, "expected a " + std::string(type) + " record");
}

}  // namespace

std::string certificate_body(const Certificate& cert) {
  return certificate_record(cert).serialize_without({"signature"});
}

std::string serialize_certificate(const Certificate& cert) { return certificate_record(cert).serialize(); }

Certificate parse_certificate(std::string_view text) {
  KvRecord r = KvRecord::parse(text);
  r.require_only({"type", "subject", "subject_key.n", "subject_key.e", "issuer", "not_before", "not_after",
                  "signature"});
  expect_type(r, "certificate");
  Certificate cert;
  cert.subject_id = r.get("subject");
  cert.subject_public_key.modulus = crypto::BigUint::from_hex(r.get("subject_key.n"));
  cert.subject_public_key.exponent = crypto::BigUint::from_hex(r.get("subject_key.e"));
  cert.issuer_id = r.get("issuer");
  cert.not_before = at_seconds(r.get_int("not_before"));
  cert.not_after = at_seconds(r.get_int("not_after"));
  cert.signature = r.get_bytes("signature");
  return cert;
}

std::string ocsp_body(const OcspResponse& resp) { return ocsp_record(resp).serialize_without({"signature"}); }

std::string serialize_ocsp(const OcspResponse& resp) { return ocsp_record(resp).serialize(); }

OcspResponse parse_ocsp(std::string_view text) {
  KvRecord r = KvRecord::parse(text);
  r.require_only({"type", "cert_subject", "responder", "status", "produced_at", "signature"});
  expect_type(r, "ocsp");
  OcspResponse resp;
  resp.cert_subject_id = r.get("cert_subject");
  resp.responder_id = r.get("responder");
  const std::string& status = r.get("status");
  if (status == "good") {
    resp.status = CertStatus::Good;
  } else if (status == "revoked") {
    resp.status = CertStatus::Revoked;
  } else {
    throw Error(Errc::parse_error, "unknown OCSP status '" + status + "'");
  }
  resp.produced_at = at_seconds(r.get_int("produced_at"));
  resp.signature = r.get_bytes("signature");
  return resp;
}

bool within_validity(const Certificate& cert, Timestamp now) {
  return cert.not_before <= now && now <= cert.not_after;
}

bool verify_certificate(const Certificate& cert, const crypto::RsaPublicKey& ca_key, Timestamp now) {
  return crypto::pss_verify(ca_key, as_bytes(certificate_body(cert)), cert.signature) && within_validity(cert, now);
}

bool verify_ocsp(const OcspResponse& resp, const crypto::RsaPublicKey& ca_key) {
  return crypto::pss_verify(ca_key, as_bytes(ocsp_body(resp)), resp.signature);
}

const CaFixture::Subject& CaFixture::subject(std::string_view id) const {
  for (const auto& s : subjects) {
    if (s.id == id) return s;
  }
  throw Error(Errc::invalid_argument, "subject '" + std::string(id) + "' is not listed in the CA fixture");
}

CaFixture parse_ca_fixture(std::string_view text) {
  CaFixture fixture;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string where = "CA fixture line " + std::to_string(line_no) + ": ";
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(Errc::parse_error, where + "expected 'key = value'");
    std::istringstream key_in(line.substr(0, eq));
    std::istringstream value_in(line.substr(eq + 1));
    std::string key, extra;
    key_in >> key;
    if (key == "ca") {
      value_in >> fixture.ca_id;
    } else if (key == "subject") {
      CaFixture::Subject s;
      std::int64_t from = 0, to = 0;
      if (!(value_in >> s.id >> from >> to)) throw Error(Errc::parse_error, where + "expected 'id not_before not_after'");
      if (to < from) throw Error(Errc::parse_error, where + "validity window ends before it starts");
      s.not_before = at_seconds(from);
      s.not_after = at_seconds(to);
      fixture.subjects.push_back(std::move(s));
    } else if (key == "revoked") {
      std::string id;
      if (!(value_in >> id)) throw Error(Errc::parse_error, where + "expected a subject id");
      fixture.revoked.insert(id);
    } else {
      throw Error(Errc::parse_error, where + "unknown key '" + key + "'");
    }
    if (value_in >> extra) throw Error(Errc::parse_error, where + "trailing text '" + extra + "'");
  }
  if (fixture.ca_id.empty()) throw Error(Errc::parse_error, "CA fixture has no 'ca' line");
  return fixture;
}

CaFixture load_ca_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open CA fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ca_fixture(buf.str());
}

CertificateAuthority::CertificateAuthority(std::string id, crypto::RsaKeyPair keys)
    : id_(std::move(id)), keys_(std::move(keys)) {}

Certificate CertificateAuthority::issue(std::string subject_id, const crypto::RsaPublicKey& subject_key,
                                        Timestamp not_before, Timestamp not_after) const {
  Certificate cert{std::move(subject_id), subject_key, id_, not_before, not_after, {}};
  cert.signature = crypto::pss_sign(keys_, as_bytes(certificate_body(cert)));
  return cert;
}

Certificate CertificateAuthority::issue(const CaFixture& fixture, const std::string& subject_id,
                                        const crypto::RsaPublicKey& subject_key) const {
  const auto& s = fixture.subject(subject_id);
  return issue(subject_id, subject_key, s.not_before, s.not_after);
}

OcspResponse CertificateAuthority::ocsp_status(const std::string& subject_id, Timestamp now) const {
  OcspResponse resp{subject_id, id_, is_revoked(subject_id) ? CertStatus::Revoked : CertStatus::Good, now, {}};
  resp.signature = crypto::pss_sign(keys_, as_bytes(ocsp_body(resp)));
  return resp;
}

}  // namespace drmcost::roap
