#pragma once

#include <chrono>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "drmcost/common/bytes.h"
#include "drmcost/crypto/rsa.h"

namespace drmcost::roap {

/// Simulation time. Always passed explicitly; nothing reads the wall clock.
using Timestamp = std::chrono::sys_seconds;

inline Timestamp at_seconds(std::int64_t s) { return Timestamp{std::chrono::seconds{s}}; }
inline std::int64_t seconds_of(Timestamp t) { return t.time_since_epoch().count(); }

struct Certificate {
  std::string subject_id;
  crypto::RsaPublicKey subject_public_key;
  std::string issuer_id;
  Timestamp not_before{};
  Timestamp not_after{};
  Bytes signature;

  bool operator==(const Certificate&) const = default;
};

enum class CertStatus { Good, Revoked };

struct OcspResponse {
  std::string cert_subject_id;
  std::string responder_id;
  CertStatus status = CertStatus::Good;
  Timestamp produced_at{};
  Bytes signature;

  bool operator==(const OcspResponse&) const = default;
};

/// Bytes covered by the CA signature.
std::string certificate_body(const Certificate& cert);
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

std::string ocsp_body(const OcspResponse& resp);
std::string serialize_ocsp(const OcspResponse& resp);
OcspResponse parse_ocsp(std::string_view text);

bool within_validity(const Certificate& cert, Timestamp now);

/// Signature and temporal validity.
bool verify_certificate(const Certificate& cert, const crypto::RsaPublicKey& ca_key, Timestamp now);
/// Signature only. A correctly signed "revoked" response verifies; the
/// caller decides what the status means.
bool verify_ocsp(const OcspResponse& resp, const crypto::RsaPublicKey& ca_key);

/// Subjects, validity windows and the revocation set a CA is set up with.
struct CaFixture {
  struct Subject {
    std::string id;
    Timestamp not_before{};
    Timestamp not_after{};
  };
  std::string ca_id;
  std::vector<Subject> subjects;
  std::set<std::string> revoked;

  const Subject& subject(std::string_view id) const;
};

// Text form:
//   ca = <ca id>
//   subject = <id> <not_before> <not_after>     (unix seconds)
//   revoked = <id>
CaFixture parse_ca_fixture(std::string_view text);
CaFixture load_ca_fixture(const std::filesystem::path& path);

/// Certification authority and OCSP responder in one.
class CertificateAuthority {
 public:
  CertificateAuthority(std::string id, crypto::RsaKeyPair keys);

  const std::string& id() const { return id_; }
  crypto::RsaPublicKey public_key() const { return keys_.public_key(); }

  Certificate issue(std::string subject_id, const crypto::RsaPublicKey& subject_key, Timestamp not_before,
                    Timestamp not_after) const;
  /// Issues with the validity window the fixture lists for `subject_id`.
  Certificate issue(const CaFixture& fixture, const std::string& subject_id,
                    const crypto::RsaPublicKey& subject_key) const;

  void revoke(const std::string& subject_id) { revoked_.insert(subject_id); }
  bool is_revoked(const std::string& subject_id) const { return revoked_.contains(subject_id); }

  OcspResponse ocsp_status(const std::string& subject_id, Timestamp now) const;

 private:
  std::string id_;
  crypto::RsaKeyPair keys_;
  std::set<std::string> revoked_;
};

}  // namespace drmcost::roap
