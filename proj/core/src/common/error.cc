#include "drmcost/common/error.h"

namespace drmcost {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_length: return "invalid-length";
    case Errc::parse_error: return "parse-error";
    case Errc::io_error: return "io-error";
    case Errc::invalid_padding: return "invalid-padding";
    case Errc::integrity_check_failed: return "unwrap-integrity-failure";
    case Errc::out_of_range: return "out-of-range";
    case Errc::empty_content: return "empty-content";
    case Errc::malformed_container: return "malformed-container";
    case Errc::expired_certificate: return "expired-certificate";
    case Errc::revoked_certificate: return "revoked-certificate";
    case Errc::bad_signature: return "bad-signature";
    case Errc::invalid_ocsp: return "invalid-ocsp";
    case Errc::not_registered: return "not-registered";
    case Errc::no_ri_context: return "no-ri-context";
    case Errc::context_expired: return "context-expired";
    case Errc::unknown_ro_id: return "unknown-ro-id";
    case Errc::mac_mismatch: return "mac-mismatch";
    case Errc::signature_invalid: return "signature-invalid";
    case Errc::no_rights: return "no-rights";
    case Errc::plays_exhausted: return "plays-exhausted";
    case Errc::dcf_hash_mismatch: return "dcf-hash-mismatch";
    case Errc::unit_mismatch: return "unit-mismatch";
    case Errc::unknown_scenario: return "unknown-scenario";
    case Errc::unknown_format: return "unknown-format";
    case Errc::unknown_variant: return "unknown-variant";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

}  // namespace drmcost
