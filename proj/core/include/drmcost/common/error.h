#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drmcost {

/// Every failure the library reports. The spelling returned by errc_name()
/// is what the CLI prints, so tests and scripts can match on it.
enum class Errc {
  invalid_argument,
  invalid_length,
  parse_error,
  io_error,
  // crypto_primitives
  invalid_padding,
  integrity_check_failed,
  out_of_range,
  // drm_objects
  empty_content,
  malformed_container,
  // roap_protocol
  expired_certificate,
  revoked_certificate,
  bad_signature,
  invalid_ocsp,
  not_registered,
  no_ri_context,
  context_expired,
  unknown_ro_id,
  mac_mismatch,
  signature_invalid,
  no_rights,
  plays_exhausted,
  dcf_hash_mismatch,
  // cost_model / scenario_cli
  unit_mismatch,
  unknown_scenario,
  unknown_format,
  unknown_variant,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace drmcost
