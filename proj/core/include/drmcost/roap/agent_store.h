#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drmcost/common/bytes.h"
#include "drmcost/crypto/primitives.h"
#include "drmcost/crypto/rsa.h"
#include "drmcost/objects/rights_object.h"
#include "drmcost/roap/certificate.h"

namespace drmcost::roap {

/// Agent-side record of a verified relationship with one Rights Issuer.
struct RiContext {
  std::string ri_id;
  crypto::RsaPublicKey ri_public_key;
  Timestamp cert_not_after{};
  Timestamp established_at{};

  bool valid_at(Timestamp now) const { return now <= cert_not_after; }
  bool operator==(const RiContext&) const = default;
};

/// A Rights Object after installation. K_MAC || K_REK are re-wrapped under
/// the device key (c2dev), so consumption never needs the private key.
/// c1 and c2 are kept only because the MAC covers them.
struct InstalledRo {
  std::string ro_id;
  std::string content_id;
  objects::Permissions permissions;
  std::optional<std::uint32_t> remaining_plays;
  crypto::Digest dcf_hash{};
  Bytes wrapped_kcek;
  Bytes c1;
  Bytes c2;
  Bytes c2dev;
  crypto::Digest mac{};
  std::optional<Bytes> signature;

  /// The RO fields the MAC was computed over.
  objects::RightsObject as_rights_object() const;

  bool operator==(const InstalledRo&) const = default;
};

std::string serialize_ri_context(const RiContext& ctx);
RiContext parse_ri_context(std::string_view text);
std::string serialize_installed_ro(const InstalledRo& ro);
InstalledRo parse_installed_ro(std::string_view text);

/// Persistent agent state: `<root>/ri_contexts/<ri_id>.ctx` and
/// `<root>/installed/<ro_id>.iro`. Every write goes to a temporary file in
/// the same directory which is then renamed over the target.
class AgentStore {
 public:
  explicit AgentStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  void save(const RiContext& ctx) const;
  void save(const InstalledRo& ro) const;

  std::vector<RiContext> load_ri_contexts() const;
  std::vector<InstalledRo> load_installed() const;

 private:
  std::filesystem::path root_;
};

}  // namespace drmcost::roap
