#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "drmcost/common/bytes.h"
#include "drmcost/common/kv_record.h"
#include "drmcost/crypto/primitives.h"
#include "drmcost/crypto/rsa.h"
#include "drmcost/objects/dcf.h"

namespace drmcost::objects {

inline constexpr std::size_t kWrappedKcekSize = crypto::kAesKeySize + crypto::kKeyWrapOverhead;      // 24
inline constexpr std::size_t kKeyPairPayloadSize = 2 * crypto::kAesKeySize;                          // 32
inline constexpr std::size_t kC2Size = kKeyPairPayloadSize + crypto::kKeyWrapOverhead;              // 40
inline constexpr std::size_t kC1Size = crypto::kRsaModulusBytes;                                      // 128

/// The subset of the rights expression language this simulator enforces.
struct Permissions {
  bool play_allowed = true;
  std::optional<std::uint32_t> play_count_limit;

  static Permissions unlimited() { return {}; }
  static Permissions limited(std::uint32_t plays) { return {true, plays}; }

  bool operator==(const Permissions&) const = default;
};

/// Rights Object as delivered in an RO response.
///
/// c1 carries Z encrypted to the agent's public key; c2 is K_MAC || K_REK
/// wrapped under KEK = kdf2(Z, 16); wrapped_kcek is K_CEK wrapped under
/// K_REK. The MAC covers the canonical body.
struct RightsObject {
  std::string ro_id;
  std::string content_id;
  Permissions permissions;
  crypto::Digest dcf_hash{};
  Bytes wrapped_kcek;
  Bytes c1;
  Bytes c2;
  crypto::Digest mac{};
  std::optional<Bytes> signature;

  bool operator==(const RightsObject&) const = default;
};

/// Canonical body: every field except mac and signature, sorted by key.
/// These are exactly the bytes the MAC (and optional signature) cover.
std::string canonical_body(const RightsObject& ro);
/// Full canonical text including mac and, when present, signature.
std::string serialize_rights_object(const RightsObject& ro);
/// Strict: rejects duplicate, unknown, or mis-sized fields.
RightsObject parse_rights_object(std::string_view text);

/// Record helpers shared with the installed form of an RO.
void write_permissions(KvRecord& record, const Permissions& permissions);
Permissions read_permissions(const KvRecord& record);

/// Builds a Device RO for `agent_key`. Fresh K_MAC, K_REK and Z are drawn
/// for every call. `kcek` must be the key that encrypted `dcf`. When `sign`
/// is set the RI signs the canonical body.
RightsObject issue_rights_object(const crypto::RsaKeyPair& ri_keys, const crypto::RsaPublicKey& agent_key,
                                 std::string ro_id, const Dcf& dcf, const crypto::SymmetricKey& kcek,
                                 const Permissions& permissions, bool sign);

}  // namespace drmcost::objects
