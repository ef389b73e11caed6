#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "drmcost/common/bytes.h"
#include "drmcost/common/error.h"
#include "drmcost/crypto/primitives.h"

namespace drmcost::objects {

using Metadata = std::map<std::string, std::string>;

/// Content Object: encrypted media plus descriptive metadata.
struct Dcf {
  std::string content_id;
  std::string rights_url;
  Metadata metadata;
  crypto::Iv iv{};
  Bytes encrypted_payload;
  std::uint64_t plaintext_len = 0;

  bool operator==(const Dcf&) const = default;
};

struct PackagedContent {
  Dcf dcf;
  crypto::SymmetricKey kcek;
};

/// Encrypts `plaintext` under a fresh K_CEK and IV. Metadata keys follow the
/// canonical record rules ([a-z0-9_.]); values may not contain newlines.
/// Throws Error(empty_content) for empty input.
PackagedContent package_content(ByteView plaintext, std::string content_id, Metadata metadata,
                                std::string rights_url);

/// Decrypts the payload and checks the recovered length against plaintext_len.
Bytes decrypt_content(const Dcf& dcf, const crypto::SymmetricKey& kcek);

/// Raised by parse_dcf; carries the section being read and the byte offset
/// at which parsing stopped.
class ContainerError : public Error {
 public:
  ContainerError(std::string section, std::size_t offset, const std::string& reason);

  const std::string& section() const noexcept { return section_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string section_;
  std::size_t offset_;
};

inline constexpr char kDcfMagic[4] = {'D', 'C', 'F', '2'};
inline constexpr std::uint8_t kDcfVersion = 1;

// Layout: "DCF2" | version u8 | u32 len + content_id | u32 len + rights_url |
// u32 len + metadata record | 16-byte IV | u64 plaintext_len | payload.
// All integers big-endian.
Bytes serialize_dcf(const Dcf& dcf);
Dcf parse_dcf(ByteView data);

/// SHA-1 over serialize_dcf(dcf).
crypto::Digest compute_dcf_hash(const Dcf& dcf);

}  // namespace drmcost::objects
