#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "drmcost/common/bytes.h"

/// Symmetric algorithms of the mandated OMA DRM 2 suite: SHA-1, HMAC-SHA-1,
/// AES-128-CBC for content, AES-128 key wrap for keys, and KDF2 over SHA-1.
/// All functions are pure and thread-safe.
namespace drmcost::crypto {

inline constexpr std::size_t kDigestSize = 20;
inline constexpr std::size_t kAesKeySize = 16;
inline constexpr std::size_t kAesBlockSize = 16;
inline constexpr std::size_t kKeyWrapOverhead = 8;

using Digest = std::array<std::uint8_t, kDigestSize>;
using Iv = std::array<std::uint8_t, kAesBlockSize>;

/// 128-bit AES key. Plays the role of K_CEK, K_REK, K_MAC, K_DEV and KEK.
class SymmetricKey {
 public:
  SymmetricKey() = default;
  SymmetricKey(const SymmetricKey&) = default;
  SymmetricKey& operator=(const SymmetricKey&) = default;
  ~SymmetricKey();

  static SymmetricKey generate();
  /// Throws Error(invalid_length) unless exactly 16 bytes.
  static SymmetricKey from_bytes(ByteView bytes);

  ByteView bytes() const { return key_; }

  bool operator==(const SymmetricKey&) const = default;

 private:
  std::array<std::uint8_t, kAesKeySize> key_{};
};

Bytes random_bytes(std::size_t count);
Iv random_iv();

Digest sha1(ByteView data);
Digest hmac_sha1(ByteView key, ByteView data);

/// PKCS#7 padded CBC. Output length is the next multiple of 16 strictly
/// greater than the input length.
Bytes aes_cbc_encrypt(const SymmetricKey& key, const Iv& iv, ByteView plaintext);
/// Throws Error(invalid_length) when the input is not a positive multiple of
/// 16 bytes and Error(invalid_padding) when the padding does not check out.
Bytes aes_cbc_decrypt(const SymmetricKey& key, const Iv& iv, ByteView ciphertext);

/// RFC 3394 key wrap with the default integrity register. Input must be a
/// multiple of 8 bytes and at least 16; output is 8 bytes longer.
Bytes aes_key_wrap(const SymmetricKey& kek, ByteView key_data);
/// Throws Error(integrity_check_failed) on tampering or a wrong KEK.
Bytes aes_key_unwrap(const SymmetricKey& kek, ByteView wrapped);

/// KDF2 with SHA-1: sha1(z || counter) for counter = 1, 2, ... as 32-bit
/// big-endian, concatenated and truncated to out_len.
Bytes kdf2(ByteView z, std::size_t out_len);

inline ByteView as_view(const Digest& d) { return {d.data(), d.size()}; }

}  // namespace drmcost::crypto
