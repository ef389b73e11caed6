#pragma once

#include <cstddef>

#include "drmcost/common/bytes.h"
#include "drmcost/cost/trace.h"
#include "drmcost/crypto/primitives.h"
#include "drmcost/crypto/rsa.h"

namespace drmcost::roap {

/// Front for every crypto call the DRM Agent makes. Each call appends the
/// event the cost model prices to the trace, tagged with the current phase,
/// before running the real primitive.
///
/// Symmetric events carry logical payload bits: a key unwrap of 40 bytes is
/// recorded as a 256-bit AES decryption, since the 64-bit integrity register
/// is not payload.
class MeteredCrypto {
 public:
  MeteredCrypto(cost::OpTrace& trace, cost::Phase phase) : trace_(trace), phase_(phase) {}

  cost::Phase phase() const { return phase_; }

  crypto::Digest sha1(ByteView data);
  crypto::Digest hmac_sha1(const crypto::SymmetricKey& key, ByteView data);

  Bytes aes_cbc_encrypt(const crypto::SymmetricKey& key, const crypto::Iv& iv, ByteView plaintext);
  Bytes aes_cbc_decrypt(const crypto::SymmetricKey& key, const crypto::Iv& iv, ByteView ciphertext);

  Bytes key_wrap(const crypto::SymmetricKey& kek, ByteView key_data);
  Bytes key_unwrap(const crypto::SymmetricKey& kek, ByteView wrapped);

  /// One SHA-1 event per counter block.
  Bytes kdf2(ByteView z, std::size_t out_len);

  crypto::BigUint rsa_private(const crypto::RsaKeyPair& keys, const crypto::BigUint& input);
  crypto::BigUint rsa_public(const crypto::RsaPublicKey& key, const crypto::BigUint& input);

  /// SHA-1 over the message plus one private-key operation.
  Bytes sign(const crypto::RsaKeyPair& keys, ByteView message);
  /// SHA-1 over the message plus one public-key operation.
  bool verify(const crypto::RsaPublicKey& key, ByteView message, ByteView signature);

 private:
  void record(cost::AlgorithmId algorithm, std::uint64_t bits) { trace_.record(phase_, algorithm, bits); }

  cost::OpTrace& trace_;
  cost::Phase phase_;
};

}  // namespace drmcost::roap
