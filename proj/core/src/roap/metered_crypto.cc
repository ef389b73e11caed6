#include "drmcost/roap/metered_crypto.h"

#include <algorithm>

namespace drmcost::roap {

using cost::AlgorithmId;

namespace {
constexpr std::uint64_t bits_of(std::size_t bytes) { return static_cast<std::uint64_t>(bytes) * 8; }
}  // namespace

crypto::Digest MeteredCrypto::sha1(ByteView data) {
  record(AlgorithmId::Sha1, bits_of(data.size()));
  return crypto::sha1(data);
}

crypto::Digest MeteredCrypto::hmac_sha1(const crypto::SymmetricKey& key, ByteView data) {
  record(AlgorithmId::HmacSha1, bits_of(data.size()));
  return crypto::hmac_sha1(key.bytes(), data);
}

Bytes MeteredCrypto::aes_cbc_encrypt(const crypto::SymmetricKey& key, const crypto::Iv& iv, ByteView plaintext) {
  // The cipher processes the padded length.
  record(AlgorithmId::AesEnc, bits_of((plaintext.size() / crypto::kAesBlockSize + 1) * crypto::kAesBlockSize));
  return crypto::aes_cbc_encrypt(key, iv, plaintext);
}

Bytes MeteredCrypto::aes_cbc_decrypt(const crypto::SymmetricKey& key, const crypto::Iv& iv, ByteView ciphertext) {
  record(AlgorithmId::AesDec, bits_of(std::max<std::size_t>(ciphertext.size(), 1)));
  return crypto::aes_cbc_decrypt(key, iv, ciphertext);
}

Bytes MeteredCrypto::key_wrap(const crypto::SymmetricKey& kek, ByteView key_data) {
  record(AlgorithmId::AesEnc, bits_of(std::max<std::size_t>(key_data.size(), 1)));
  return crypto::aes_key_wrap(kek, key_data);
}

Bytes MeteredCrypto::key_unwrap(const crypto::SymmetricKey& kek, ByteView wrapped) {
  std::size_t payload = wrapped.size() > crypto::kKeyWrapOverhead ? wrapped.size() - crypto::kKeyWrapOverhead : 1;
  record(AlgorithmId::AesDec, bits_of(payload));
  return crypto::aes_key_unwrap(kek, wrapped);
}

Bytes MeteredCrypto::kdf2(ByteView z, std::size_t out_len) {
  const std::size_t blocks = (out_len + crypto::kDigestSize - 1) / crypto::kDigestSize;
  for (std::size_t i = 0; i < blocks; ++i) record(AlgorithmId::Sha1, bits_of(z.size() + 4));
  return crypto::kdf2(z, out_len);
}

crypto::BigUint MeteredCrypto::rsa_private(const crypto::RsaKeyPair& keys, const crypto::BigUint& input) {
  record(AlgorithmId::RsaPriv, cost::kRsaOperandBits);
  return crypto::rsa_apply(keys.modulus, keys.private_exponent, input);
}

crypto::BigUint MeteredCrypto::rsa_public(const crypto::RsaPublicKey& key, const crypto::BigUint& input) {
  record(AlgorithmId::RsaPub, cost::kRsaOperandBits);
  return crypto::rsa_apply(key.modulus, key.exponent, input);
}

Bytes MeteredCrypto::sign(const crypto::RsaKeyPair& keys, ByteView message) {
  record(AlgorithmId::Sha1, bits_of(std::max<std::size_t>(message.size(), 1)));
  record(AlgorithmId::RsaPriv, cost::kRsaOperandBits);
  return crypto::pss_sign(keys, message);
}

bool MeteredCrypto::verify(const crypto::RsaPublicKey& key, ByteView message, ByteView signature) {
  record(AlgorithmId::Sha1, bits_of(std::max<std::size_t>(message.size(), 1)));
  record(AlgorithmId::RsaPub, cost::kRsaOperandBits);
  return crypto::pss_verify(key, message, signature);
}

}  // namespace drmcost::roap
