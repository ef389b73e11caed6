#include "drmcost/crypto/primitives.h"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/rand.h>

#include <memory>
#include <new>

#include "drmcost/common/error.h"

namespace drmcost::crypto {
namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

CipherCtx new_cipher_ctx() {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw std::bad_alloc();
  return ctx;
}

[[noreturn]] void fail(Errc code, const char* what) { throw Error(code, what); }

}  // namespace

SymmetricKey::~SymmetricKey() { OPENSSL_cleanse(key_.data(), key_.size()); }

SymmetricKey SymmetricKey::generate() {
  SymmetricKey key;
  if (RAND_bytes(key.key_.data(), static_cast<int>(key.key_.size())) != 1) {
    fail(Errc::invalid_argument, "random key generation failed");
  }
  return key;
}

SymmetricKey SymmetricKey::from_bytes(ByteView bytes) {
  if (bytes.size() != kAesKeySize) {
    throw Error(Errc::invalid_length,
                "AES-128 key must be 16 bytes, got " + std::to_string(bytes.size()));
  }
  SymmetricKey key;
  std::copy(bytes.begin(), bytes.end(), key.key_.begin());
  return key;
}

Bytes random_bytes(std::size_t count) {
  Bytes out(count);
  if (count > 0 && RAND_bytes(out.data(), static_cast<int>(count)) != 1) {
    fail(Errc::invalid_argument, "random generation failed");
  }
  return out;
}

Iv random_iv() {
  Iv iv;
  if (RAND_bytes(iv.data(), static_cast<int>(iv.size())) != 1) fail(Errc::invalid_argument, "random IV failed");
  return iv;
}

Digest sha1(ByteView data) {
  Digest out;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha1(), nullptr) != 1 ||
      len != kDigestSize) {
    fail(Errc::invalid_argument, "SHA-1 computation failed");
  }
  return out;
}

Digest hmac_sha1(ByteView key, ByteView data) {
  Digest out;
  unsigned int len = 0;
  // HMAC() rejects a null key pointer even for zero length.
  static const std::uint8_t kEmpty = 0;
  const std::uint8_t* key_ptr = key.empty() ? &kEmpty : key.data();
  if (HMAC(EVP_sha1(), key_ptr, static_cast<int>(key.size()), data.data(), data.size(), out.data(), &len) ==
          nullptr ||
      len != kDigestSize) {
    fail(Errc::invalid_argument, "HMAC-SHA-1 computation failed");
  }
  return out;
}

Bytes aes_cbc_encrypt(const SymmetricKey& key, const Iv& iv, ByteView plaintext) {
  auto ctx = new_cipher_ctx();
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_128_cbc(), nullptr, key.bytes().data(), iv.data()) != 1) {
    fail(Errc::invalid_argument, "AES-CBC init failed");
  }
  Bytes out(plaintext.size() + kAesBlockSize);
  int written = 0;
  int final_len = 0;
  if (EVP_EncryptUpdate(ctx.get(), out.data(), &written, plaintext.data(), static_cast<int>(plaintext.size())) != 1 ||
      EVP_EncryptFinal_ex(ctx.get(), out.data() + written, &final_len) != 1) {
    fail(Errc::invalid_argument, "AES-CBC encryption failed");
  }
  out.resize(static_cast<std::size_t>(written + final_len));
  return out;
}

Bytes aes_cbc_decrypt(const SymmetricKey& key, const Iv& iv, ByteView ciphertext) {
  if (ciphertext.empty() || ciphertext.size() % kAesBlockSize != 0) {
    throw Error(Errc::invalid_length, "CBC ciphertext length " + std::to_string(ciphertext.size()) +
                                          " is not a positive multiple of 16");
  }
  auto ctx = new_cipher_ctx();
  if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_128_cbc(), nullptr, key.bytes().data(), iv.data()) != 1) {
    fail(Errc::invalid_argument, "AES-CBC init failed");
  }
  Bytes out(ciphertext.size() + kAesBlockSize);
  int written = 0;
  int final_len = 0;
  if (EVP_DecryptUpdate(ctx.get(), out.data(), &written, ciphertext.data(), static_cast<int>(ciphertext.size())) !=
      1) {
    fail(Errc::invalid_argument, "AES-CBC decryption failed");
  }
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + written, &final_len) != 1) {
    OPENSSL_cleanse(out.data(), out.size());
    fail(Errc::invalid_padding, "CBC padding check failed");
  }
  out.resize(static_cast<std::size_t>(written + final_len));
  return out;
}

namespace {

Bytes key_wrap_op(bool wrap, const SymmetricKey& kek, ByteView in) {
  auto ctx = new_cipher_ctx();
  EVP_CIPHER_CTX_set_flags(ctx.get(), EVP_CIPHER_CTX_FLAG_WRAP_ALLOW);
  if (EVP_CipherInit_ex(ctx.get(), EVP_aes_128_wrap(), nullptr, kek.bytes().data(), nullptr, wrap ? 1 : 0) != 1) {
    fail(Errc::invalid_argument, "AES key wrap init failed");
  }
  Bytes out(in.size() + kKeyWrapOverhead);
  int written = 0;
  if (EVP_CipherUpdate(ctx.get(), out.data(), &written, in.data(), static_cast<int>(in.size())) != 1 ||
      written <= 0) {
    if (wrap) fail(Errc::invalid_argument, "AES key wrap failed");
    fail(Errc::integrity_check_failed, "AES key unwrap integrity check failed");
  }
  out.resize(static_cast<std::size_t>(written));
  return out;
}

}  // namespace

Bytes aes_key_wrap(const SymmetricKey& kek, ByteView key_data) {
  if (key_data.size() < 16 || key_data.size() % 8 != 0) {
    throw Error(Errc::invalid_length, "key wrap input must be a multiple of 8 bytes and at least 16, got " +
                                          std::to_string(key_data.size()));
  }
  return key_wrap_op(true, kek, key_data);
}

Bytes aes_key_unwrap(const SymmetricKey& kek, ByteView wrapped) {
  if (wrapped.size() < 24 || wrapped.size() % 8 != 0) {
    throw Error(Errc::invalid_length, "wrapped key length " + std::to_string(wrapped.size()) + " is invalid");
  }
  return key_wrap_op(false, kek, wrapped);
}

Bytes kdf2(ByteView z, std::size_t out_len) {
  Bytes out;
  out.reserve(out_len + kDigestSize);
  Bytes block(z.begin(), z.end());
  block.resize(z.size() + 4);
  for (std::uint32_t counter = 1; out.size() < out_len; ++counter) {
    for (int i = 0; i < 4; ++i) block[z.size() + i] = static_cast<std::uint8_t>(counter >> (24 - 8 * i));
    Digest d = sha1(block);
    out.insert(out.end(), d.begin(), d.end());
  }
  OPENSSL_cleanse(block.data(), block.size());
  out.resize(out_len);
  return out;
}

}  // namespace drmcost::crypto
