#include "drmcost/crypto/rsa.h"

#include <openssl/bn.h>

#include <memory>
#include <new>

#include "drmcost/common/error.h"

namespace drmcost::crypto {
namespace {

struct CtxDeleter {
  void operator()(BN_CTX* ctx) const { BN_CTX_free(ctx); }
};

void check(int rc, const char* what) {
  if (rc != 1) throw Error(Errc::invalid_argument, what);
}

}  // namespace

RsaKeyPair generate_rsa_keypair(std::uint64_t public_exponent) {
  std::unique_ptr<BN_CTX, CtxDeleter> ctx(BN_CTX_new());
  if (!ctx) throw std::bad_alloc();
  const BigUint e(public_exponent);
  const BigUint one(1);

  for (;;) {
    BigUint p, q;
    check(BN_generate_prime_ex(p.raw(), kRsaModulusBits / 2, 0, nullptr, nullptr, nullptr), "prime generation");
    check(BN_generate_prime_ex(q.raw(), kRsaModulusBits / 2, 0, nullptr, nullptr, nullptr), "prime generation");
    if (p == q) continue;

    BigUint n;
    check(BN_mul(n.raw(), p.raw(), q.raw(), ctx.get()), "modulus");
    if (n.bit_length() != kRsaModulusBits) continue;

    BigUint p1, q1, phi, gcd;
    check(BN_sub(p1.raw(), p.raw(), one.raw()), "p-1");
    check(BN_sub(q1.raw(), q.raw(), one.raw()), "q-1");
    check(BN_mul(phi.raw(), p1.raw(), q1.raw(), ctx.get()), "phi");
    check(BN_gcd(gcd.raw(), e.raw(), phi.raw(), ctx.get()), "gcd");
    if (gcd != one) continue;

    BigUint d;
    if (BN_mod_inverse(d.raw(), e.raw(), phi.raw(), ctx.get()) == nullptr) continue;
    return RsaKeyPair{std::move(n), e, std::move(d)};
  }
}

void validate_keypair(const RsaKeyPair& keys) {
  if (keys.modulus.bit_length() != kRsaModulusBits) {
    throw Error(Errc::invalid_argument,
                "modulus has " + std::to_string(keys.modulus.bit_length()) + " bits, expected 1024");
  }
  if (keys.public_exponent.is_zero() || keys.public_exponent >= keys.modulus || keys.private_exponent.is_zero() ||
      keys.private_exponent >= keys.modulus) {
    throw Error(Errc::invalid_argument, "exponents must lie in (0, n)");
  }
  for (int i = 0; i < 4; ++i) {
    BigUint m = BigUint::random_below(keys.modulus);
    if (m.mod_exp(keys.public_exponent, keys.modulus).mod_exp(keys.private_exponent, keys.modulus) != m) {
      throw Error(Errc::invalid_argument, "private exponent does not invert the public exponent");
    }
  }
}

BigUint rsa_apply(const BigUint& modulus, const BigUint& exponent, const BigUint& m) {
  if (m >= modulus) throw Error(Errc::out_of_range, "RSA input is not smaller than the modulus");
  return m.mod_exp(exponent, modulus);
}

Bytes signature_encoding(ByteView message) {
  Digest h = sha1(message);
  Bytes em(kRsaModulusBytes, 0xff);
  em[0] = 0x00;
  em[1] = 0x01;
  const std::size_t separator = kRsaModulusBytes - kDigestSize - 1;
  em[separator] = 0x00;
  std::copy(h.begin(), h.end(), em.begin() + static_cast<std::ptrdiff_t>(separator + 1));
  return em;
}

Bytes pss_sign(const RsaKeyPair& keys, ByteView message) {
  BigUint em = BigUint::from_bytes(signature_encoding(message));
  return rsa_apply(keys.modulus, keys.private_exponent, em).to_bytes(kRsaModulusBytes);
}

bool pss_verify(const RsaPublicKey& key, ByteView message, ByteView signature) {
  if (signature.size() != kRsaModulusBytes) return false;
  BigUint s = BigUint::from_bytes(signature);
  if (s >= key.modulus) return false;
  BigUint recovered = s.mod_exp(key.exponent, key.modulus);
  return recovered == BigUint::from_bytes(signature_encoding(message));
}

}  // namespace drmcost::crypto
