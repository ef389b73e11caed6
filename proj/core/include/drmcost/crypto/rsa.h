#pragma once

#include <cstdint>

#include "drmcost/common/bytes.h"
#include "drmcost/crypto/bignum.h"
#include "drmcost/crypto/primitives.h"

namespace drmcost::crypto {

inline constexpr int kRsaModulusBits = 1024;
inline constexpr std::size_t kRsaModulusBytes = 128;
inline constexpr std::uint64_t kDefaultPublicExponent = 65537;

struct RsaPublicKey {
  BigUint modulus;
  BigUint exponent;

  bool operator==(const RsaPublicKey&) const = default;
};

struct RsaKeyPair {
  BigUint modulus;
  BigUint public_exponent;
  BigUint private_exponent;

  RsaPublicKey public_key() const { return {modulus, public_exponent}; }

  bool operator==(const RsaKeyPair&) const = default;
};

/// Fresh 1024-bit key pair from two random 512-bit primes.
RsaKeyPair generate_rsa_keypair(std::uint64_t public_exponent = kDefaultPublicExponent);

/// Checks the structural invariants: modulus exactly 1024 bits,
/// 0 < e, d < n, and that d inverts e on a handful of random points.
/// Throws Error(invalid_argument).
void validate_keypair(const RsaKeyPair& keys);

/// m^exponent mod n. This single operation is RSAEP, RSADP, RSASP1 and
/// RSAVP1, depending on which exponent is passed.
/// Throws Error(out_of_range) when m >= n.
BigUint rsa_apply(const BigUint& modulus, const BigUint& exponent, const BigUint& m);

/// Encoded message for the one-hash signature approximation:
/// 0x00 0x01 0xFF..0xFF 0x00 || sha1(message), 128 bytes total.
Bytes signature_encoding(ByteView message);

/// One SHA-1 plus one private-key exponentiation; deterministic.
Bytes pss_sign(const RsaKeyPair& keys, ByteView message);
/// Never throws on malformed signatures; returns false instead.
bool pss_verify(const RsaPublicKey& key, ByteView message, ByteView signature);

}  // namespace drmcost::crypto
