#include "drmcost/crypto/bignum.h"

#include <openssl/bn.h>
#include <openssl/crypto.h>

#include <new>

#include "drmcost/common/error.h"

namespace drmcost::crypto {
namespace {

BIGNUM* checked(BIGNUM* bn) {
  if (bn == nullptr) throw std::bad_alloc();
  return bn;
}

struct CtxDeleter {
  void operator()(BN_CTX* ctx) const { BN_CTX_free(ctx); }
};

}  // namespace

void BigUint::Deleter::operator()(bignum_st* bn) const { BN_clear_free(bn); }

BigUint::BigUint() : bn_(checked(BN_new())) {}

BigUint::BigUint(std::uint64_t value) : BigUint() {
  // BN_set_word takes BN_ULONG, which is 64-bit on every platform we build for.
  static_assert(sizeof(BN_ULONG) >= sizeof(std::uint64_t));
  BN_set_word(bn_.get(), value);
}

BigUint::BigUint(const BigUint& other) : bn_(checked(BN_dup(other.bn_.get()))) {}

BigUint& BigUint::operator=(const BigUint& other) {
  if (this != &other) {
    if (!bn_) bn_.reset(checked(BN_new()));
    if (BN_copy(bn_.get(), other.bn_.get()) == nullptr) throw std::bad_alloc();
  }
  return *this;
}

BigUint::~BigUint() = default;

BigUint BigUint::from_bytes(ByteView big_endian) {
  BigUint out;
  if (BN_bin2bn(big_endian.data(), static_cast<int>(big_endian.size()), out.bn_.get()) == nullptr) {
    throw std::bad_alloc();
  }
  return out;
}

BigUint BigUint::from_hex(std::string_view hex) {
  if (hex.empty()) throw Error(Errc::parse_error, "empty hex integer");
  std::string digits(hex);
  for (char c : digits) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
    if (!ok) throw Error(Errc::parse_error, "invalid hex integer '" + digits + "'");
  }
  BigUint out;
  BIGNUM* raw = out.bn_.get();
  if (BN_hex2bn(&raw, digits.c_str()) == 0) throw Error(Errc::parse_error, "invalid hex integer");
  return out;
}

BigUint BigUint::random_below(const BigUint& bound) {
  if (bound.is_zero()) throw Error(Errc::invalid_argument, "random_below requires a positive bound");
  BigUint out;
  if (BN_rand_range(out.bn_.get(), bound.bn_.get()) != 1) {
    throw Error(Errc::invalid_argument, "random number generation failed");
  }
  return out;
}

Bytes BigUint::to_bytes(std::size_t width) const {
  if (static_cast<std::size_t>(BN_num_bytes(bn_.get())) > width) {
    throw Error(Errc::out_of_range, "integer does not fit in " + std::to_string(width) + " bytes");
  }
  Bytes out(width);
  BN_bn2binpad(bn_.get(), out.data(), static_cast<int>(width));
  return out;
}

Bytes BigUint::to_bytes() const { return to_bytes(static_cast<std::size_t>(BN_num_bytes(bn_.get()))); }

std::string BigUint::to_hex() const {
  char* text = BN_bn2hex(bn_.get());
  if (text == nullptr) throw std::bad_alloc();
  std::string out(text);
  OPENSSL_free(text);
  return out;
}

int BigUint::bit_length() const { return BN_num_bits(bn_.get()); }

bool BigUint::is_zero() const { return BN_is_zero(bn_.get()) != 0; }

BigUint BigUint::mod_exp(const BigUint& exponent, const BigUint& modulus) const {
  std::unique_ptr<BN_CTX, CtxDeleter> ctx(BN_CTX_new());
  if (!ctx) throw std::bad_alloc();
  BigUint out;
  if (BN_mod_exp(out.bn_.get(), bn_.get(), exponent.bn_.get(), modulus.bn_.get(), ctx.get()) != 1) {
    throw Error(Errc::invalid_argument, "modular exponentiation failed");
  }
  return out;
}

bool operator==(const BigUint& a, const BigUint& b) { return BN_cmp(a.raw(), b.raw()) == 0; }

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
  int c = BN_cmp(a.raw(), b.raw());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace drmcost::crypto
