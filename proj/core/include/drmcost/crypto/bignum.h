#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "drmcost/common/bytes.h"

struct bignum_st;

namespace drmcost::crypto {

/// Arbitrary precision non-negative integer with value semantics.
/// Storage is cleared on destruction.
class BigUint {
 public:
  BigUint();
  explicit BigUint(std::uint64_t value);
  BigUint(const BigUint& other);
  BigUint(BigUint&&) noexcept = default;
  BigUint& operator=(const BigUint& other);
  BigUint& operator=(BigUint&&) noexcept = default;
  ~BigUint();

  static BigUint from_bytes(ByteView big_endian);
  static BigUint from_hex(std::string_view hex);
  /// Uniform in [0, bound). bound must be positive.
  static BigUint random_below(const BigUint& bound);

  /// Big-endian, left-padded with zeros to `width` bytes. Throws
  /// Error(out_of_range) if the value does not fit.
  Bytes to_bytes(std::size_t width) const;
  Bytes to_bytes() const;
  /// Upper-case hex without leading zeros ("0" for zero).
  std::string to_hex() const;

  int bit_length() const;
  bool is_zero() const;

  /// this^exponent mod modulus.
  BigUint mod_exp(const BigUint& exponent, const BigUint& modulus) const;

  friend bool operator==(const BigUint& a, const BigUint& b);
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

  const bignum_st* raw() const { return bn_.get(); }
  bignum_st* raw() { return bn_.get(); }

 private:
  struct Deleter {
    void operator()(bignum_st* bn) const;
  };
  std::unique_ptr<bignum_st, Deleter> bn_;
};

}  // namespace drmcost::crypto
