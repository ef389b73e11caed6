#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drmcost {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
  auto view = as_bytes(s);
  return Bytes(view.begin(), view.end());
}

inline Bytes to_bytes(ByteView b) { return Bytes(b.begin(), b.end()); }

inline std::string to_string(ByteView b) {
  return std::string(reinterpret_cast<const char*>(b.data()), b.size());
}

Bytes concat(std::initializer_list<ByteView> parts);

// Lower-case hex, no separators.
std::string to_hex(ByteView data);
// Accepts upper or lower case; throws Error(parse_error) on odd length or bad digits.
Bytes from_hex(std::string_view hex);

// Standard base64 with '=' padding.
std::string to_base64(ByteView data);
Bytes from_base64(std::string_view text);

// Big-endian fixed width integer encoding.
void append_u32_be(Bytes& out, std::uint32_t value);
void append_u64_be(Bytes& out, std::uint64_t value);

}  // namespace drmcost
