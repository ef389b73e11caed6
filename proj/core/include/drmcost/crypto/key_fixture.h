#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drmcost/crypto/rsa.h"

namespace drmcost::crypto {

struct NamedKeyPair {
  std::string name;
  RsaKeyPair keys;

  bool operator==(const NamedKeyPair&) const = default;
};

// Fixture format: blocks separated by blank lines, each block holding
//
//   name = agent
//   n = <hex>
//   e = <hex>
//   d = <hex>
//
// `name` is optional; '#' starts a comment line.
std::vector<NamedKeyPair> parse_key_fixture(std::string_view text);
std::vector<NamedKeyPair> load_key_fixture(const std::filesystem::path& path);
std::string format_key_fixture(std::span<const NamedKeyPair> pairs);

/// Throws Error(invalid_argument) if no pair carries that name.
const RsaKeyPair& find_key(std::span<const NamedKeyPair> pairs, std::string_view name);

}  // namespace drmcost::crypto
