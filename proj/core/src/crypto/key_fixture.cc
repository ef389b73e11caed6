#include "drmcost/crypto/key_fixture.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "drmcost/common/error.h"

namespace drmcost::crypto {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct PendingBlock {
  std::size_t first_line = 0;
  std::string name;
  std::optional<BigUint> n, e, d;

  bool empty() const { return name.empty() && !n && !e && !d; }
};

NamedKeyPair finish(PendingBlock& block) {
  if (!block.n || !block.e || !block.d) {
    throw Error(Errc::parse_error,
                "key block starting at line " + std::to_string(block.first_line) + " needs n, e and d");
  }
  NamedKeyPair out{block.name, RsaKeyPair{*block.n, *block.e, *block.d}};
  validate_keypair(out.keys);
  block = PendingBlock{};
  return out;
}

}  // namespace

std::vector<NamedKeyPair> parse_key_fixture(std::string_view text) {
  std::vector<NamedKeyPair> out;
  PendingBlock block;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (!block.empty()) out.push_back(finish(block));
      continue;
    }
    if (line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    if (block.empty()) block.first_line = line_no;
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    auto assign = [&](std::optional<BigUint>& slot) {
      if (slot) throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": duplicate " + std::string(key));
      slot = BigUint::from_hex(value);
    };
    if (key == "name") {
      block.name = std::string(value);
    } else if (key == "n") {
      assign(block.n);
    } else if (key == "e") {
      assign(block.e);
    } else if (key == "d") {
      assign(block.d);
    } else {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!block.empty()) out.push_back(finish(block));
  return out;
}

std::vector<NamedKeyPair> load_key_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open key fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_fixture(buf.str());
}

std::string format_key_fixture(std::span<const NamedKeyPair> pairs) {
  std::string out;
  for (const auto& pair : pairs) {
    if (!out.empty()) out += '\n';
    if (!pair.name.empty()) out += "name = " + pair.name + '\n';
    out += "n = " + pair.keys.modulus.to_hex() + '\n';
    out += "e = " + pair.keys.public_exponent.to_hex() + '\n';
    out += "d = " + pair.keys.private_exponent.to_hex() + '\n';
  }
  return out;
}

const RsaKeyPair& find_key(std::span<const NamedKeyPair> pairs, std::string_view name) {
  for (const auto& pair : pairs) {
    if (pair.name == name) return pair.keys;
  }
  throw Error(Errc::invalid_argument, "no key pair named '" + std::string(name) + "' in fixture");
}

}  // namespace drmcost::crypto
