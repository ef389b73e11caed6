#include "drmcost/common/kv_record.h"

#include <algorithm>
#include <charconv>

#include "drmcost/common/error.h"

namespace drmcost {
namespace {

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  return std::all_of(key.begin(), key.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
  });
}

void check_field(std::string_view key, std::string_view value) {
  if (!valid_key(key)) throw Error(Errc::invalid_argument, "invalid record key '" + std::string(key) + "'");
  if (value.find('\n') != std::string_view::npos) {
    throw Error(Errc::invalid_argument, "record value for '" + std::string(key) + "' contains a newline");
  }
}

template <typename Int>
Int parse_integer(std::string_view key, const std::string& text) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::parse_error, "field '" + std::string(key) + "' is not an integer");
  }
  return value;
}

}  // namespace

void KvRecord::set(std::string key, std::string value) {
  check_field(key, value);
  fields_.insert_or_assign(std::move(key), std::move(value));
}

void KvRecord::set_bytes(std::string key, ByteView value) { set(std::move(key), to_base64(value)); }

void KvRecord::set_uint(std::string key, std::uint64_t value) { set(std::move(key), std::to_string(value)); }

void KvRecord::set_int(std::string key, std::int64_t value) { set(std::move(key), std::to_string(value)); }

void KvRecord::erase(std::string_view key) {
  auto it = fields_.find(key);
  if (it != fields_.end()) fields_.erase(it);
}

bool KvRecord::contains(std::string_view key) const { return fields_.find(key) != fields_.end(); }

std::optional<std::string> KvRecord::find(std::string_view key) const {
  auto it = fields_.find(key);
  if (it == fields_.end()) return std::nullopt;
  return it->second;
}

const std::string& KvRecord::get(std::string_view key) const {
  auto it = fields_.find(key);
  if (it == fields_.end()) throw Error(Errc::parse_error, "missing field '" + std::string(key) + "'");
  return it->second;
}

Bytes KvRecord::get_bytes(std::string_view key) const {
  const std::string& text = get(key);
  try {
    return from_base64(text);
  } catch (const Error& e) {
    throw Error(Errc::parse_error, "field '" + std::string(key) + "': " + e.detail());
  }
}

Bytes KvRecord::get_bytes(std::string_view key, std::size_t expected_size) const {
  Bytes value = get_bytes(key);
  if (value.size() != expected_size) {
    throw Error(Errc::parse_error, "field '" + std::string(key) + "' has " + std::to_string(value.size()) +
                                       " bytes, expected " + std::to_string(expected_size));
  }
  return value;
}

std::uint64_t KvRecord::get_uint(std::string_view key) const {
  return parse_integer<std::uint64_t>(key, get(key));
}

std::int64_t KvRecord::get_int(std::string_view key) const {
  return parse_integer<std::int64_t>(key, get(key));
}

void KvRecord::require_only(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [key, value] : fields_) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(Errc::parse_error, "unexpected field '" + key + "'");
    }
  }
}

std::string KvRecord::serialize() const { return serialize_without({}); }

std::string KvRecord::serialize_without(std::initializer_list<std::string_view> excluded) const {
  std::string out;
  for (const auto& [key, value] : fields_) {
    if (std::find(excluded.begin(), excluded.end(), key) != excluded.end()) continue;
    out.append(key).push_back('=');
    out.append(value).push_back('\n');
  }
  return out;
}

KvRecord KvRecord::parse(std::string_view text) {
  KvRecord record;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    if (eol == std::string_view::npos) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + " is not newline terminated");
    }
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol + 1);
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + " has no '='");
    }
    std::string_view key = line.substr(0, eq);
    if (!valid_key(key)) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + " has an invalid key");
    }
    if (record.contains(key)) {
      throw Error(Errc::parse_error, "duplicate field '" + std::string(key) + "'");
    }
    record.fields_.emplace(std::string(key), std::string(line.substr(eq + 1)));
  }
  return record;
}

}  // namespace drmcost
