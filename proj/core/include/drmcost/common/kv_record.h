#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "drmcost/common/bytes.h"

namespace drmcost {

/// Canonical `key=value` text record.
///
/// Serialization emits one line per field, keys in byte-wise sorted order,
/// each line terminated by '\n'. Keys are limited to [a-z0-9_.] and values
/// may not contain '\n', so a given set of fields has exactly one encoding.
/// Binary values are stored base64.
class KvRecord {
 public:
  void set(std::string key, std::string value);
  void set_bytes(std::string key, ByteView value);
  void set_uint(std::string key, std::uint64_t value);
  void set_int(std::string key, std::int64_t value);
  void erase(std::string_view key);

  bool contains(std::string_view key) const;
  std::optional<std::string> find(std::string_view key) const;

  // The getters throw Error(parse_error) naming the field when it is absent
  // or does not decode.
  const std::string& get(std::string_view key) const;
  Bytes get_bytes(std::string_view key) const;
  Bytes get_bytes(std::string_view key, std::size_t expected_size) const;
  std::uint64_t get_uint(std::string_view key) const;
  std::int64_t get_int(std::string_view key) const;

  /// Fails with parse_error if any field is outside `allowed`.
  void require_only(std::initializer_list<std::string_view> allowed) const;

  std::string serialize() const;
  std::string serialize_without(std::initializer_list<std::string_view> excluded) const;

  /// Strict parse: rejects duplicate keys, lines without '=', bad key
  /// characters and a missing final newline.
  static KvRecord parse(std::string_view text);

  std::size_t size() const { return fields_.size(); }
  const std::map<std::string, std::string, std::less<>>& fields() const { return fields_; }

  bool operator==(const KvRecord&) const = default;

 private:
  std::map<std::string, std::string, std::less<>> fields_;
};

}  // namespace drmcost
