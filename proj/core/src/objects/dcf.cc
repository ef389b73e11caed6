#include "drmcost/objects/dcf.h"

#include <algorithm>
#include <limits>

#include "drmcost/common/kv_record.h"

namespace drmcost::objects {
namespace {

std::string metadata_text(const Metadata& metadata) {
  KvRecord record;
  for (const auto& [key, value] : metadata) record.set(key, value);
  return record.serialize();
}

void append_section(Bytes& out, std::string_view text) {
  if (text.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::invalid_argument, "DCF section exceeds 4 GiB");
  }
  append_u32_be(out, static_cast<std::uint32_t>(text.size()));
  auto view = as_bytes(text);
  out.insert(out.end(), view.begin(), view.end());
}

void check_payload_shape(std::uint64_t plaintext_len, std::size_t payload_len, const char* section,
                         std::size_t offset) {
  if (payload_len == 0 || payload_len % crypto::kAesBlockSize != 0) {
    throw ContainerError(section, offset, "payload length " + std::to_string(payload_len) +
                                              " is not a positive multiple of 16");
  }
  if (plaintext_len > payload_len || payload_len >= plaintext_len + 17) {
    throw ContainerError(section, offset, "plaintext length " + std::to_string(plaintext_len) +
                                              " is inconsistent with payload length " +
                                              std::to_string(payload_len));
  }
}

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  ByteView take(std::size_t n, const char* section) {
    if (data_.size() - pos_ < n) {
      throw ContainerError(section, pos_, "truncated: section '" + std::string(section) + "' needs " +
                                              std::to_string(n) + " bytes, " +
                                              std::to_string(data_.size() - pos_) + " remain");
    }
    ByteView out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint64_t read_be(std::size_t width, const char* section) {
    std::uint64_t v = 0;
    for (auto b : take(width, section)) v = v << 8 | b;
    return v;
  }

  std::string read_section(const char* section) {
    auto len = static_cast<std::size_t>(read_be(4, section));
    return to_string(take(len, section));
  }

  ByteView rest() {
    ByteView out = data_.subspan(pos_);
    pos_ = data_.size();
    return out;
  }

  std::size_t pos() const { return pos_; }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace

ContainerError::ContainerError(std::string section, std::size_t offset, const std::string& reason)
    : Error(Errc::malformed_container, reason + " (section '" + section + "', offset " + std::to_string(offset) + ")"),
      section_(std::move(section)),
      offset_(offset) {}

PackagedContent package_content(ByteView plaintext, std::string content_id, Metadata metadata,
                                std::string rights_url) {
  if (plaintext.empty()) throw Error(Errc::empty_content, "cannot package empty content");
  metadata_text(metadata);  // validates keys and values up front

  PackagedContent out{Dcf{}, crypto::SymmetricKey::generate()};
  Dcf& dcf = out.dcf;
  dcf.content_id = std::move(content_id);
  dcf.rights_url = std::move(rights_url);
  dcf.metadata = std::move(metadata);
  dcf.iv = crypto::random_iv();
  dcf.encrypted_payload = crypto::aes_cbc_encrypt(out.kcek, dcf.iv, plaintext);
  dcf.plaintext_len = plaintext.size();
  return out;
}

Bytes decrypt_content(const Dcf& dcf, const crypto::SymmetricKey& kcek) {
  Bytes plain = crypto::aes_cbc_decrypt(kcek, dcf.iv, dcf.encrypted_payload);
  if (plain.size() != dcf.plaintext_len) {
    throw Error(Errc::invalid_padding, "decrypted length does not match the container's plaintext length");
  }
  return plain;
}

Bytes serialize_dcf(const Dcf& dcf) {
  check_payload_shape(dcf.plaintext_len, dcf.encrypted_payload.size(), "payload", 0);
  std::string meta = metadata_text(dcf.metadata);

  Bytes out;
  out.reserve(64 + dcf.content_id.size() + dcf.rights_url.size() + meta.size() + dcf.encrypted_payload.size());
  out.insert(out.end(), std::begin(kDcfMagic), std::end(kDcfMagic));
  out.push_back(kDcfVersion);
  append_section(out, dcf.content_id);
  append_section(out, dcf.rights_url);
  append_section(out, meta);
  out.insert(out.end(), dcf.iv.begin(), dcf.iv.end());
  append_u64_be(out, dcf.plaintext_len);
  out.insert(out.end(), dcf.encrypted_payload.begin(), dcf.encrypted_payload.end());
  return out;
}

Dcf parse_dcf(ByteView data) {
  Reader in(data);
  ByteView magic = in.take(4, "magic");
  if (!std::equal(magic.begin(), magic.end(), std::begin(kDcfMagic))) {
    throw ContainerError("magic", 0, "bad magic, not a DCF2 container");
  }
  auto version = in.read_be(1, "version");
  if (version != kDcfVersion) {
    throw ContainerError("version", 4, "unsupported container version " + std::to_string(version));
  }

  Dcf dcf;
  dcf.content_id = in.read_section("content_id");
  dcf.rights_url = in.read_section("rights_url");
  std::size_t meta_offset = in.pos();
  std::string meta = in.read_section("metadata");
  try {
    const KvRecord record = KvRecord::parse(meta);
    for (const auto& [key, value] : record.fields()) dcf.metadata.emplace(key, value);
  } catch (const Error& e) {
    throw ContainerError("metadata", meta_offset, e.detail());
  }
  ByteView iv = in.take(crypto::kAesBlockSize, "iv");
  std::copy(iv.begin(), iv.end(), dcf.iv.begin());
  dcf.plaintext_len = in.read_be(8, "plaintext_len");
  std::size_t payload_offset = in.pos();
  ByteView payload = in.rest();
  check_payload_shape(dcf.plaintext_len, payload.size(), "payload", payload_offset);
  dcf.encrypted_payload.assign(payload.begin(), payload.end());
  return dcf;
}

crypto::Digest compute_dcf_hash(const Dcf& dcf) { return crypto::sha1(serialize_dcf(dcf)); }

}  // namespace drmcost::objects
