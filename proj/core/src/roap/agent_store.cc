#include "drmcost/roap/agent_store.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "drmcost/common/error.h"
#include "drmcost/common/kv_record.h"

namespace drmcost::roap {
namespace fs = std::filesystem;

namespace {

constexpr const char* kContextDir = "ri_contexts";
constexpr const char* kInstalledDir = "installed";

crypto::Digest digest_from(const Bytes& b) {
  crypto::Digest d;
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

std::string safe_file_name(std::string_view id, std::string_view ext) {
  bool ok = !id.empty() && id != "." && id != ".." && std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_' ||
           c == '.';
  });
  if (!ok) throw Error(Errc::invalid_argument, "identifier '" + std::string(id) + "' is not usable as a file name");
  return std::string(id) + std::string(ext);
}

void write_atomically(const fs::path& target, const std::string& contents) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error(Errc::io_error, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(Errc::io_error, "cannot rename " + tmp.string() + ": " + ec.message());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename T, typename Parse>
std::vector<T> load_dir(const fs::path& dir, std::string_view ext, Parse parse) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ext) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<T> out;
  for (const auto& f : files) out.push_back(parse(read_file(f)));
  return out;
}

}  // namespace

objects::RightsObject InstalledRo::as_rights_object() const {
  return objects::RightsObject{ro_id, content_id, permissions, dcf_hash, wrapped_kcek, c1, c2, mac, signature};
}

std::string serialize_ri_context(const RiContext& ctx) {
  KvRecord r;
  r.set("type", "ri_context");
  r.set("ri_id", ctx.ri_id);
  r.set("ri_key.n", ctx.ri_public_key.modulus.to_hex());
  r.set("ri_key.e", ctx.ri_public_key.exponent.to_hex());
  r.set_int("cert_not_after", seconds_of(ctx.cert_not_after));
  r.set_int("established_at", seconds_of(ctx.established_at));
  return r.serialize();
}

RiContext parse_ri_context(std::string_view text) {
  KvRecord r = KvRecord::parse(text);
  r.require_only({"type", "ri_id", "ri_key.n", "ri_key.e", "cert_not_after", "established_at"});
  if (r.get("type") != "ri_context") throw Error(Errc::parse_error, "not an RI context record");
  return RiContext{r.get("ri_id"),
                   {crypto::BigUint::from_hex(r.get("ri_key.n")), crypto::BigUint::from_hex(r.get("ri_key.e"))},
                   at_seconds(r.get_int("cert_not_after")),
                   at_seconds(r.get_int("established_at"))};
}

std::string serialize_installed_ro(const InstalledRo& ro) {
  KvRecord r;
  r.set("type", "installed_ro");
  r.set("ro_id", ro.ro_id);
  r.set("content_id", ro.content_id);
  objects::write_permissions(r, ro.permissions);
  if (ro.remaining_plays) r.set_uint("remaining_plays", *ro.remaining_plays);
  r.set_bytes("dcf_hash", crypto::as_view(ro.dcf_hash));
  r.set_bytes("wrapped_kcek", ro.wrapped_kcek);
  r.set_bytes("c1", ro.c1);
  r.set_bytes("c2", ro.c2);
  r.set_bytes("c2dev", ro.c2dev);
  r.set_bytes("mac", crypto::as_view(ro.mac));
  if (ro.signature) r.set_bytes("signature", *ro.signature);
  return r.serialize();
}

InstalledRo parse_installed_ro(std::string_view text) {
  KvRecord r = KvRecord::parse(text);
  r.require_only({"type", "ro_id", "content_id", "permissions.play", "permissions.play_count_limit",
                  "remaining_plays", "dcf_hash", "wrapped_kcek", "c1", "c2", "c2dev", "mac", "signature"});
  if (r.get("type") != "installed_ro") throw Error(Errc::parse_error, "not an installed RO record");
  InstalledRo ro;
  ro.ro_id = r.get("ro_id");
  ro.content_id = r.get("content_id");
  ro.permissions = objects::read_permissions(r);
  if (r.contains("remaining_plays")) ro.remaining_plays = static_cast<std::uint32_t>(r.get_uint("remaining_plays"));
  ro.dcf_hash = digest_from(r.get_bytes("dcf_hash", crypto::kDigestSize));
  ro.wrapped_kcek = r.get_bytes("wrapped_kcek", objects::kWrappedKcekSize);
  ro.c1 = r.get_bytes("c1", objects::kC1Size);
  ro.c2 = r.get_bytes("c2", objects::kC2Size);
  ro.c2dev = r.get_bytes("c2dev", objects::kC2Size);
  ro.mac = digest_from(r.get_bytes("mac", crypto::kDigestSize));
  if (r.contains("signature")) ro.signature = r.get_bytes("signature", crypto::kRsaModulusBytes);
  return ro;
}

AgentStore::AgentStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_ / kContextDir, ec);
  if (!ec) fs::create_directories(root_ / kInstalledDir, ec);
  if (ec) throw Error(Errc::io_error, "cannot create agent store at " + root_.string() + ": " + ec.message());
}

void AgentStore::save(const RiContext& ctx) const {
  write_atomically(root_ / kContextDir / safe_file_name(ctx.ri_id, ".ctx"), serialize_ri_context(ctx));
}

void AgentStore::save(const InstalledRo& ro) const {
  write_atomically(root_ / kInstalledDir / safe_file_name(ro.ro_id, ".iro"), serialize_installed_ro(ro));
}

std::vector<RiContext> AgentStore::load_ri_contexts() const {
  return load_dir<RiContext>(root_ / kContextDir, ".ctx", parse_ri_context);
}

std::vector<InstalledRo> AgentStore::load_installed() const {
  return load_dir<InstalledRo>(root_ / kInstalledDir, ".iro", parse_installed_ro);
}

}  // namespace drmcost::roap
