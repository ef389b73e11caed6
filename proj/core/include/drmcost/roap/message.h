#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "drmcost/common/bytes.h"
#include "drmcost/common/kv_record.h"

namespace drmcost::roap {

enum class MessageType { DeviceHello, RiHello, RegistrationRequest, RegistrationResponse, RoRequest, RoResponse };

std::string_view to_string(MessageType type);

inline constexpr std::string_view kRoapVersion = "2.0";
/// Capability list both sides advertise; negotiation always lands here.
inline constexpr std::string_view kMandatedAlgorithms =
    "SHA-1,HMAC-SHA-1,AES-128-WRAP,AES-128-CBC,RSA-PSS,KDF2,RSA-1024";

/// Nominal on-the-wire sizes of the ROAP messages. Messages are padded up
/// to these sizes so the hashes the agent computes cover realistic inputs.
struct MessageSizes {
  std::size_t device_hello = 512;
  std::size_t ri_hello = 512;
  std::size_t registration_request = 1024;
  std::size_t registration_response = 4096;
  std::size_t ro_request = 1024;
  /// The RO response is this envelope plus the serialized Rights Object.
  std::size_t ro_response_envelope = 1024;
};

/// One ROAP message: a typed canonical record, optionally signed.
///
/// body() is the canonical text of every field except "signature"; it is
/// what gets hashed and signed. wire() adds the signature line.
class RoapMessage {
 public:
  RoapMessage(MessageType type, std::string sender_id);

  /// Throws Error(parse_error) for malformed text or an unknown type.
  static RoapMessage parse(std::string_view wire);

  MessageType type() const { return type_; }
  const std::string& sender_id() const { return sender_id_; }

  KvRecord& fields() { return record_; }
  const KvRecord& fields() const { return record_; }

  /// Adds a filler field so body() is exactly `target` bytes when the
  /// natural body is at least 5 bytes smaller; otherwise leaves it unpadded.
  void pad_to(std::size_t target);

  void set_signature(ByteView signature) { record_.set_bytes("signature", signature); }
  std::optional<Bytes> signature() const;

  std::string body() const { return record_.serialize_without({"signature"}); }
  std::string wire() const { return record_.serialize(); }

  /// Throws Error(parse_error) unless the message has type `expected`.
  void expect(MessageType expected) const;

 private:
  MessageType type_;
  std::string sender_id_;
  KvRecord record_;
};

}  // namespace drmcost::roap
