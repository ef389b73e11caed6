#include "drmcost/roap/message.h"

#include <array>

#include "drmcost/common/error.h"

namespace drmcost::roap {
namespace {

constexpr std::array kTypes = {MessageType::DeviceHello,          MessageType::RiHello,
                               MessageType::RegistrationRequest,  MessageType::RegistrationResponse,
                               MessageType::RoRequest,            MessageType::RoResponse};

constexpr std::size_t kPadLineOverhead = 5;  // "pad=" and '\n'

}  // namespace

std::string_view to_string(MessageType type) {
  switch (type) {
    case MessageType::DeviceHello: return "DeviceHello";
    case MessageType::RiHello: return "RiHello";
    case MessageType::RegistrationRequest: return "RegistrationRequest";
    case MessageType::RegistrationResponse: return "RegistrationResponse";
    case MessageType::RoRequest: return "RoRequest";
    case MessageType::RoResponse: return "RoResponse";
  }
  return "?";
}

RoapMessage::RoapMessage(MessageType type, std::string sender_id) : type_(type), sender_id_(std::move(sender_id)) {
  record_.set("type", std::string(to_string(type_)));
  record_.set("sender", sender_id_);
}

RoapMessage RoapMessage::parse(std::string_view wire) {
  KvRecord record = KvRecord::parse(wire);
  const std::string& type_name = record.get("type");
  for (auto t : kTypes) {
    if (to_string(t) == type_name) {
      RoapMessage msg(t, record.get("sender"));
      msg.record_ = std::move(record);
      return msg;
    }
  }
  throw Error(Errc::parse_error, "unknown ROAP message type '" + type_name + "'");
}

void RoapMessage::pad_to(std::size_t target) {
  record_.erase("pad");
  std::size_t natural = body().size();
  if (natural + kPadLineOverhead <= target) {
    record_.set("pad", std::string(target - natural - kPadLineOverhead, '0'));
  }
}

std::optional<Bytes> RoapMessage::signature() const {
  if (!record_.contains("signature")) return std::nullopt;
  return record_.get_bytes("signature");
}

void RoapMessage::expect(MessageType expected) const {
  if (type_ != expected) {
    throw Error(Errc::parse_error,
                "expected " + std::string(to_string(expected)) + ", got " + std::string(to_string(type_)));
  }
}

}  // namespace drmcost::roap
