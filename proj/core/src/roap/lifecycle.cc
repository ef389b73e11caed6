#include "drmcost/roap/lifecycle.h"

namespace drmcost::roap {

RiContext run_registration(DrmAgent& agent, RightsIssuer& ri, Timestamp now, cost::OpTrace& trace) {
  MeteredCrypto crypto(trace, cost::Phase::Registration);
  RoapMessage hello = agent.device_hello();
  RoapMessage ri_hello = ri.handle_device_hello(RoapMessage::parse(hello.wire()));
  RoapMessage request = agent.registration_request(RoapMessage::parse(ri_hello.wire()), now, crypto);
  RoapMessage response = ri.handle_registration_request(RoapMessage::parse(request.wire()), now);
  return agent.complete_registration(RoapMessage::parse(response.wire()), now, crypto);
}

objects::RightsObject acquire_ro(DrmAgent& agent, RightsIssuer& ri, const std::string& ro_id, Timestamp now,
                                 cost::OpTrace& trace) {
  MeteredCrypto crypto(trace, cost::Phase::Acquisition);
  RoapMessage request = agent.ro_request(ri.id(), ro_id, now, crypto);
  RoapMessage response = ri.handle_ro_request(RoapMessage::parse(request.wire()), now);
  return agent.accept_ro_response(RoapMessage::parse(response.wire()), now, crypto);
}

InstalledRo install_ro(DrmAgent& agent, const objects::RightsObject& ro, const objects::Dcf& dcf,
                       cost::OpTrace& trace) {
  MeteredCrypto crypto(trace, cost::Phase::Installation);
  return agent.install(ro, dcf, crypto);
}

Bytes consume(DrmAgent& agent, const std::string& content_id, const objects::Dcf& dcf, cost::OpTrace& trace) {
  MeteredCrypto crypto(trace, cost::Phase::Consumption);
  return agent.consume(content_id, dcf, crypto);
}

}  // namespace drmcost::roap
