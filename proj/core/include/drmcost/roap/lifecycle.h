#pragma once

#include <string>

#include "drmcost/cost/trace.h"
#include "drmcost/objects/dcf.h"
#include "drmcost/objects/rights_object.h"
#include "drmcost/roap/agent.h"
#include "drmcost/roap/rights_issuer.h"

/// The four lifecycle phases, each driving the message exchange between an
/// agent and an RI and recording the agent's crypto work under its phase.
namespace drmcost::roap {

/// DeviceHello -> RiHello -> RegistrationRequest -> RegistrationResponse.
/// Agent cost: 1 private op, 3 public ops, 4 message hashes.
RiContext run_registration(DrmAgent& agent, RightsIssuer& ri, Timestamp now, cost::OpTrace& trace);

/// RoRequest -> RoResponse. Agent cost: 1 private op, 1 public op, 2 message hashes.
objects::RightsObject acquire_ro(DrmAgent& agent, RightsIssuer& ri, const std::string& ro_id, Timestamp now,
                                 cost::OpTrace& trace);

InstalledRo install_ro(DrmAgent& agent, const objects::RightsObject& ro, const objects::Dcf& dcf,
                       cost::OpTrace& trace);

Bytes consume(DrmAgent& agent, const std::string& content_id, const objects::Dcf& dcf, cost::OpTrace& trace);

}  // namespace drmcost::roap
