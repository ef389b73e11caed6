#include "drmcost/cost/trace.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "drmcost/common/error.h"

namespace drmcost::cost {

std::string_view to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::AesEnc: return "AesEnc";
    case AlgorithmId::AesDec: return "AesDec";
    case AlgorithmId::Sha1: return "Sha1";
    case AlgorithmId::HmacSha1: return "HmacSha1";
    case AlgorithmId::RsaPub: return "RsaPub";
    case AlgorithmId::RsaPriv: return "RsaPriv";
  }
  return "?";
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Registration: return "Registration";
    case Phase::Acquisition: return "Acquisition";
    case Phase::Installation: return "Installation";
    case Phase::Consumption: return "Consumption";
  }
  return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  for (auto id : kAllAlgorithms) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::optional<Phase> parse_phase(std::string_view name) {
  for (auto p : kAllPhases) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

void OpTrace::record(OpEvent event) {
  if (event.input_bits == 0) {
    throw Error(Errc::invalid_argument, std::string(to_string(event.algorithm)) + " event with zero input bits");
  }
  if (is_rsa(event.algorithm) && event.input_bits != kRsaOperandBits) {
    throw Error(Errc::invalid_argument, "RSA events must carry 1024 input bits");
  }
  events_.push_back(event);
}

void OpTrace::append(const OpTrace& other) {
  events_.insert(events_.end(), other.events_.begin(), other.events_.end());
}

std::size_t OpTrace::count(Phase phase, AlgorithmId algorithm) const {
  return static_cast<std::size_t>(std::count_if(events_.begin(), events_.end(), [&](const OpEvent& e) {
    return e.phase == phase && e.algorithm == algorithm;
  }));
}

std::uint64_t OpTrace::bits(Phase phase, AlgorithmId algorithm) const {
  std::uint64_t total = 0;
  for (const auto& e : events_) {
    if (e.phase == phase && e.algorithm == algorithm) total += e.input_bits;
  }
  return total;
}

std::vector<OpEvent> OpTrace::multiset(Phase phase) const {
  std::vector<OpEvent> out;
  std::copy_if(events_.begin(), events_.end(), std::back_inserter(out),
               [&](const OpEvent& e) { return e.phase == phase; });
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_trace(const OpTrace& trace) {
  std::string out = "# phase algorithm input_bits\n";
  for (const auto& e : trace) {
    out.append(to_string(e.phase)).push_back(' ');
    out.append(to_string(e.algorithm)).push_back(' ');
    out.append(std::to_string(e.input_bits)).push_back('\n');
  }
  return out;
}

OpTrace parse_trace(std::string_view text) {
  OpTrace trace;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string phase_name, algorithm_name, bits_text, extra;
    fields >> phase_name >> algorithm_name >> bits_text;
    auto where = "trace line " + std::to_string(line_no) + ": ";
    if (bits_text.empty() || (fields >> extra)) {
      throw Error(Errc::parse_error, where + "expected 'phase algorithm input_bits'");
    }
    auto phase = parse_phase(phase_name);
    if (!phase) throw Error(Errc::parse_error, where + "unknown phase '" + phase_name + "'");
    auto algorithm = parse_algorithm(algorithm_name);
    if (!algorithm) throw Error(Errc::parse_error, where + "unknown algorithm '" + algorithm_name + "'");
    std::uint64_t bits = 0;
    auto [ptr, ec] = std::from_chars(bits_text.data(), bits_text.data() + bits_text.size(), bits);
    if (ec != std::errc{} || ptr != bits_text.data() + bits_text.size()) {
      throw Error(Errc::parse_error, where + "input_bits is not an unsigned integer");
    }
    try {
      trace.record(*phase, *algorithm, bits);
    } catch (const Error& e) {
      throw Error(Errc::parse_error, where + e.detail());
    }
  }
  return trace;
}

}  // namespace drmcost::cost
