#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fop/constructions.hpp"

namespace fop {

/// One verification verdict. SKIPPED rows always carry a reason.
struct Verdict {
  enum class State { Pass, Fail, Skipped, Experimental };
  std::string name;
  State state = State::Skipped;
  std::string reason;

  static const char* state_name(State s) {
    switch (s) {
      case State::Pass: return "PASS";
      case State::Fail: return "FAIL";
      case State::Skipped: return "SKIPPED";
      case State::Experimental: return "EXPERIMENTAL";
    }
    return "?";
  }
};

/// Human- and machine-readable run summary. Timing is recorded but only
/// emitted on request so that default outputs stay byte-identical across
/// runs.
struct RunReport {
  std::string scenario;
  std::string mode;  // "fop", "amicable", "family", "verify"
  std::uint64_t seed = 0;
  std::vector<OrbitCensus> census;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, std::string>> facts;  // label -> value
  double elapsed_ms = 0.0;

  void add(const std::string& name, bool pass, const std::string& reason = "") {
    verdicts.push_back({name, pass ? Verdict::State::Pass : Verdict::State::Fail, reason});
  }
  void skip(const std::string& name, const std::string& reason) {
    verdicts.push_back({name, Verdict::State::Skipped, reason});
  }
  void experimental(const std::string& name, const std::string& reason) {
    verdicts.push_back({name, Verdict::State::Experimental, reason});
  }
  void fact(const std::string& label, const std::string& value) { facts.emplace_back(label, value); }

  bool all_pass(bool strict = false) const {
    for (const Verdict& v : verdicts) {
      if (v.state == Verdict::State::Fail) return false;
      if (strict && v.state == Verdict::State::Experimental) return false;
    }
    return true;
  }

  std::string to_text(bool include_timing = false) const {
    std::ostringstream os;
    os << "scenario: " << scenario << "\n";
    os << "mode: " << mode << "\n";
    os << "seed: " << seed << "\n";
    if (!census.empty()) {
      os << "orbit census:\n";
      for (const OrbitCensus& c : census)
        os << "  " << c.pair_name << ": " << c.total << " orbit(s), " << c.orientable << " orientable\n";
    }
    if (!facts.empty()) {
      os << "facts:\n";
      for (const auto& [k, v] : facts) os << "  " << k << ": " << v << "\n";
    }
    os << "verdicts:\n";
    for (const Verdict& v : verdicts) {
      os << "  [" << Verdict::state_name(v.state) << "] " << v.name;
      if (!v.reason.empty()) os << " (" << v.reason << ")";
      os << "\n";
    }
    if (include_timing) os << "elapsed_ms: " << elapsed_ms << "\n";
    return os.str();
  }

  nlohmann::json to_json(bool include_timing = false) const {
    nlohmann::json j;
    j["scenario"] = scenario;
    j["mode"] = mode;
    j["seed"] = seed;
    j["census"] = nlohmann::json::array();
    for (const OrbitCensus& c : census)
      j["census"].push_back({{"pair", c.pair_name}, {"orbits", c.total}, {"orientable", c.orientable}});
    j["facts"] = nlohmann::json::object();
    for (const auto& [k, v] : facts) j["facts"][k] = v;
    j["verdicts"] = nlohmann::json::array();
    for (const Verdict& v : verdicts)
      j["verdicts"].push_back({{"name", v.name}, {"state", Verdict::state_name(v.state)}, {"reason", v.reason}});
    if (include_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

}  // namespace fop
