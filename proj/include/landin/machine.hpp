#pragma once

// Uniform inject/step/run/trace driver over the machine structs, plus the
// machine-name registry used by the CLI and the comparison harness.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "landin/modern.hpp"
#include "landin/outcome.hpp"
#include "landin/secd.hpp"
#include "landin/syntax.hpp"

namespace landin {

struct MachineRun {
  RunResult result;
  std::uint64_t steps = 0;  // clause firings, the halting clause included
};

template <typename M, typename ObserveFn>
MachineRun machine_run(const TermPtr& p, std::uint64_t fuel, ObserveFn observe,
                       std::vector<secd::TraceLine>* trace = nullptr) {
  auto cfg = M::inject(p);
  for (std::uint64_t i = 1; i <= fuel; ++i) {
    if (trace) trace->push_back(M::describe(cfg));
    auto st = M::step(cfg);
    if (auto* next = std::get_if<0>(&st.r)) {
      cfg = std::move(*next);
      continue;
    }
    if (auto* done = std::get_if<1>(&st.r)) {
      RunResult r = observe(*done);
      r.steps = i;
      return {r, i};
    }
    auto reason = std::get<2>(st.r);
    return {RunResult{RunResult::Kind::Stuck, 0, reason, i}, i};
  }
  return {RunResult{RunResult::Kind::OutOfFuel, 0, {}, fuel}, fuel};
}

enum class MachineName {
  SecdFelleisen,
  SecdBurge,
  SecdDisentangledFaithful,
  SecdDisentangledShort,
  SecdBurgeDisentangled,
  SecdModern,
  SecdCallersaveDump,
  MarkedContext,
  MarkedContextUndelimited,
  CekJ,
  CekJStrict,
};

inline const char* machine_id(MachineName m) {
  switch (m) {
    case MachineName::SecdFelleisen: return "secd-felleisen";
    case MachineName::SecdBurge: return "secd-burge";
    case MachineName::SecdDisentangledFaithful: return "secd-disentangled-faithful";
    case MachineName::SecdDisentangledShort: return "secd-disentangled-short";
    case MachineName::SecdBurgeDisentangled: return "secd-burge-disentangled";
    case MachineName::SecdModern: return "secd-modern";
    case MachineName::SecdCallersaveDump: return "secd-callersave-dump";
    case MachineName::MarkedContext: return "marked-context";
    case MachineName::MarkedContextUndelimited: return "marked-context-undelimited";
    case MachineName::CekJ: return "cek-j";
    case MachineName::CekJStrict: return "cek-j-strict";
  }
  return "?";
}

namespace detail {

inline RunResult observe_secd(const secd::ValuePtr& v) {
  std::int64_t n;
  if (secd::is_int(v, &n)) return {RunResult::Kind::Num, n, {}, 0};
  return {RunResult::Kind::Procedure, 0, {}, 0};
}
inline RunResult observe_modern(const modern::ValuePtr& v) {
  std::int64_t n;
  if (modern::is_int(v, &n)) return {RunResult::Kind::Num, n, {}, 0};
  return {RunResult::Kind::Procedure, 0, {}, 0};
}
inline RunResult observe_callersave(const callersave::ValuePtr& v) {
  std::int64_t n;
  if (callersave::is_int(v, &n)) return {RunResult::Kind::Num, n, {}, 0};
  return {RunResult::Kind::Procedure, 0, {}, 0};
}
inline RunResult observe_marked(const marked::ValuePtr& v) {
  std::int64_t n;
  if (marked::is_int(v, &n)) return {RunResult::Kind::Num, n, {}, 0};
  return {RunResult::Kind::Procedure, 0, {}, 0};
}
inline RunResult observe_cekj(const cekj::ValuePtr& v) {
  std::int64_t n;
  if (cekj::is_int(v, &n)) return {RunResult::Kind::Num, n, {}, 0};
  return {RunResult::Kind::Procedure, 0, {}, 0};
}

}  // namespace detail

inline MachineRun machine_run(MachineName m, const TermPtr& p, std::uint64_t fuel,
                              std::vector<secd::TraceLine>* trace = nullptr) {
  switch (m) {
    case MachineName::SecdFelleisen:
      return machine_run<secd::FelleisenMachine>(p, fuel, detail::observe_secd, trace);
    case MachineName::SecdBurge:
      return machine_run<secd::BurgeMachine>(p, fuel, detail::observe_secd, trace);
    case MachineName::SecdDisentangledFaithful:
      return machine_run<secd::DisentangledFaithful>(p, fuel, detail::observe_secd, trace);
    case MachineName::SecdDisentangledShort:
      return machine_run<secd::DisentangledShort>(p, fuel, detail::observe_secd, trace);
    case MachineName::SecdBurgeDisentangled:
      return machine_run<secd::BurgeDisentangled>(p, fuel, detail::observe_secd, trace);
    case MachineName::SecdModern:
      return machine_run<modern::Machine>(p, fuel, detail::observe_modern, trace);
    case MachineName::SecdCallersaveDump:
      return machine_run<callersave::Machine>(p, fuel, detail::observe_callersave, trace);
    case MachineName::MarkedContext:
      return machine_run<marked::Machine>(p, fuel, detail::observe_marked, trace);
    case MachineName::MarkedContextUndelimited:
      return machine_run<marked::MachineUndelimited>(p, fuel, detail::observe_marked, trace);
    case MachineName::CekJ:
      return machine_run<cekj::Machine>(p, fuel, detail::observe_cekj, trace);
    case MachineName::CekJStrict:
      return machine_run<cekj::MachineStrict>(p, fuel, detail::observe_cekj, trace);
  }
  throw std::logic_error("unknown machine");
}

inline std::optional<MachineName> machine_by_id(const std::string& id) {
  static const std::vector<MachineName> all{
      MachineName::SecdFelleisen,        MachineName::SecdBurge,
      MachineName::SecdDisentangledFaithful, MachineName::SecdDisentangledShort,
      MachineName::SecdBurgeDisentangled, MachineName::SecdModern,
      MachineName::SecdCallersaveDump,   MachineName::MarkedContext,
      MachineName::MarkedContextUndelimited, MachineName::CekJ,
      MachineName::CekJStrict,
  };
  for (auto m : all) {
    if (id == machine_id(m)) return m;
  }
  return std::nullopt;
}

}  // namespace landin
