#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace landin {

enum class StuckReason {
  UnboundVariable,
  ApplyNonFunction,
  SuccNonInteger,
  JOutsideLambda,
  NoDelimiter,
  CaseNonSum,
};

inline const char* stuck_reason_name(StuckReason r) {
  switch (r) {
    case StuckReason::UnboundVariable: return "unbound-variable";
    case StuckReason::ApplyNonFunction: return "apply-non-function";
    case StuckReason::SuccNonInteger: return "succ-non-integer";
    case StuckReason::JOutsideLambda: return "j-outside-lambda";
    case StuckReason::NoDelimiter: return "no-delimiter";
    case StuckReason::CaseNonSum: return "case-non-sum";
  }
  return "?";
}

// The uniform observable of every engine. Final carries the engine's own
// value type; comparisons across engines go through Observation.
template <typename V>
struct Outcome {
  struct Final {
    V value;
  };
  struct Stuck {
    StuckReason reason;
  };
  struct OutOfFuel {
    std::uint64_t steps_taken;
  };

  std::variant<Final, Stuck, OutOfFuel> state;

  static Outcome final(V v) { return {Final{std::move(v)}}; }
  static Outcome stuck(StuckReason r) { return {Stuck{r}}; }
  static Outcome out_of_fuel(std::uint64_t steps) { return {OutOfFuel{steps}}; }

  bool is_final() const { return std::holds_alternative<Final>(state); }
  bool is_stuck() const { return std::holds_alternative<Stuck>(state); }
  bool is_out_of_fuel() const { return std::holds_alternative<OutOfFuel>(state); }

  const V& value() const { return std::get<Final>(state).value; }
  StuckReason reason() const { return std::get<Stuck>(state).reason; }
  std::uint64_t steps_taken() const { return std::get<OutOfFuel>(state).steps_taken; }
};

// Observation: the quotient under which engines are compared. Integer
// results must match exactly; any other final value is just "a procedure".
struct Observation {
  enum class Kind { Num, Procedure, Stuck, Unknown } kind;
  std::int64_t n = 0;
  StuckReason reason = StuckReason::ApplyNonFunction;  // informational only
  std::uint64_t fuel = 0;

  static Observation num(std::int64_t v) { return {Kind::Num, v, {}, 0}; }
  static Observation procedure() { return {Kind::Procedure, 0, {}, 0}; }
  static Observation stuck(StuckReason r) { return {Kind::Stuck, 0, r, 0}; }
  static Observation unknown(std::uint64_t fuel) { return {Kind::Unknown, 0, {}, fuel}; }

  // Stuck reasons are not part of the quotient; Unknown never equals anything
  // for agreement purposes (handled by callers), but compares equal to itself
  // so reports stay stable.
  friend bool operator==(const Observation& a, const Observation& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Num) return a.n == b.n;
    return true;
  }
  friend bool operator!=(const Observation& a, const Observation& b) { return !(a == b); }

  std::string str() const {
    switch (kind) {
      case Kind::Num: return std::to_string(n);
      case Kind::Procedure: return "#procedure";
      case Kind::Stuck: return std::string("stuck:") + stuck_reason_name(reason);
      case Kind::Unknown: return "unknown";
    }
    return "?";
  }
};

// Type-erased outcome, the registry-level result of running any engine.
struct RunResult {
  enum class Kind { Num, Procedure, Stuck, OutOfFuel } kind;
  std::int64_t n = 0;
  StuckReason reason = StuckReason::ApplyNonFunction;
  std::uint64_t steps = 0;  // transitions taken (machines) or fuel burned

  Observation observe() const {
    switch (kind) {
      case Kind::Num: return Observation::num(n);
      case Kind::Procedure: return Observation::procedure();
      case Kind::Stuck: return Observation::stuck(reason);
      case Kind::OutOfFuel: return Observation::unknown(steps);
    }
    return Observation::unknown(0);
  }

  std::string str() const {
    switch (kind) {
      case Kind::Num: return "value: " + std::to_string(n);
      case Kind::Procedure: return "value: #procedure";
      case Kind::Stuck: return std::string("stuck: ") + stuck_reason_name(reason);
      case Kind::OutOfFuel: return "fuel-exhausted";
    }
    return "?";
  }
};

}  // namespace landin
