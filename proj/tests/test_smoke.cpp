#include <catch2/catch_amalgamated.hpp>

#include "landin/machine.hpp"
#include "landin/syntax.hpp"
#include "landin/tower.hpp"

using namespace landin;

static TermPtr parse_ok(const std::string& s) {
  auto r = parse_term(s);
  REQUIRE(r.ok());
  return r.value();
}

TEST_CASE("parser basics") {
  auto t = parse_ok("(succ 4)");
  REQUIRE(print(t) == "(succ 4)");
  auto u = parse_ok("(let x 100 (f x))");
  REQUIRE(print(u) == "((lam x (f x)) 100)");
}

TEST_CASE("felleisen machine on succ 4") {
  auto t = parse_ok("(succ 4)");
  auto r = machine_run(MachineName::SecdFelleisen, t, 1000);
  REQUIRE(r.result.kind == RunResult::Kind::Num);
  REQUIRE(r.result.n == 5);
}

TEST_CASE("3.6.4 pair on machines") {
  auto p3 = parse_ok("((lam x2 (succ (((J (lam k k)) 0) 100))) 10)");
  auto p4 = parse_ok("((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)");
  for (auto m : {MachineName::SecdFelleisen, MachineName::SecdModern,
                 MachineName::SecdCallersaveDump, MachineName::MarkedContext, MachineName::CekJ,
                 MachineName::SecdDisentangledFaithful, MachineName::SecdDisentangledShort}) {
    auto r3 = machine_run(m, p3, 100000);
    INFO(machine_id(m));
    REQUIRE(r3.result.kind == RunResult::Kind::Num);
    REQUIRE(r3.result.n == 0);
    auto r4 = machine_run(m, p4, 100000);
    REQUIRE(r4.result.kind == RunResult::Kind::Num);
    REQUIRE(r4.result.n == 1);
  }
}

TEST_CASE("burge vs felleisen on top-level J") {
  auto p5 = parse_ok("((J (lam k k)) 0)");
  auto rf = machine_run(MachineName::SecdFelleisen, p5, 100000);
  REQUIRE(rf.result.kind == RunResult::Kind::Num);
  REQUIRE(rf.result.n == 0);
  auto rb = machine_run(MachineName::SecdBurge, p5, 100000);
  REQUIRE(rb.result.kind == RunResult::Kind::Stuck);
  REQUIRE(rb.result.reason == StuckReason::JOutsideLambda);
}

TEST_CASE("tower on 3.6.4 pair") {
  auto p3 = parse_ok("((lam x2 (succ (((J (lam k k)) 0) 100))) 10)");
  auto p4 = parse_ok("((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)");
  using tower::EvalName;
  for (auto e : {EvalName::Cps2Stack, EvalName::Cps2, EvalName::DsDump, EvalName::DsFull,
                 EvalName::Compositional, EvalName::Cps2Alt, EvalName::DsAlt,
                 EvalName::CompositionalAlt, EvalName::Cps2Burge}) {
    INFO(tower::eval_id(e));
    auto r3 = tower::eval_run(e, p3, 1000000);
    REQUIRE(r3.kind == RunResult::Kind::Num);
    REQUIRE(r3.n == 0);
    auto r4 = tower::eval_run(e, p4, 1000000);
    REQUIRE(r4.kind == RunResult::Kind::Num);
    REQUIRE(r4.n == 1);
  }
}

TEST_CASE("omega runs out of fuel") {
  auto omega = parse_ok("((lam x (x x)) (lam x (x x)))");
  auto r = machine_run(MachineName::SecdModern, omega, 1000);
  REQUIRE(r.result.kind == RunResult::Kind::OutOfFuel);
  REQUIRE(r.result.steps == 1000);
  auto r2 = tower::eval_run(tower::EvalName::DsFull, omega, 2000);
  REQUIRE(r2.kind == RunResult::Kind::OutOfFuel);
}
