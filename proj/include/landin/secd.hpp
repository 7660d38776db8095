#pragma once

// The original SECD machines with the J operator: quadruple states over a
// data stack, an environment, a list of control directives, and a dump.
// Two dispatch styles: entangled (one state kind) and disentangled (four
// mutually dispatching state kinds).

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "landin/outcome.hpp"
#include "landin/syntax.hpp"
#include "landin/util.hpp"

namespace landin::secd {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct ApplyTag {};
using Directive = std::variant<TermPtr, ApplyTag>;

using Stack = PList<ValuePtr>;
using Control = PList<Directive>;
using SEnv = Env<ValuePtr>;

struct DumpFrame;
using Dump = PList<DumpFrame>;

struct Value {
  struct Int {
    std::int64_t n;
  };
  struct Succ {};
  struct FunClo {
    SEnv env;
    std::string param;
    TermPtr body;
  };
  struct StateAppender {
    Dump dump;
  };
  struct PgmClo {
    ValuePtr fn;
    Dump dump;
  };
  std::variant<Int, Succ, FunClo, StateAppender, PgmClo> v;
};

struct DumpFrame {
  Stack s;
  SEnv e;
  Control c;
};

inline ValuePtr mk_int(std::int64_t n) { return std::make_shared<Value>(Value{Value::Int{n}}); }
inline ValuePtr mk_succ() { return std::make_shared<Value>(Value{Value::Succ{}}); }
inline ValuePtr mk_funclo(SEnv e, std::string x, TermPtr t) {
  return std::make_shared<Value>(Value{Value::FunClo{std::move(e), std::move(x), std::move(t)}});
}
inline ValuePtr mk_sa(Dump d) {
  return std::make_shared<Value>(Value{Value::StateAppender{std::move(d)}});
}
inline ValuePtr mk_pgmclo(ValuePtr f, Dump d) {
  return std::make_shared<Value>(Value{Value::PgmClo{std::move(f), std::move(d)}});
}

inline SEnv initial_env() { return SEnv::empty().extend("succ", mk_succ()); }

inline bool is_int(const ValuePtr& v, std::int64_t* out = nullptr) {
  if (auto* i = std::get_if<Value::Int>(&v->v)) {
    if (out) *out = i->n;
    return true;
  }
  return false;
}

inline std::string show_value(const ValuePtr& v) {
  if (auto* i = std::get_if<Value::Int>(&v->v)) return "int " + std::to_string(i->n);
  if (std::holds_alternative<Value::Succ>(v->v)) return "succ";
  if (auto* f = std::get_if<Value::FunClo>(&v->v)) return "funclo " + f->param;
  if (std::holds_alternative<Value::StateAppender>(v->v)) return "state-appender";
  return "pgmclo";
}

inline std::string show_directive(const Directive& d) {
  if (auto* t = std::get_if<TermPtr>(&d)) return print(*t);
  return "apply";
}

template <typename Config, typename V = ValuePtr>
struct Step {
  std::variant<Config, V, StuckReason> r;
  static Step next(Config c) { return {std::move(c)}; }
  static Step done(V v) { return {std::move(v)}; }
  static Step stuck(StuckReason s) { return {s}; }
};

struct TraceLine {
  std::string tag;
  std::string focus;
  std::size_t ctx_depth;
  std::size_t dump_depth;

  std::string str() const {
    return tag + " | " + focus + " | " + std::to_string(ctx_depth) + " | " +
           std::to_string(dump_depth);
  }
};

// ---------------------------------------------------------------------------
// Entangled machines (one state kind). The Burge flavor restores the captured
// dump frame eagerly when a program closure is applied; as a consequence a
// program closure whose dump is empty cannot be applied.
// ---------------------------------------------------------------------------

struct QuadConfig {
  Stack s;
  SEnv e;
  Control c;
  Dump d;
};

enum class PgmCloRule { DelayedConsumption, EagerRestore };  // Felleisen vs Burge

template <PgmCloRule Rule>
struct QuadMachine {
  using Config = QuadConfig;

  static Config inject(const TermPtr& t) {
    return {Stack{}, initial_env(), Control{}.cons(Directive{t}), Dump{}};
  }

  static Step<Config> step(const Config& cfg) {
    const auto& [s, e, c, d] = cfg;
    if (c.empty()) {
      if (s.empty()) throw std::logic_error("secd: empty stack at return");
      ValuePtr v = s.head();
      if (d.empty()) return Step<Config>::done(v);
      DumpFrame f = d.head();
      return Step<Config>::next({f.s.cons(v), f.e, f.c, d.tail()});
    }
    Directive dir = c.head();
    Control rest = c.tail();
    if (auto* tp = std::get_if<TermPtr>(&dir)) {
      const Term& t = **tp;
      if (auto* l = std::get_if<Term::Lit>(&t.node)) {
        return Step<Config>::next({s.cons(mk_int(l->value)), e, rest, d});
      }
      if (auto* x = std::get_if<Term::Var>(&t.node)) {
        auto v = e.lookup(x->name);
        if (!v) return Step<Config>::stuck(StuckReason::UnboundVariable);
        return Step<Config>::next({s.cons(*v), e, rest, d});
      }
      if (auto* m = std::get_if<Term::Lam>(&t.node)) {
        return Step<Config>::next({s.cons(mk_funclo(e, m->param, m->body)), e, rest, d});
      }
      if (auto* a = std::get_if<Term::App>(&t.node)) {
        Control c2 = rest.cons(Directive{ApplyTag{}}).cons(Directive{a->rator}).cons(Directive{a->rand});
        return Step<Config>::next({s, e, c2, d});
      }
      // J denotes the current dump
      return Step<Config>::next({s.cons(mk_sa(d)), e, rest, d});
    }
    // APPLY: operator on top of the stack, operand below
    if (s.size() < 2) throw std::logic_error("secd: apply with short stack");
    ValuePtr v0 = s.head();
    ValuePtr v1 = s.tail().head();
    Stack s2 = s.tail().tail();
    if (std::holds_alternative<Value::Succ>(v0->v)) {
      std::int64_t n;
      if (!is_int(v1, &n)) return Step<Config>::stuck(StuckReason::SuccNonInteger);
      return Step<Config>::next({s2.cons(mk_int(n + 1)), e, rest, d});
    }
    if (auto* f = std::get_if<Value::FunClo>(&v0->v)) {
      return Step<Config>::next({Stack{}, f->env.extend(f->param, v1),
                                 Control{}.cons(Directive{f->body}),
                                 d.cons(DumpFrame{s2, e, rest})});
    }
    if (auto* sa = std::get_if<Value::StateAppender>(&v0->v)) {
      return Step<Config>::next({s2.cons(mk_pgmclo(v1, sa->dump)), e, rest, d});
    }
    if (auto* pc = std::get_if<Value::PgmClo>(&v0->v)) {
      if constexpr (Rule == PgmCloRule::DelayedConsumption) {
        Stack s3 = Stack{}.cons(v1).cons(pc->fn);
        return Step<Config>::next({s3, initial_env(), Control{}.cons(Directive{ApplyTag{}}),
                                   pc->dump});
      } else {
        if (pc->dump.empty()) return Step<Config>::stuck(StuckReason::JOutsideLambda);
        DumpFrame f = pc->dump.head();
        return Step<Config>::next({f.s.cons(v1).cons(pc->fn), f.e,
                                   f.c.cons(Directive{ApplyTag{}}), pc->dump.tail()});
      }
    }
    return Step<Config>::stuck(StuckReason::ApplyNonFunction);
  }

  static TraceLine describe(const Config& cfg) {
    std::string focus = cfg.c.empty() ? (cfg.s.empty() ? "-" : show_value(cfg.s.head()))
                                      : show_directive(cfg.c.head());
    return {"run", focus, cfg.c.size(), cfg.d.size()};
  }
};

using FelleisenMachine = QuadMachine<PgmCloRule::DelayedConsumption>;
using BurgeMachine = QuadMachine<PgmCloRule::EagerRestore>;

// ---------------------------------------------------------------------------
// Disentangled machines: run_c / run_d / run_t / run_a as four state kinds.
// The faithful flavor keeps every transitory dispatch, so it operates in
// 2-for-1 lockstep with the entangled machine; the short-circuited flavor
// compresses the four hops singled out at the end of the derivation.
// ---------------------------------------------------------------------------

struct ReturnedValue {
  bool thrown;  // Yield carries one value; Throw carries (fn, arg)
  ValuePtr v;
  ValuePtr arg;
};

struct DisConfig {
  struct RunC {
    Stack s;
    SEnv e;
    Control c;
    Dump d;
  };
  struct RunT {
    TermPtr t;
    Stack s;
    SEnv e;
    Control c;
    Dump d;
  };
  struct RunA {
    ValuePtr v0;
    ValuePtr v1;
    Stack s;
    SEnv e;
    Control c;
    Dump d;
  };
  struct RunD {
    ReturnedValue rv;
    Dump d;
  };
  std::variant<RunC, RunT, RunA, RunD> st;
};

enum class DisFlavor { Faithful, ShortCircuited };

template <DisFlavor Flavor, bool BurgeStyle>
struct DisMachine {
  using Config = DisConfig;
  using RunC = DisConfig::RunC;
  using RunT = DisConfig::RunT;
  using RunA = DisConfig::RunA;
  using RunD = DisConfig::RunD;

  static Config inject(const TermPtr& t) {
    if constexpr (Flavor == DisFlavor::ShortCircuited) {
      return {RunT{t, Stack{}, initial_env(), Control{}, Dump{}}};
    } else {
      return {RunC{Stack{}, initial_env(), Control{}.cons(Directive{t}), Dump{}}};
    }
  }

  static Step<Config> step(const Config& cfg) {
    if (auto* rc = std::get_if<RunC>(&cfg.st)) return step_c(*rc);
    if (auto* rt = std::get_if<RunT>(&cfg.st)) return step_t(*rt);
    if (auto* ra = std::get_if<RunA>(&cfg.st)) return step_a(*ra);
    return step_d(std::get<RunD>(cfg.st));
  }

  static Step<Config> step_c(const RunC& st) {
    const auto& [s, e, c, d] = st;
    if (c.empty()) {
      if (s.empty()) throw std::logic_error("secd: empty stack at return");
      return Step<Config>::next({RunD{ReturnedValue{false, s.head(), nullptr}, d}});
    }
    Directive dir = c.head();
    Control rest = c.tail();
    if (auto* tp = std::get_if<TermPtr>(&dir)) {
      return Step<Config>::next({RunT{*tp, s, e, rest, d}});
    }
    if (s.size() < 2) throw std::logic_error("secd: apply with short stack");
    return Step<Config>::next({RunA{s.head(), s.tail().head(), s.tail().tail(), e, rest, d}});
  }

  static Step<Config> step_d(const RunD& st) {
    if (st.rv.thrown) {
      if (st.d.empty()) return Step<Config>::stuck(StuckReason::JOutsideLambda);
      DumpFrame f = st.d.head();
      return Step<Config>::next({RunA{st.rv.v, st.rv.arg, f.s, f.e, f.c, st.d.tail()}});
    }
    if (st.d.empty()) return Step<Config>::done(st.rv.v);
    DumpFrame f = st.d.head();
    return Step<Config>::next({RunC{f.s.cons(st.rv.v), f.e, f.c, st.d.tail()}});
  }

  static Step<Config> step_t(const RunT& st) {
    const auto& [t, s, e, c, d] = st;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) {
      return Step<Config>::next({RunC{s.cons(mk_int(l->value)), e, c, d}});
    }
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return Step<Config>::stuck(StuckReason::UnboundVariable);
      return Step<Config>::next({RunC{s.cons(*v), e, c, d}});
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      return Step<Config>::next({RunC{s.cons(mk_funclo(e, m->param, m->body)), e, c, d}});
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      Control c2 = c.cons(Directive{ApplyTag{}}).cons(Directive{a->rator});
      if constexpr (Flavor == DisFlavor::ShortCircuited) {
        return Step<Config>::next({RunT{a->rand, s, e, c2, d}});
      } else {
        return Step<Config>::next({RunC{s, e, c2.cons(Directive{a->rand}), d}});
      }
    }
    return Step<Config>::next({RunC{s.cons(mk_sa(d)), e, c, d}});
  }

  static Step<Config> step_a(const RunA& st) {
    const auto& [v0, v1, s, e, c, d] = st;
    if (std::holds_alternative<Value::Succ>(v0->v)) {
      std::int64_t n;
      if (!is_int(v1, &n)) return Step<Config>::stuck(StuckReason::SuccNonInteger);
      return Step<Config>::next({RunC{s.cons(mk_int(n + 1)), e, c, d}});
    }
    if (auto* f = std::get_if<Value::FunClo>(&v0->v)) {
      Dump d2 = d.cons(DumpFrame{s, e, c});
      if constexpr (Flavor == DisFlavor::ShortCircuited) {
        return Step<Config>::next({RunT{f->body, Stack{}, f->env.extend(f->param, v1), Control{}, d2}});
      } else {
        return Step<Config>::next(
            {RunC{Stack{}, f->env.extend(f->param, v1), Control{}.cons(Directive{f->body}), d2}});
      }
    }
    if (auto* sa = std::get_if<Value::StateAppender>(&v0->v)) {
      return Step<Config>::next({RunC{s.cons(mk_pgmclo(v1, sa->dump)), e, c, d}});
    }
    if (auto* pc = std::get_if<Value::PgmClo>(&v0->v)) {
      if constexpr (BurgeStyle) {
        return Step<Config>::next({RunD{ReturnedValue{true, pc->fn, v1}, pc->dump}});
      } else if constexpr (Flavor == DisFlavor::ShortCircuited) {
        return Step<Config>::next({RunA{pc->fn, v1, Stack{}, initial_env(), Control{}, pc->dump}});
      } else {
        return Step<Config>::next({RunC{Stack{}.cons(v1).cons(pc->fn), initial_env(),
                                        Control{}.cons(Directive{ApplyTag{}}), pc->dump}});
      }
    }
    return Step<Config>::stuck(StuckReason::ApplyNonFunction);
  }

  static TraceLine describe(const Config& cfg) {
    if (auto* rc = std::get_if<RunC>(&cfg.st)) {
      std::string focus =
          rc->c.empty() ? (rc->s.empty() ? "-" : show_value(rc->s.head())) : show_directive(rc->c.head());
      return {"run_c", focus, rc->c.size(), rc->d.size()};
    }
    if (auto* rt = std::get_if<RunT>(&cfg.st)) {
      return {"run_t", print(rt->t), rt->c.size(), rt->d.size()};
    }
    if (auto* ra = std::get_if<RunA>(&cfg.st)) {
      return {"run_a", show_value(ra->v0), ra->c.size(), ra->d.size()};
    }
    const auto& rd = std::get<RunD>(cfg.st);
    std::string focus = rd.rv.thrown ? "throw " + show_value(rd.rv.v) : show_value(rd.rv.v);
    return {"run_d", focus, 0, rd.d.size()};
  }
};

using DisentangledFaithful = DisMachine<DisFlavor::Faithful, false>;
using DisentangledShort = DisMachine<DisFlavor::ShortCircuited, false>;
using BurgeDisentangled = DisMachine<DisFlavor::Faithful, true>;

}  // namespace landin::secd
