#pragma once

// The higher-order evaluators: continuation-passing and direct-style
// engines whose observable behavior matches the machines. The direct-style
// ones are written against the layered-computation abstraction, so their
// text mirrors CPS-free code while executing via explicit continuations.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "landin/delimited.hpp"
#include "landin/outcome.hpp"
#include "landin/syntax.hpp"
#include "landin/util.hpp"

namespace landin::tower {

enum class EvalName {
  Cps2Stack,        // two layered continuations, data stack, callee-save env
  Cps2,             // stackless, caller-save env, two layered continuations
  DsDump,           // dump made implicit (one control layer explicit)
  DsFull,           // both continuations implicit
  Compositional,    // dispatch on term constructors only
  Cps2Alt,          // caller-save dump continuation, both continuations unary
  DsAlt,            // CPS with a return continuation, applicable values
  CompositionalAlt, // direct style with a return continuation
  Cps2Burge,        // tagged values sent to dump continuations
};

inline const char* eval_id(EvalName e) {
  switch (e) {
    case EvalName::Cps2Stack: return "cps2-stack";
    case EvalName::Cps2: return "cps2";
    case EvalName::DsDump: return "ds-dump";
    case EvalName::DsFull: return "ds-full";
    case EvalName::Compositional: return "compositional";
    case EvalName::Cps2Alt: return "cps2-alt";
    case EvalName::DsAlt: return "ds-alt";
    case EvalName::CompositionalAlt: return "compositional-alt";
    case EvalName::Cps2Burge: return "cps2-burge";
  }
  return "?";
}

struct EvalStats {
  std::uint64_t control_apps = 0;  // applications of control continuations
  std::uint64_t dump_apps = 0;     // applications of dump continuations
};

using FuelPtr = std::shared_ptr<dc::Fuel>;

namespace det {

template <typename P>
RunResult res_to_run(const typename dc::Ctl<P>::Res& r, std::uint64_t budget, const FuelPtr& fuel,
                     const std::function<std::optional<std::int64_t>(const P&)>& as_int) {
  using Res = typename dc::Ctl<P>::Res;
  std::uint64_t used = budget - fuel->left;
  switch (r.kind) {
    case Res::Kind::Value: {
      auto n = as_int(r.value);
      if (n) return {RunResult::Kind::Num, *n, {}, used};
      return {RunResult::Kind::Procedure, 0, {}, used};
    }
    case Res::Kind::Stuck:
      return {RunResult::Kind::Stuck, 0, r.reason, used};
    case Res::Kind::Fuel:
      return {RunResult::Kind::OutOfFuel, 0, {}, budget};
  }
  return {RunResult::Kind::OutOfFuel, 0, {}, budget};
}

// -------------------------------------------------------------------------
// cps2-stack: run_t/run_a with S, E and two layered continuations
// -------------------------------------------------------------------------

struct Cps2Stack {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using StepT = C5::StepT;
  using S = PList<P>;
  using E = Env<P>;
  using D = std::function<StepT(P)>;
  using C = std::function<StepT(S, E, D)>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Succ {};
    struct FunClo {
      E env;
      std::string param;
      TermPtr body;
    };
    struct SA {
      D d;
    };
    struct PgmClo {
      P fn;
      D d;
    };
    std::variant<Int, Succ, FunClo, SA, PgmClo> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }

  FuelPtr fuel;

  StepT run_t(TermPtr t, S s, E e, C c, D d) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) {
      return C5::bounce([=, n = l->value] { return c(s.cons(mk_int(n)), e, d); });
    }
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::halt(C5::Res::stuck(StuckReason::UnboundVariable));
      return C5::bounce([=, v = *v] { return c(s.cons(v), e, d); });
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      P clo = std::make_shared<Val>(Val{typename Val::FunClo{e, m->param, m->body}});
      return C5::bounce([=] { return c(s.cons(clo), e, d); });
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      C after_operand = [this, t0, c](S s, E e, D d) {
        C after_operator = [this, c](S s, E e, D d) {
          P v0 = s.head();
          P v1 = s.tail().head();
          return run_a(v0, v1, s.tail().tail(), e, c, d);
        };
        return run_t(t0, s, e, after_operator, d);
      };
      return run_t(t1, s, e, after_operand, d);
    }
    P sa = std::make_shared<Val>(Val{typename Val::SA{d}});
    return C5::bounce([=] { return c(s.cons(sa), e, d); });
  }

  StepT run_a(P v0, P v1, S s, E e, C c, D d) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (std::holds_alternative<typename Val::Succ>(v0->v)) {
      if (auto* i = std::get_if<typename Val::Int>(&v1->v)) {
        return C5::bounce([=, n = i->n] { return c(s.cons(mk_int(n + 1)), e, d); });
      }
      return C5::halt(C5::Res::stuck(StuckReason::SuccNonInteger));
    }
    if (auto* f = std::get_if<typename Val::FunClo>(&v0->v)) {
      C body_c = [](S s2, E e2, D d2) {
        P v = s2.head();
        return C5::bounce([=] { return d2(v); });
      };
      D body_d = [=](P v) { return C5::bounce([=] { return c(s.cons(v), e, d); }); };
      return run_t(f->body, S{}, f->env.extend(f->param, v1), body_c, body_d);
    }
    if (auto* sa = std::get_if<typename Val::SA>(&v0->v)) {
      P pc = std::make_shared<Val>(Val{typename Val::PgmClo{v1, sa->d}});
      return C5::bounce([=] { return c(s.cons(pc), e, d); });
    }
    if (auto* pc = std::get_if<typename Val::PgmClo>(&v0->v)) {
      C body_c = [](S s2, E e2, D d2) {
        P v = s2.head();
        return C5::bounce([=] { return d2(v); });
      };
      E init = E::empty().extend("succ", std::make_shared<Val>(Val{typename Val::Succ{}}));
      return run_a(pc->fn, v1, S{}, init, body_c, pc->d);
    }
    return C5::halt(C5::Res::stuck(StuckReason::ApplyNonFunction));
  }

  RunResult run(const TermPtr& t, std::uint64_t budget) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    E init = E::empty().extend("succ", std::make_shared<Val>(Val{typename Val::Succ{}}));
    C top_c = [](S s, E e, D d) {
      P v = s.head();
      return C5::bounce([=] { return d(v); });
    };
    D top_d = [](P v) { return C5::halt(C5::Res::of(v)); };
    StepT st = run_t(t, S{}, init, top_c, top_d);
    for (;;) {
      if (auto* r = std::get_if<typename C5::Res>(&st.u)) {
        return res_to_run<P>(*r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
          if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
          return std::nullopt;
        });
      }
      auto th = std::move(std::get<typename C5::Thunk>(st.u));
      st = th();
    }
  }
};

// -------------------------------------------------------------------------
// cps2: stackless, caller-save environments, two layered continuations
// -------------------------------------------------------------------------

struct Cps2 {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using StepT = C5::StepT;
  using E = Env<P>;
  using D = std::function<StepT(P)>;
  using C = std::function<StepT(P, D)>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Succ {};
    struct FunClo {
      E env;
      std::string param;
      TermPtr body;
    };
    struct SA {
      D d;
    };
    struct PgmClo {
      P fn;
      D d;
    };
    std::variant<Int, Succ, FunClo, SA, PgmClo> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }

  FuelPtr fuel;
  std::shared_ptr<EvalStats> stats = std::make_shared<EvalStats>();

  StepT call_c(const C& c, P v, const D& d) {
    ++stats->control_apps;
    return C5::bounce([=] { return c(v, d); });
  }
  StepT call_d(const D& d, P v) {
    ++stats->dump_apps;
    return C5::bounce([=] { return d(v); });
  }

  StepT eval(TermPtr t, E e, C c, D d) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) return call_c(c, mk_int(l->value), d);
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::halt(C5::Res::stuck(StuckReason::UnboundVariable));
      return call_c(c, *v, d);
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      return call_c(c, std::make_shared<Val>(Val{typename Val::FunClo{e, m->param, m->body}}), d);
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      C k1 = [this, t0, e, c](P v1, D d) {
        C k0 = [this, v1, c](P v0, D d) { return apply(v0, v1, c, d); };
        return eval(t0, e, k0, d);
      };
      return eval(t1, e, k1, d);
    }
    return call_c(c, std::make_shared<Val>(Val{typename Val::SA{d}}), d);
  }

  StepT apply(P v0, P v1, C c, D d) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (std::holds_alternative<typename Val::Succ>(v0->v)) {
      if (auto* i = std::get_if<typename Val::Int>(&v1->v)) return call_c(c, mk_int(i->n + 1), d);
      return C5::halt(C5::Res::stuck(StuckReason::SuccNonInteger));
    }
    if (auto* f = std::get_if<typename Val::FunClo>(&v0->v)) {
      C body_c = [this](P v, D d2) { return call_d(d2, v); };
      D body_d = [this, c, d](P v) { return call_c(c, v, d); };
      return eval(f->body, f->env.extend(f->param, v1), body_c, body_d);
    }
    if (auto* sa = std::get_if<typename Val::SA>(&v0->v)) {
      return call_c(c, std::make_shared<Val>(Val{typename Val::PgmClo{v1, sa->d}}), d);
    }
    if (auto* pc = std::get_if<typename Val::PgmClo>(&v0->v)) {
      C body_c = [this](P v, D d2) { return call_d(d2, v); };
      return apply(pc->fn, v1, body_c, pc->d);
    }
    return C5::halt(C5::Res::stuck(StuckReason::ApplyNonFunction));
  }

  RunResult run(const TermPtr& t, std::uint64_t budget, EvalStats* out_stats = nullptr) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    E init = E::empty().extend("succ", std::make_shared<Val>(Val{typename Val::Succ{}}));
    C top_c = [this](P v, D d) { return call_d(d, v); };
    D top_d = [this](P v) {
      ++stats->dump_apps;
      return C5::halt(C5::Res::of(v));
    };
    StepT st = eval(t, init, top_c, top_d);
    for (;;) {
      if (auto* r = std::get_if<typename C5::Res>(&st.u)) {
        if (out_stats) *out_stats = *stats;
        return res_to_run<P>(*r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
          if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
          return std::nullopt;
        });
      }
      auto th = std::move(std::get<typename C5::Thunk>(st.u));
      st = th();
    }
  }
};

// -------------------------------------------------------------------------
// ds-dump: the dump continuation is implicit, captured with a level-1 shift
// -------------------------------------------------------------------------

struct DsDump {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using Comp = C5::Comp;
  using E = Env<P>;
  using C = std::function<Comp(P)>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Succ {};
    struct FunClo {
      E env;
      std::string param;
      TermPtr body;
    };
    struct SA {
      C5::Cap1 d;
    };
    struct PgmClo {
      P fn;
      C5::Cap1 d;
    };
    std::variant<Int, Succ, FunClo, SA, PgmClo> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }

  FuelPtr fuel;

  Comp eval(TermPtr t, E e, C c) {
    if (fuel->left == 0) return C5::fuel_exhausted();
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) return c(mk_int(l->value));
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::fail(StuckReason::UnboundVariable);
      return c(*v);
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      return c(std::make_shared<Val>(Val{typename Val::FunClo{e, m->param, m->body}}));
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      return eval(t1, e, [this, t0, e, c](P v1) {
        return eval(t0, e, [this, v1, c](P v0) { return apply(v0, v1, c); });
      });
    }
    // J captures the current dump
    return C5::shift1([this, c](C5::Cap1 d) {
      P sa = std::make_shared<Val>(Val{typename Val::SA{d}});
      return C5::bind(c(sa), [d](P w) { return C5::apply_cap1(d, w); });
    });
  }

  Comp apply(P v0, P v1, C c) {
    if (fuel->left == 0) return C5::fuel_exhausted();
    --fuel->left;
    if (std::holds_alternative<typename Val::Succ>(v0->v)) {
      if (auto* i = std::get_if<typename Val::Int>(&v1->v)) return c(mk_int(i->n + 1));
      return C5::fail(StuckReason::SuccNonInteger);
    }
    if (auto* f = std::get_if<typename Val::FunClo>(&v0->v)) {
      return C5::bind(eval(f->body, f->env.extend(f->param, v1), [](P v) { return C5::ret(v); }),
                      [c](P w) { return c(w); });
    }
    if (auto* sa = std::get_if<typename Val::SA>(&v0->v)) {
      return c(std::make_shared<Val>(Val{typename Val::PgmClo{v1, sa->d}}));
    }
    if (auto* pc = std::get_if<typename Val::PgmClo>(&v0->v)) {
      P fn = pc->fn;
      C5::Cap1 d = pc->d;
      return C5::shift1([this, fn, v1, d](C5::Cap1) {
        return C5::bind(apply(fn, v1, [](P v) { return C5::ret(v); }),
                        [d](P w) { return C5::apply_cap1(d, w); });
      });
    }
    return C5::fail(StuckReason::ApplyNonFunction);
  }

  RunResult run(const TermPtr& t, std::uint64_t budget) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    E init = E::empty().extend("succ", std::make_shared<Val>(Val{typename Val::Succ{}}));
    auto r = C5::run(C5::reset1(eval(t, init, [](P v) { return C5::ret(v); })));
    return res_to_run<P>(r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
      if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
      return std::nullopt;
    });
  }
};

// -------------------------------------------------------------------------
// ds-full: both continuations implicit (shift/reset at two levels)
// -------------------------------------------------------------------------

struct DsFull {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using Comp = C5::Comp;
  using E = Env<P>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Succ {};
    struct FunClo {
      E env;
      std::string param;
      TermPtr body;
    };
    struct SA {
      C5::Cap2 d;
    };
    struct PgmClo {
      P fn;
      C5::Cap2 d;
    };
    std::variant<Int, Succ, FunClo, SA, PgmClo> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }

  FuelPtr fuel;

  Comp eval(TermPtr t, E e) {
    if (fuel->left == 0) return C5::fuel_exhausted();
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) return C5::ret(mk_int(l->value));
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::fail(StuckReason::UnboundVariable);
      return C5::ret(*v);
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      return C5::ret(std::make_shared<Val>(Val{typename Val::FunClo{e, m->param, m->body}}));
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      return C5::bind(eval(t1, e), [this, t0, e](P v1) {
        return C5::bind(eval(t0, e), [this, v1](P v0) { return apply(v0, v1); });
      });
    }
    return C5::shift1([this](C5::Cap1 c) {
      return C5::shift2([this, c](C5::Cap2 d) {
        P sa = std::make_shared<Val>(Val{typename Val::SA{d}});
        return C5::bind(C5::apply_cap1(c, sa), [d](P w) { return C5::apply_cap2(d, w); });
      });
    });
  }

  Comp apply(P v0, P v1) {
    if (fuel->left == 0) return C5::fuel_exhausted();
    --fuel->left;
    if (std::holds_alternative<typename Val::Succ>(v0->v)) {
      if (auto* i = std::get_if<typename Val::Int>(&v1->v)) return C5::ret(mk_int(i->n + 1));
      return C5::fail(StuckReason::SuccNonInteger);
    }
    if (auto* f = std::get_if<typename Val::FunClo>(&v0->v)) {
      return C5::reset1(eval(f->body, f->env.extend(f->param, v1)));
    }
    if (auto* sa = std::get_if<typename Val::SA>(&v0->v)) {
      return C5::ret(std::make_shared<Val>(Val{typename Val::PgmClo{v1, sa->d}}));
    }
    if (auto* pc = std::get_if<typename Val::PgmClo>(&v0->v)) {
      P fn = pc->fn;
      C5::Cap2 d = pc->d;
      return C5::shift1([this, fn, v1, d](C5::Cap1) {
        return C5::shift2([this, fn, v1, d](C5::Cap2) {
          return C5::bind(C5::reset1(apply(fn, v1)), [d](P w) { return C5::apply_cap2(d, w); });
        });
      });
    }
    return C5::fail(StuckReason::ApplyNonFunction);
  }

  RunResult run(const TermPtr& t, std::uint64_t budget) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    E init = E::empty().extend("succ", std::make_shared<Val>(Val{typename Val::Succ{}}));
    auto r = C5::run(C5::reset2(C5::reset1(eval(t, init))));
    return res_to_run<P>(r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
      if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
      return std::nullopt;
    });
  }
};

// -------------------------------------------------------------------------
// compositional: values are integers or functions; dispatch is on the five
// term constructors only
// -------------------------------------------------------------------------

struct Compositional {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using Comp = C5::Comp;
  using E = Env<P>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Fun {
      std::function<Comp(P)> f;
    };
    std::variant<Int, Fun> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }
  static P mk_fun(std::function<Comp(P)> f) {
    return std::make_shared<Val>(Val{typename Val::Fun{std::move(f)}});
  }

  FuelPtr fuel;

  static Comp apply_fun(P v0, P v1) {
    if (auto* f = std::get_if<typename Val::Fun>(&v0->v)) return f->f(v1);
    return C5::fail(StuckReason::ApplyNonFunction);
  }

  Comp eval(TermPtr t, E e) {
    if (fuel->left == 0) return C5::fuel_exhausted();
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) return C5::ret(mk_int(l->value));
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::fail(StuckReason::UnboundVariable);
      return C5::ret(*v);
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      E env = e;
      std::string x = m->param;
      TermPtr body = m->body;
      return C5::ret(mk_fun([this, env, x, body](P v) {
        return C5::reset1(eval(body, env.extend(x, v)));
      }));
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      return C5::bind(eval(t1, e), [this, t0, e](P v1) {
        return C5::bind(eval(t0, e), [v1](P v0) { return apply_fun(v0, v1); });
      });
    }
    return C5::shift1([this](C5::Cap1 c) {
      return C5::shift2([this, c](C5::Cap2 d) {
        P sa = mk_fun([this, d](P v) {
          return C5::ret(mk_fun([this, d, v](P v2) {
            return C5::shift1([this, d, v, v2](C5::Cap1) {
              return C5::shift2([this, d, v, v2](C5::Cap2) {
                return C5::bind(C5::reset1(apply_fun(v, v2)),
                                [d](P w) { return C5::apply_cap2(d, w); });
              });
            });
          }));
        });
        return C5::bind(C5::apply_cap1(c, sa), [d](P w) { return C5::apply_cap2(d, w); });
      });
    });
  }

  RunResult run(const TermPtr& t, std::uint64_t budget) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    P succ = mk_fun([](P v) -> Comp {
      if (auto* i = std::get_if<typename Val::Int>(&v->v)) return C5::ret(mk_int(i->n + 1));
      return C5::fail(StuckReason::SuccNonInteger);
    });
    E init = E::empty().extend("succ", succ);
    auto r = C5::run(C5::reset2(C5::reset1(eval(t, init))));
    return res_to_run<P>(r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
      if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
      return std::nullopt;
    });
  }
};

// -------------------------------------------------------------------------
// cps2-alt: both continuations have the same unary type; the dump is a
// snapshot of the control continuation of the caller
// -------------------------------------------------------------------------

struct Cps2Alt {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using StepT = C5::StepT;
  using E = Env<P>;
  using K = std::function<StepT(P)>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Succ {};
    struct FunClo {
      E env;
      std::string param;
      TermPtr body;
    };
    struct SA {
      K d;
    };
    struct PgmClo {
      P fn;
      K d;
    };
    std::variant<Int, Succ, FunClo, SA, PgmClo> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }

  FuelPtr fuel;

  StepT eval(TermPtr t, E e, K c, K d) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) {
      return C5::bounce([=, n = l->value] { return c(mk_int(n)); });
    }
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::halt(C5::Res::stuck(StuckReason::UnboundVariable));
      return C5::bounce([c, v = *v] { return c(v); });
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      P clo = std::make_shared<Val>(Val{typename Val::FunClo{e, m->param, m->body}});
      return C5::bounce([=] { return c(clo); });
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      K k1 = [this, t0, e, c, d](P v1) {
        K k0 = [this, v1, c](P v0) { return apply(v0, v1, c); };
        return eval(t0, e, k0, d);
      };
      return eval(t1, e, k1, d);
    }
    P sa = std::make_shared<Val>(Val{typename Val::SA{d}});
    return C5::bounce([=] { return c(sa); });
  }

  StepT apply(P v0, P v1, K c) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (std::holds_alternative<typename Val::Succ>(v0->v)) {
      if (auto* i = std::get_if<typename Val::Int>(&v1->v)) {
        return C5::bounce([=, n = i->n] { return c(mk_int(n + 1)); });
      }
      return C5::halt(C5::Res::stuck(StuckReason::SuccNonInteger));
    }
    if (auto* f = std::get_if<typename Val::FunClo>(&v0->v)) {
      return eval(f->body, f->env.extend(f->param, v1), c, c);
    }
    if (auto* sa = std::get_if<typename Val::SA>(&v0->v)) {
      P pc = std::make_shared<Val>(Val{typename Val::PgmClo{v1, sa->d}});
      return C5::bounce([=] { return c(pc); });
    }
    if (auto* pc = std::get_if<typename Val::PgmClo>(&v0->v)) {
      return apply(pc->fn, v1, pc->d);
    }
    return C5::halt(C5::Res::stuck(StuckReason::ApplyNonFunction));
  }

  RunResult run(const TermPtr& t, std::uint64_t budget) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    E init = E::empty().extend("succ", std::make_shared<Val>(Val{typename Val::Succ{}}));
    K final = [](P v) { return C5::halt(C5::Res::of(v)); };
    StepT st = eval(t, init, final, final);
    for (;;) {
      if (auto* r = std::get_if<typename C5::Res>(&st.u)) {
        return res_to_run<P>(*r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
          if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
          return std::nullopt;
        });
      }
      auto th = std::move(std::get<typename C5::Thunk>(st.u));
      st = th();
    }
  }
};

// -------------------------------------------------------------------------
// ds-alt: CPS with a return continuation; applicable values refunctionalized
// -------------------------------------------------------------------------

struct DsAlt {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using StepT = C5::StepT;
  using E = Env<P>;
  using K = std::function<StepT(P)>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Fun {
      std::function<StepT(P, K)> f;
    };
    std::variant<Int, Fun> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }
  static P mk_fun(std::function<StepT(P, K)> f) {
    return std::make_shared<Val>(Val{typename Val::Fun{std::move(f)}});
  }

  FuelPtr fuel;

  static StepT apply_fun(P v0, P v1, K c) {
    if (auto* f = std::get_if<typename Val::Fun>(&v0->v)) {
      return C5::bounce([=, g = f->f] { return g(v1, c); });
    }
    return C5::halt(C5::Res::stuck(StuckReason::ApplyNonFunction));
  }

  StepT eval(TermPtr t, E e, K c, K d) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) {
      return C5::bounce([=, n = l->value] { return c(mk_int(n)); });
    }
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::halt(C5::Res::stuck(StuckReason::UnboundVariable));
      return C5::bounce([c, v = *v] { return c(v); });
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      E env = e;
      std::string x = m->param;
      TermPtr body = m->body;
      P fun = mk_fun([this, env, x, body](P v, K c2) {
        return eval(body, env.extend(x, v), c2, c2);  // return continuation := caller's
      });
      return C5::bounce([=] { return c(fun); });
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      K k1 = [this, t0, e, c, d](P v1) {
        K k0 = [v1, c](P v0) { return apply_fun(v0, v1, c); };
        return eval(t0, e, k0, d);
      };
      return eval(t1, e, k1, d);
    }
    // J: a function that turns its argument into a program closure over d
    K d_snapshot = d;
    P sa = mk_fun([d_snapshot](P v0, K c2) {
      P pc = mk_fun([d_snapshot, v0](P v1, K) { return apply_fun(v0, v1, d_snapshot); });
      return C5::bounce([=] { return c2(pc); });
    });
    return C5::bounce([=] { return c(sa); });
  }

  RunResult run(const TermPtr& t, std::uint64_t budget) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    P succ = mk_fun([](P v, K c) -> StepT {
      if (auto* i = std::get_if<typename Val::Int>(&v->v)) {
        return C5::bounce([=, n = i->n] { return c(mk_int(n + 1)); });
      }
      return C5::halt(C5::Res::stuck(StuckReason::SuccNonInteger));
    });
    E init = E::empty().extend("succ", succ);
    K final = [](P v) { return C5::halt(C5::Res::of(v)); };
    StepT st = eval(t, init, final, final);
    for (;;) {
      if (auto* r = std::get_if<typename C5::Res>(&st.u)) {
        return res_to_run<P>(*r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
          if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
          return std::nullopt;
        });
      }
      auto th = std::move(std::get<typename C5::Thunk>(st.u));
      st = th();
    }
  }
};

// -------------------------------------------------------------------------
// compositional-alt: direct style with a return continuation; the control
// continuation is implicit (level-1 shift/reset)
// -------------------------------------------------------------------------

struct CompositionalAlt {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using Comp = C5::Comp;
  using E = Env<P>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Fun {
      std::function<Comp(P)> f;
    };
    struct CapV {
      C5::Cap1 cap;
    };
    std::variant<Int, Fun, CapV> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }
  static P mk_fun(std::function<Comp(P)> f) {
    return std::make_shared<Val>(Val{typename Val::Fun{std::move(f)}});
  }
  static P mk_cap(C5::Cap1 c) { return std::make_shared<Val>(Val{typename Val::CapV{std::move(c)}}); }

  bool with_resets = true;  // the two resets around shift bodies are
                            // operationally unnecessary; a knob omits them
  FuelPtr fuel;

  static Comp apply_val(P v0, P v1) {
    if (auto* f = std::get_if<typename Val::Fun>(&v0->v)) return f->f(v1);
    if (auto* k = std::get_if<typename Val::CapV>(&v0->v)) return C5::apply_cap1(k->cap, v1);
    return C5::fail(StuckReason::ApplyNonFunction);
  }

  Comp maybe_reset(Comp m) { return with_resets ? C5::reset1(std::move(m)) : std::move(m); }

  Comp eval(TermPtr t, E e, P d) {
    if (fuel->left == 0) return C5::fuel_exhausted();
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) return C5::ret(mk_int(l->value));
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::fail(StuckReason::UnboundVariable);
      return C5::ret(*v);
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      E env = e;
      std::string x = m->param;
      TermPtr body = m->body;
      return C5::ret(mk_fun([this, env, x, body](P v) {
        return C5::shift1([this, env, x, body, v](C5::Cap1 c) {
          return maybe_reset(
              C5::bind(eval(body, env.extend(x, v), mk_cap(c)),
                       [c](P w) { return C5::apply_cap1(c, w); }));
        });
      }));
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      return C5::bind(eval(t1, e, d), [this, t0, e, d](P v1) {
        return C5::bind(eval(t0, e, d), [v1](P v0) { return apply_val(v0, v1); });
      });
    }
    P dd = d;
    return C5::ret(mk_fun([this, dd](P v0) {
      return C5::ret(mk_fun([this, dd, v0](P v1) {
        return C5::shift1([this, dd, v0, v1](C5::Cap1) {
          return maybe_reset(
              C5::bind(apply_val(v0, v1), [dd](P w) { return apply_val(dd, w); }));
        });
      }));
    }));
  }

  RunResult run(const TermPtr& t, std::uint64_t budget) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    P succ = mk_fun([](P v) -> Comp {
      if (auto* i = std::get_if<typename Val::Int>(&v->v)) return C5::ret(mk_int(i->n + 1));
      return C5::fail(StuckReason::SuccNonInteger);
    });
    E init = E::empty().extend("succ", succ);
    P ident = mk_fun([](P v) { return C5::ret(v); });
    auto r = C5::run(C5::reset1(eval(t, init, ident)));
    return res_to_run<P>(r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
      if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
      return std::nullopt;
    });
  }
};

// -------------------------------------------------------------------------
// cps2-burge: values sent to dump continuations are tagged YIELD or THROW
// -------------------------------------------------------------------------

struct Cps2Burge {
  struct Val;
  using P = std::shared_ptr<const Val>;
  using C5 = dc::Ctl<P>;
  using StepT = C5::StepT;
  using S = PList<P>;
  using E = Env<P>;

  struct RV {
    bool thrown;
    P v;
    P arg;
  };
  using D = std::function<StepT(RV)>;
  using C = std::function<StepT(S, E, D)>;

  struct Val {
    struct Int {
      std::int64_t n;
    };
    struct Succ {};
    struct FunClo {
      E env;
      std::string param;
      TermPtr body;
    };
    struct SA {
      D d;
    };
    struct PgmClo {
      P fn;
      D d;
    };
    std::variant<Int, Succ, FunClo, SA, PgmClo> v;
  };

  static P mk_int(std::int64_t n) { return std::make_shared<Val>(Val{typename Val::Int{n}}); }

  FuelPtr fuel;

  StepT run_t(TermPtr t, S s, E e, C c, D d) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (auto* l = std::get_if<Term::Lit>(&t->node)) {
      return C5::bounce([=, n = l->value] { return c(s.cons(mk_int(n)), e, d); });
    }
    if (auto* x = std::get_if<Term::Var>(&t->node)) {
      auto v = e.lookup(x->name);
      if (!v) return C5::halt(C5::Res::stuck(StuckReason::UnboundVariable));
      return C5::bounce([=, v = *v] { return c(s.cons(v), e, d); });
    }
    if (auto* m = std::get_if<Term::Lam>(&t->node)) {
      P clo = std::make_shared<Val>(Val{typename Val::FunClo{e, m->param, m->body}});
      return C5::bounce([=] { return c(s.cons(clo), e, d); });
    }
    if (auto* a = std::get_if<Term::App>(&t->node)) {
      TermPtr t0 = a->rator, t1 = a->rand;
      C after_operand = [this, t0, c](S s, E e, D d) {
        C after_operator = [this, c](S s, E e, D d) {
          P v0 = s.head();
          P v1 = s.tail().head();
          return run_a(v0, v1, s.tail().tail(), e, c, d);
        };
        return run_t(t0, s, e, after_operator, d);
      };
      return run_t(t1, s, e, after_operand, d);
    }
    P sa = std::make_shared<Val>(Val{typename Val::SA{d}});
    return C5::bounce([=] { return c(s.cons(sa), e, d); });
  }

  StepT run_a(P v0, P v1, S s, E e, C c, D d) {
    if (fuel->left == 0) return C5::halt(C5::Res::fuel());
    --fuel->left;
    if (std::holds_alternative<typename Val::Succ>(v0->v)) {
      if (auto* i = std::get_if<typename Val::Int>(&v1->v)) {
        return C5::bounce([=, n = i->n] { return c(s.cons(mk_int(n + 1)), e, d); });
      }
      return C5::halt(C5::Res::stuck(StuckReason::SuccNonInteger));
    }
    if (auto* f = std::get_if<typename Val::FunClo>(&v0->v)) {
      C body_c = [](S s2, E e2, D d2) {
        P v = s2.head();
        return C5::bounce([=] { return d2(RV{false, v, nullptr}); });
      };
      D body_d = [this, s, e, c, d](RV rv) -> StepT {
        if (rv.thrown) return run_a(rv.v, rv.arg, s, e, c, d);
        return C5::bounce([=] { return c(s.cons(rv.v), e, d); });
      };
      return run_t(f->body, S{}, f->env.extend(f->param, v1), body_c, body_d);
    }
    if (auto* sa = std::get_if<typename Val::SA>(&v0->v)) {
      P pc = std::make_shared<Val>(Val{typename Val::PgmClo{v1, sa->d}});
      return C5::bounce([=] { return c(s.cons(pc), e, d); });
    }
    if (auto* pc = std::get_if<typename Val::PgmClo>(&v0->v)) {
      D dd = pc->d;
      RV rv{true, pc->fn, v1};
      return C5::bounce([dd, rv] { return dd(rv); });
    }
    return C5::halt(C5::Res::stuck(StuckReason::ApplyNonFunction));
  }

  RunResult run(const TermPtr& t, std::uint64_t budget) {
    fuel = std::make_shared<dc::Fuel>(dc::Fuel{budget});
    E init = E::empty().extend("succ", std::make_shared<Val>(Val{typename Val::Succ{}}));
    C top_c = [](S s, E e, D d) {
      P v = s.head();
      return C5::bounce([=] { return d(RV{false, v, nullptr}); });
    };
    D top_d = [](RV rv) -> StepT {
      if (rv.thrown) return C5::halt(C5::Res::stuck(StuckReason::JOutsideLambda));
      return C5::halt(C5::Res::of(rv.v));
    };
    StepT st = run_t(t, S{}, init, top_c, top_d);
    for (;;) {
      if (auto* r = std::get_if<typename C5::Res>(&st.u)) {
        return res_to_run<P>(*r, budget, fuel, [](const P& v) -> std::optional<std::int64_t> {
          if (auto* i = std::get_if<typename Val::Int>(&v->v)) return i->n;
          return std::nullopt;
        });
      }
      auto th = std::move(std::get<typename C5::Thunk>(st.u));
      st = th();
    }
  }
};

}  // namespace det

inline RunResult eval_run(EvalName name, const TermPtr& p, std::uint64_t fuel,
                          EvalStats* stats = nullptr) {
  switch (name) {
    case EvalName::Cps2Stack: return det::Cps2Stack{}.run(p, fuel);
    case EvalName::Cps2: return det::Cps2{}.run(p, fuel, stats);
    case EvalName::DsDump: return det::DsDump{}.run(p, fuel);
    case EvalName::DsFull: return det::DsFull{}.run(p, fuel);
    case EvalName::Compositional: return det::Compositional{}.run(p, fuel);
    case EvalName::Cps2Alt: return det::Cps2Alt{}.run(p, fuel);
    case EvalName::DsAlt: return det::DsAlt{}.run(p, fuel);
    case EvalName::CompositionalAlt: return det::CompositionalAlt{}.run(p, fuel);
    case EvalName::Cps2Burge: return det::Cps2Burge{}.run(p, fuel);
  }
  throw std::logic_error("unknown evaluator");
}

// The reset-free flavor of compositional-alt (the two resets around shift
// bodies are operationally unnecessary); exposed for the equivalence test.
inline RunResult eval_run_compositional_alt_noreset(const TermPtr& p, std::uint64_t fuel) {
  det::CompositionalAlt e;
  e.with_resets = false;
  return e.run(p, fuel);
}

}  // namespace landin::tower
