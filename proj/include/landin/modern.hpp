#pragma once

// Context-based machines: the stackless caller-save SECD machine with
// two-layer contexts, its caller-save-dump-register variant, the machine
// with a single marked context, and the CEK machine extended with J bound
// in the environment.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "landin/outcome.hpp"
#include "landin/secd.hpp"  // Step<>, TraceLine
#include "landin/syntax.hpp"
#include "landin/util.hpp"

namespace landin {

// ---------------------------------------------------------------------------
// secd-modern: eval / apply / cont / dump over control contexts C1 and dump
// contexts C2
// ---------------------------------------------------------------------------

namespace modern {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;
using MEnv = Env<ValuePtr>;

struct Frame1;
using Ctx1 = PList<Frame1>;   // control context, innermost frame first
using Ctx2 = PList<Ctx1>;     // dump context, a stack of control contexts

struct Frame1 {
  struct Opd {  // hole at operand position; pending operator term
    TermPtr t;
    MEnv e;
  };
  struct Opr {  // hole at operator position; operand already a value
    ValuePtr v;
  };
  std::variant<Opd, Opr> f;
};

struct Value {
  struct Int {
    std::int64_t n;
  };
  struct Succ {};
  struct FunClo {
    MEnv env;
    std::string param;
    TermPtr body;
  };
  struct CtxVal {  // state appender: a captured dump context
    Ctx2 ctx;
  };
  struct PgmClo {  // program closure: function value plus captured dump context
    ValuePtr fn;
    Ctx2 ctx;
  };
  std::variant<Int, Succ, FunClo, CtxVal, PgmClo> v;
};

inline ValuePtr mk_int(std::int64_t n) { return std::make_shared<Value>(Value{Value::Int{n}}); }
inline ValuePtr mk_succ() { return std::make_shared<Value>(Value{Value::Succ{}}); }
inline ValuePtr mk_funclo(MEnv e, std::string x, TermPtr t) {
  return std::make_shared<Value>(Value{Value::FunClo{std::move(e), std::move(x), std::move(t)}});
}
inline ValuePtr mk_ctx(Ctx2 c) { return std::make_shared<Value>(Value{Value::CtxVal{std::move(c)}}); }
inline ValuePtr mk_pgmclo(ValuePtr f, Ctx2 c) {
  return std::make_shared<Value>(Value{Value::PgmClo{std::move(f), std::move(c)}});
}

inline MEnv initial_env() { return MEnv::empty().extend("succ", mk_succ()); }

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
  if (std::holds_alternative<Value::CtxVal>(v->v)) return "state-appender";
  return "pgmclo";
}

struct Config {
  struct Eval {
    TermPtr t;
    MEnv e;
    Ctx1 c1;
    Ctx2 c2;
  };
  struct Apply {
    ValuePtr v0;
    ValuePtr v1;
    Ctx1 c1;
    Ctx2 c2;
  };
  struct Cont {
    Ctx1 c1;
    ValuePtr v;
    Ctx2 c2;
  };
  struct Dump {
    Ctx2 c2;
    ValuePtr v;
  };
  std::variant<Eval, Apply, Cont, Dump> st;
};

struct Machine {
  using C = Config;

  static Config inject(const TermPtr& t) {
    return {Config::Eval{t, initial_env(), Ctx1{}, Ctx2{}}};
  }

  static secd::Step<Config, ValuePtr> step(const Config& cfg) {
    using S = secd::Step<Config, ValuePtr>;
    if (auto* ev = std::get_if<Config::Eval>(&cfg.st)) {
      const auto& [t, e, c1, c2] = *ev;
      if (auto* l = std::get_if<Term::Lit>(&t->node)) {
        return S::next({Config::Cont{c1, mk_int(l->value), c2}});
      }
      if (auto* x = std::get_if<Term::Var>(&t->node)) {
        auto v = e.lookup(x->name);
        if (!v) return S::stuck(StuckReason::UnboundVariable);
        return S::next({Config::Cont{c1, *v, c2}});
      }
      if (auto* m = std::get_if<Term::Lam>(&t->node)) {
        return S::next({Config::Cont{c1, mk_funclo(e, m->param, m->body), c2}});
      }
      if (auto* a = std::get_if<Term::App>(&t->node)) {
        return S::next({Config::Eval{a->rand, e, c1.cons(Frame1{Frame1::Opd{a->rator, e}}), c2}});
      }
      return S::next({Config::Cont{c1, mk_ctx(c2), c2}});
    }
    if (auto* ap = std::get_if<Config::Apply>(&cfg.st)) {
      const auto& [v0, v1, c1, c2] = *ap;
      if (std::holds_alternative<Value::Succ>(v0->v)) {
        std::int64_t n;
        if (!is_int(v1, &n)) return S::stuck(StuckReason::SuccNonInteger);
        return S::next({Config::Cont{c1, mk_int(n + 1), c2}});
      }
      if (auto* f = std::get_if<Value::FunClo>(&v0->v)) {
        return S::next({Config::Eval{f->body, f->env.extend(f->param, v1), Ctx1{}, c2.cons(c1)}});
      }
      if (auto* sa = std::get_if<Value::CtxVal>(&v0->v)) {
        return S::next({Config::Cont{c1, mk_pgmclo(v1, sa->ctx), c2}});
      }
      if (auto* pc = std::get_if<Value::PgmClo>(&v0->v)) {
        return S::next({Config::Apply{pc->fn, v1, Ctx1{}, pc->ctx}});
      }
      return S::stuck(StuckReason::ApplyNonFunction);
    }
    if (auto* co = std::get_if<Config::Cont>(&cfg.st)) {
      const auto& [c1, v, c2] = *co;
      if (c1.empty()) return S::next({Config::Dump{c2, v}});
      Frame1 fr = c1.head();
      Ctx1 rest = c1.tail();
      if (auto* opd = std::get_if<Frame1::Opd>(&fr.f)) {
        return S::next({Config::Eval{opd->t, opd->e, rest.cons(Frame1{Frame1::Opr{v}}), c2}});
      }
      const auto& opr = std::get<Frame1::Opr>(fr.f);
      return S::next({Config::Apply{v, opr.v, rest, c2}});
    }
    const auto& du = std::get<Config::Dump>(cfg.st);
    if (du.c2.empty()) return secd::Step<Config, ValuePtr>::done(du.v);
    return secd::Step<Config, ValuePtr>::next({Config::Cont{du.c2.head(), du.v, du.c2.tail()}});
  }

  static secd::TraceLine describe(const Config& cfg) {
    if (auto* ev = std::get_if<Config::Eval>(&cfg.st)) {
      return {"eval", print(ev->t), ev->c1.size(), ev->c2.size()};
    }
    if (auto* ap = std::get_if<Config::Apply>(&cfg.st)) {
      return {"apply", show_value(ap->v0), ap->c1.size(), ap->c2.size()};
    }
    if (auto* co = std::get_if<Config::Cont>(&cfg.st)) {
      return {"cont", show_value(co->v), co->c1.size(), co->c2.size()};
    }
    const auto& du = std::get<Config::Dump>(cfg.st);
    return {"dump", show_value(du.v), 0, du.c2.size()};
  }
};

}  // namespace modern

// ---------------------------------------------------------------------------
// secd-callersave-dump: both continuations have the same shape; the dump is
// a snapshot of the control context of the caller, cached in a register.
// ---------------------------------------------------------------------------

namespace callersave {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;
using CEnv = Env<ValuePtr>;

struct CtxNode;
using Ctx = std::shared_ptr<const CtxNode>;  // null = End

struct CtxNode {
  struct Opd {  // evaluating the operand; operator term pending, dump cached
    TermPtr t;
    CEnv e;
    Ctx c;
    Ctx d;
  };
  struct Opr {  // evaluating the operator; operand value pending
    ValuePtr v;
    Ctx c;
  };
  std::variant<Opd, Opr> f;
};

struct Value {
  struct Int {
    std::int64_t n;
  };
  struct Succ {};
  struct FunClo {
    CEnv env;
    std::string param;
    TermPtr body;
  };
  struct StateAppender {
    Ctx d;
  };
  struct PgmClo {
    ValuePtr fn;
    Ctx d;
  };
  std::variant<Int, Succ, FunClo, StateAppender, PgmClo> v;
};

inline ValuePtr mk_int(std::int64_t n) { return std::make_shared<Value>(Value{Value::Int{n}}); }
inline ValuePtr mk_succ() { return std::make_shared<Value>(Value{Value::Succ{}}); }
inline CEnv initial_env() { return CEnv::empty().extend("succ", mk_succ()); }

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

inline std::size_t ctx_depth(const Ctx& c) {
  std::size_t n = 0;
  const CtxNode* p = c.get();
  while (p) {
    ++n;
    if (auto* opd = std::get_if<CtxNode::Opd>(&p->f)) {
      p = opd->c.get();
    } else {
      p = std::get<CtxNode::Opr>(p->f).c.get();
    }
  }
  return n;
}

struct Config {
  struct Eval {
    TermPtr t;
    CEnv e;
    Ctx c;
    Ctx d;
  };
  struct Apply {
    ValuePtr v0;
    ValuePtr v1;
    Ctx c;
  };
  struct Cont {
    Ctx c;
    ValuePtr v;
  };
  std::variant<Eval, Apply, Cont> st;
};

struct Machine {
  using C = Config;

  static Config inject(const TermPtr& t) {
    return {Config::Eval{t, initial_env(), nullptr, nullptr}};
  }

  static secd::Step<Config, ValuePtr> step(const Config& cfg) {
    using S = secd::Step<Config, ValuePtr>;
    if (auto* ev = std::get_if<Config::Eval>(&cfg.st)) {
      const auto& [t, e, c, d] = *ev;
      if (auto* l = std::get_if<Term::Lit>(&t->node)) {
        return S::next({Config::Cont{c, mk_int(l->value)}});
      }
      if (auto* x = std::get_if<Term::Var>(&t->node)) {
        auto v = e.lookup(x->name);
        if (!v) return S::stuck(StuckReason::UnboundVariable);
        return S::next({Config::Cont{c, *v}});
      }
      if (auto* m = std::get_if<Term::Lam>(&t->node)) {
        return S::next({Config::Cont{
            c, std::make_shared<Value>(Value{Value::FunClo{e, m->param, m->body}})}});
      }
      if (auto* a = std::get_if<Term::App>(&t->node)) {
        Ctx c2 = std::make_shared<CtxNode>(CtxNode{CtxNode::Opd{a->rator, e, c, d}});
        return S::next({Config::Eval{a->rand, e, c2, d}});
      }
      return S::next({Config::Cont{c, std::make_shared<Value>(Value{Value::StateAppender{d}})}});
    }
    if (auto* ap = std::get_if<Config::Apply>(&cfg.st)) {
      const auto& [v0, v1, c] = *ap;
      if (std::holds_alternative<Value::Succ>(v0->v)) {
        std::int64_t n;
        if (!is_int(v1, &n)) return S::stuck(StuckReason::SuccNonInteger);
        return S::next({Config::Cont{c, mk_int(n + 1)}});
      }
      if (auto* f = std::get_if<Value::FunClo>(&v0->v)) {
        // callee runs with the caller's continuation as its dump
        return S::next({Config::Eval{f->body, f->env.extend(f->param, v1), c, c}});
      }
      if (auto* sa = std::get_if<Value::StateAppender>(&v0->v)) {
        return S::next(
            {Config::Cont{c, std::make_shared<Value>(Value{Value::PgmClo{v1, sa->d}})}});
      }
      if (auto* pc = std::get_if<Value::PgmClo>(&v0->v)) {
        return S::next({Config::Apply{pc->fn, v1, pc->d}});
      }
      return S::stuck(StuckReason::ApplyNonFunction);
    }
    const auto& co = std::get<Config::Cont>(cfg.st);
    if (!co.c) return secd::Step<Config, ValuePtr>::done(co.v);
    if (auto* opd = std::get_if<CtxNode::Opd>(&co.c->f)) {
      Ctx c2 = std::make_shared<CtxNode>(CtxNode{CtxNode::Opr{co.v, opd->c}});
      return secd::Step<Config, ValuePtr>::next({Config::Eval{opd->t, opd->e, c2, opd->d}});
    }
    const auto& opr = std::get<CtxNode::Opr>(co.c->f);
    return secd::Step<Config, ValuePtr>::next({Config::Apply{co.v, opr.v, opr.c}});
  }

  static secd::TraceLine describe(const Config& cfg) {
    if (auto* ev = std::get_if<Config::Eval>(&cfg.st)) {
      return {"eval", print(ev->t), ctx_depth(ev->c), ctx_depth(ev->d)};
    }
    if (auto* ap = std::get_if<Config::Apply>(&cfg.st)) {
      return {"apply", show_value(ap->v0), ctx_depth(ap->c), 0};
    }
    const auto& co = std::get<Config::Cont>(cfg.st);
    return {"cont", show_value(co.v), ctx_depth(co.c), 0};
  }
};

}  // namespace callersave

// ---------------------------------------------------------------------------
// marked-context machine: one context, with delimiters; J looks up the most
// recent delimited context. cek-j: one context, no delimiters; J is an
// identifier bound in the environment.
// ---------------------------------------------------------------------------

namespace marked {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;
using KEnv = Env<ValuePtr>;

struct FrameK;
using Ctx = PList<FrameK>;

struct FrameK {
  struct Opd {
    TermPtr t;
    KEnv e;
  };
  struct Opr {
    ValuePtr v;
  };
  struct Delim {};
  std::variant<Opd, Opr, Delim> f;
};

struct Value {
  struct Int {
    std::int64_t n;
  };
  struct Succ {};
  struct FunClo {
    KEnv env;
    std::string param;
    TermPtr body;
  };
  struct CtxVal {
    Ctx ctx;
  };
  struct PgmClo {
    ValuePtr fn;
    Ctx ctx;
  };
  std::variant<Int, Succ, FunClo, CtxVal, PgmClo> v;
};

inline ValuePtr mk_int(std::int64_t n) { return std::make_shared<Value>(Value{Value::Int{n}}); }
inline ValuePtr mk_succ() { return std::make_shared<Value>(Value{Value::Succ{}}); }
inline ValuePtr mk_ctx(Ctx c) { return std::make_shared<Value>(Value{Value::CtxVal{std::move(c)}}); }

inline KEnv initial_env() { return KEnv::empty().extend("succ", mk_succ()); }

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
  if (std::holds_alternative<Value::CtxVal>(v->v)) return "state-appender";
  return "pgmclo";
}

// The most recent delimited context, when one exists.
inline std::optional<Ctx> previous(Ctx c) {
  while (!c.empty()) {
    if (std::holds_alternative<FrameK::Delim>(c.head().f)) return c.tail();
    c = c.tail();
  }
  return std::nullopt;
}

inline std::size_t delim_count(Ctx c) {
  std::size_t n = 0;
  for (; !c.empty(); c = c.tail()) {
    if (std::holds_alternative<FrameK::Delim>(c.head().f)) ++n;
  }
  return n;
}

struct Config {
  struct Eval {
    TermPtr t;
    KEnv e;
    Ctx c;
  };
  struct Apply {
    ValuePtr v0;
    ValuePtr v1;
    Ctx c;
  };
  struct Cont {
    Ctx c;
    ValuePtr v;
  };
  std::variant<Eval, Apply, Cont> st;
};

// DelimitedStart: top-level J denotes the empty context (an outer delimiter
// is installed), so the machine agrees with the entangled machine everywhere.
// The undelimited start makes top-level J stuck instead.
template <bool DelimitedStart>
struct MachineT {
  using C = Config;

  static Config inject(const TermPtr& t) {
    Ctx c;
    if constexpr (DelimitedStart) c = c.cons(FrameK{FrameK::Delim{}});
    return {Config::Eval{t, initial_env(), c}};
  }

  static secd::Step<Config, ValuePtr> step(const Config& cfg) {
    using S = secd::Step<Config, ValuePtr>;
    if (auto* ev = std::get_if<Config::Eval>(&cfg.st)) {
      const auto& [t, e, c] = *ev;
      if (auto* l = std::get_if<Term::Lit>(&t->node)) {
        return S::next({Config::Cont{c, mk_int(l->value)}});
      }
      if (auto* x = std::get_if<Term::Var>(&t->node)) {
        auto v = e.lookup(x->name);
        if (!v) return S::stuck(StuckReason::UnboundVariable);
        return S::next({Config::Cont{c, *v}});
      }
      if (auto* m = std::get_if<Term::Lam>(&t->node)) {
        return S::next({Config::Cont{
            c, std::make_shared<Value>(Value{Value::FunClo{e, m->param, m->body}})}});
      }
      if (auto* a = std::get_if<Term::App>(&t->node)) {
        return S::next({Config::Eval{a->rand, e, c.cons(FrameK{FrameK::Opd{a->rator, e}})}});
      }
      auto prev = previous(c);
      if (!prev) return S::stuck(StuckReason::NoDelimiter);
      return S::next({Config::Cont{c, mk_ctx(*prev)}});
    }
    if (auto* ap = std::get_if<Config::Apply>(&cfg.st)) {
      const auto& [v0, v1, c] = *ap;
      if (std::holds_alternative<Value::Succ>(v0->v)) {
        std::int64_t n;
        if (!is_int(v1, &n)) return S::stuck(StuckReason::SuccNonInteger);
        return S::next({Config::Cont{c, mk_int(n + 1)}});
      }
      if (auto* f = std::get_if<Value::FunClo>(&v0->v)) {
        return S::next({Config::Eval{f->body, f->env.extend(f->param, v1),
                                     c.cons(FrameK{FrameK::Delim{}})}});
      }
      if (auto* sa = std::get_if<Value::CtxVal>(&v0->v)) {
        return S::next(
            {Config::Cont{c, std::make_shared<Value>(Value{Value::PgmClo{v1, sa->ctx}})}});
      }
      if (auto* pc = std::get_if<Value::PgmClo>(&v0->v)) {
        return S::next({Config::Apply{pc->fn, v1, pc->ctx}});
      }
      return S::stuck(StuckReason::ApplyNonFunction);
    }
    const auto& co = std::get<Config::Cont>(cfg.st);
    if (co.c.empty()) return secd::Step<Config, ValuePtr>::done(co.v);
    FrameK fr = co.c.head();
    Ctx rest = co.c.tail();
    if (auto* opd = std::get_if<FrameK::Opd>(&fr.f)) {
      return secd::Step<Config, ValuePtr>::next(
          {Config::Eval{opd->t, opd->e, rest.cons(FrameK{FrameK::Opr{co.v}})}});
    }
    if (auto* opr = std::get_if<FrameK::Opr>(&fr.f)) {
      return secd::Step<Config, ValuePtr>::next({Config::Apply{co.v, opr->v, rest}});
    }
    return secd::Step<Config, ValuePtr>::next({Config::Cont{rest, co.v}});  // delimiter is transparent
  }

  static secd::TraceLine describe(const Config& cfg) {
    if (auto* ev = std::get_if<Config::Eval>(&cfg.st)) {
      return {"eval", print(ev->t), ev->c.size(), delim_count(ev->c)};
    }
    if (auto* ap = std::get_if<Config::Apply>(&cfg.st)) {
      return {"apply", show_value(ap->v0), ap->c.size(), delim_count(ap->c)};
    }
    const auto& co = std::get<Config::Cont>(cfg.st);
    return {"cont", show_value(co.v), co.c.size(), delim_count(co.c)};
  }
};

using Machine = MachineT<true>;
using MachineUndelimited = MachineT<false>;

}  // namespace marked

namespace cekj {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;
using KEnv = Env<ValuePtr>;

struct FrameK;
using Ctx = PList<FrameK>;

struct FrameK {
  struct Opd {
    TermPtr t;
    KEnv e;
  };
  struct Opr {
    ValuePtr v;
  };
  std::variant<Opd, Opr> f;
};

struct Value {
  struct Int {
    std::int64_t n;
  };
  struct Succ {};
  struct FunClo {
    KEnv env;
    std::string param;
    TermPtr body;
  };
  struct CtxVal {
    Ctx ctx;
  };
  struct PgmClo {
    ValuePtr fn;
    Ctx ctx;
  };
  std::variant<Int, Succ, FunClo, CtxVal, PgmClo> v;
};

inline ValuePtr mk_int(std::int64_t n) { return std::make_shared<Value>(Value{Value::Int{n}}); }
inline ValuePtr mk_succ() { return std::make_shared<Value>(Value{Value::Succ{}}); }
inline ValuePtr mk_ctx(Ctx c) { return std::make_shared<Value>(Value{Value::CtxVal{std::move(c)}}); }

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
  if (std::holds_alternative<Value::CtxVal>(v->v)) return "state-appender";
  return "pgmclo";
}

struct Config {
  struct Eval {
    TermPtr t;
    KEnv e;
    Ctx c;
  };
  struct Apply {
    ValuePtr v0;
    ValuePtr v1;
    Ctx c;
  };
  struct Cont {
    Ctx c;
    ValuePtr v;
  };
  std::variant<Eval, Apply, Cont> st;
};

// BindTopJ: the initial environment also binds J to the empty context, so J
// may be used outside any lambda and denotes the top level.
template <bool BindTopJ>
struct MachineT {
  using C = Config;

  static Config inject(const TermPtr& t) {
    KEnv e = KEnv::empty().extend("succ", mk_succ());
    if constexpr (BindTopJ) e = e.extend("J", mk_ctx(Ctx{}));
    return {Config::Eval{t, e, Ctx{}}};
  }

  static secd::Step<Config, ValuePtr> step(const Config& cfg) {
    using S = secd::Step<Config, ValuePtr>;
    if (auto* ev = std::get_if<Config::Eval>(&cfg.st)) {
      const auto& [t, e, c] = *ev;
      if (auto* l = std::get_if<Term::Lit>(&t->node)) {
        return S::next({Config::Cont{c, mk_int(l->value)}});
      }
      const std::string* name = nullptr;
      if (auto* x = std::get_if<Term::Var>(&t->node)) name = &x->name;
      static const std::string j_name = "J";
      if (std::holds_alternative<Term::JOp>(t->node)) name = &j_name;  // J is an identifier here
      if (name) {
        auto v = e.lookup(*name);
        if (!v) return S::stuck(StuckReason::UnboundVariable);
        return S::next({Config::Cont{c, *v}});
      }
      if (auto* m = std::get_if<Term::Lam>(&t->node)) {
        return S::next({Config::Cont{
            c, std::make_shared<Value>(Value{Value::FunClo{e, m->param, m->body}})}});
      }
      const auto& a = std::get<Term::App>(t->node);
      return S::next({Config::Eval{a.rand, e, c.cons(FrameK{FrameK::Opd{a.rator, e}})}});
    }
    if (auto* ap = std::get_if<Config::Apply>(&cfg.st)) {
      const auto& [v0, v1, c] = *ap;
      if (std::holds_alternative<Value::Succ>(v0->v)) {
        std::int64_t n;
        if (!is_int(v1, &n)) return S::stuck(StuckReason::SuccNonInteger);
        return S::next({Config::Cont{c, mk_int(n + 1)}});
      }
      if (auto* f = std::get_if<Value::FunClo>(&v0->v)) {
        KEnv e2 = f->env.extend(f->param, v1).extend("J", mk_ctx(c));
        return S::next({Config::Eval{f->body, e2, c}});
      }
      if (auto* sa = std::get_if<Value::CtxVal>(&v0->v)) {
        return S::next(
            {Config::Cont{c, std::make_shared<Value>(Value{Value::PgmClo{v1, sa->ctx}})}});
      }
      if (auto* pc = std::get_if<Value::PgmClo>(&v0->v)) {
        return S::next({Config::Apply{pc->fn, v1, pc->ctx}});
      }
      return S::stuck(StuckReason::ApplyNonFunction);
    }
    const auto& co = std::get<Config::Cont>(cfg.st);
    if (co.c.empty()) return secd::Step<Config, ValuePtr>::done(co.v);
    FrameK fr = co.c.head();
    Ctx rest = co.c.tail();
    if (auto* opd = std::get_if<FrameK::Opd>(&fr.f)) {
      return secd::Step<Config, ValuePtr>::next(
          {Config::Eval{opd->t, opd->e, rest.cons(FrameK{FrameK::Opr{co.v}})}});
    }
    const auto& opr = std::get<FrameK::Opr>(fr.f);
    return secd::Step<Config, ValuePtr>::next({Config::Apply{co.v, opr.v, rest}});
  }

  static secd::TraceLine describe(const Config& cfg) {
    if (auto* ev = std::get_if<Config::Eval>(&cfg.st)) {
      return {"eval", print(ev->t), ev->c.size(), 0};
    }
    if (auto* ap = std::get_if<Config::Apply>(&cfg.st)) {
      return {"apply", show_value(ap->v0), ap->c.size(), 0};
    }
    const auto& co = std::get<Config::Cont>(cfg.st);
    return {"cont", show_value(co.v), co.c.size(), 0};
  }
};

using Machine = MachineT<true>;
using MachineStrict = MachineT<false>;

}  // namespace cekj

}  // namespace landin
