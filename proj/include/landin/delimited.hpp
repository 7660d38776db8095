#pragma once

// Layered-continuation computations: a CPS hierarchy with three explicit
// layers, giving shift/reset at two levels, jumpy C at two levels, and
// call/cc. The third layer is the static top; it exists so that level-2
// captures are genuinely resumable. Everything runs on a trampoline so the
// native stack stays flat no matter how long a computation runs.
//
// Also: the evaluator for the extended object language used by the J
// simulations (call-by-value, right-to-left operands by default).

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "landin/outcome.hpp"
#include "landin/syntax.hpp"

namespace landin::dc {

template <typename V>
struct Ctl {
  struct Res {
    enum class Kind { Value, Stuck, Fuel } kind;
    V value{};
    StuckReason reason = StuckReason::ApplyNonFunction;

    static Res of(V v) { return {Kind::Value, std::move(v), {}}; }
    static Res stuck(StuckReason r) { return {Kind::Stuck, {}, r}; }
    static Res fuel() { return {Kind::Fuel, {}, {}}; }
  };

  struct StepT;
  using Thunk = std::function<StepT()>;
  struct StepT {
    std::variant<Res, Thunk> u;
  };

  using K3 = std::function<StepT(V)>;
  using K2 = std::function<StepT(V, K3)>;
  using K1 = std::function<StepT(V, K2, K3)>;
  using Comp = std::function<StepT(K1, K2, K3)>;

  struct Cap1 {
    K1 k;
    bool pushy;
  };
  struct Cap2 {
    K2 k;
    bool pushy;
  };

  static StepT bounce(Thunk t) { return StepT{std::move(t)}; }
  static StepT halt(Res r) { return StepT{std::move(r)}; }

  static K1 theta1() {
    return [](V v, K2 k2, K3 k3) { return bounce([v = std::move(v), k2, k3] { return k2(v, k3); }); };
  }
  static K2 theta2() {
    return [](V v, K3 k3) { return bounce([v = std::move(v), k3] { return k3(v); }); };
  }

  static Comp ret(V v) {
    return [v = std::move(v)](K1 k1, K2 k2, K3 k3) {
      return bounce([v, k1, k2, k3] { return k1(v, k2, k3); });
    };
  }

  static Comp fail(StuckReason r) {
    return [r](K1, K2, K3) { return halt(Res::stuck(r)); };
  }

  static Comp fuel_exhausted() {
    return [](K1, K2, K3) { return halt(Res::fuel()); };
  }

  static Comp bind(Comp m, std::function<Comp(V)> f) {
    return [m = std::move(m), f = std::move(f)](K1 k1, K2 k2, K3 k3) {
      K1 k1b = [f, k1](V v, K2 k2p, K3 k3p) {
        return bounce([f, v = std::move(v), k1, k2p, k3p] { return f(v)(k1, k2p, k3p); });
      };
      return bounce([m, k1b, k2, k3] { return m(k1b, k2, k3); });
    };
  }

  // reset1 delimits layer 1: the body runs with a fresh k1, and the previous
  // k1 is pushed onto layer 2.
  static Comp reset1(Comp m) {
    return [m = std::move(m)](K1 k1, K2 k2, K3 k3) {
      K2 pushed = [k1, k2](V v, K3 k3p) {
        return bounce([k1, k2, v = std::move(v), k3p] { return k1(v, k2, k3p); });
      };
      return bounce([m, pushed, k3] { return m(theta1(), pushed, k3); });
    };
  }

  // reset2 delimits layer 2: layers 1 and 2 restart fresh and the whole
  // current (k1, k2) pair is pushed onto layer 3.
  static Comp reset2(Comp m) {
    return [m = std::move(m)](K1 k1, K2 k2, K3 k3) {
      K3 pushed = [k1, k2, k3](V v) {
        return bounce([k1, k2, k3, v = std::move(v)] { return k1(v, k2, k3); });
      };
      return bounce([m, pushed] { return m(theta1(), theta2(), pushed); });
    };
  }

  static Comp shift1(std::function<Comp(Cap1)> f) {
    return [f = std::move(f)](K1 k1, K2 k2, K3 k3) {
      return bounce([f, k1, k2, k3] { return f(Cap1{k1, true})(theta1(), k2, k3); });
    };
  }

  static Comp cop1(std::function<Comp(Cap1)> f) {
    return [f = std::move(f)](K1 k1, K2 k2, K3 k3) {
      return bounce([f, k1, k2, k3] { return f(Cap1{k1, false})(theta1(), k2, k3); });
    };
  }

  static Comp shift2(std::function<Comp(Cap2)> f) {
    return [f = std::move(f)](K1 k1, K2 k2, K3 k3) {
      return bounce([f, k1, k2, k3] { return f(Cap2{k2, true})(k1, theta2(), k3); });
    };
  }

  static Comp cop2(std::function<Comp(Cap2)> f) {
    return [f = std::move(f)](K1 k1, K2 k2, K3 k3) {
      return bounce([f, k1, k2, k3] { return f(Cap2{k2, false})(k1, theta2(), k3); });
    };
  }

  // call/cc captures layer 1 without resetting it; the capability is jumpy.
  static Comp callcc_with(std::function<Comp(Cap1)> f) {
    return [f = std::move(f)](K1 k1, K2 k2, K3 k3) {
      return bounce([f, k1, k2, k3] { return f(Cap1{k1, false})(k1, k2, k3); });
    };
  }

  // Applying a composing capability resumes the captured layer and sequences
  // the current one after it; applying a jumpy capability discards the
  // current layer (both lower layers, for level 2).
  static Comp apply_cap1(Cap1 c, V v) {
    return [c = std::move(c), v = std::move(v)](K1 k1, K2 k2, K3 k3) {
      if (c.pushy) {
        K2 seq = [k1, k2](V w, K3 k3p) {
          return bounce([k1, k2, w = std::move(w), k3p] { return k1(w, k2, k3p); });
        };
        return bounce([c, v, seq, k3] { return c.k(v, seq, k3); });
      }
      return bounce([c, v, k2, k3] { return c.k(v, k2, k3); });
    };
  }

  static Comp apply_cap2(Cap2 c, V v) {
    return [c = std::move(c), v = std::move(v)](K1 k1, K2 k2, K3 k3) {
      if (c.pushy) {
        K3 seq = [k1, k2, k3](V w) {
          return bounce([k1, k2, k3, w = std::move(w)] { return k1(w, k2, k3); });
        };
        return bounce([c, v, seq] { return c.k(v, seq); });
      }
      return bounce([c, v, k3] { return c.k(v, k3); });
    };
  }

  static Res run(const Comp& m) {
    K3 top = [](V v) { return halt(Res::of(std::move(v))); };
    StepT s = m(theta1(), theta2(), top);
    for (;;) {
      if (auto* r = std::get_if<Res>(&s.u)) return *r;
      Thunk t = std::move(std::get<Thunk>(s.u));
      s = t();
    }
  }
};

// ---------------------------------------------------------------------------
// The extended object language: values and evaluator
// ---------------------------------------------------------------------------

struct ExtValue;
using XV = std::shared_ptr<const ExtValue>;
using XC = Ctl<XV>;
using XEnv = Env<XV>;

struct ExtValue {
  struct Int {
    std::int64_t n;
  };
  struct Succ {};
  struct Clo {
    XEnv env;
    std::string param;
    ExtPtr body;
  };
  struct PairV {
    XV left;
    XV right;
  };
  struct InlV {
    XV v;
  };
  struct InrV {
    XV v;
  };
  struct Capt1 {
    XC::Cap1 cap;
  };
  struct Capt2 {
    XC::Cap2 cap;
  };
  struct CaptCC {
    XC::Cap1 cap;
  };
  std::variant<Int, Succ, Clo, PairV, InlV, InrV, Capt1, Capt2, CaptCC> v;
};

inline XV xint(std::int64_t n) { return std::make_shared<ExtValue>(ExtValue{ExtValue::Int{n}}); }
inline XV xsucc() { return std::make_shared<ExtValue>(ExtValue{ExtValue::Succ{}}); }
inline XV xclo(XEnv e, std::string x, ExtPtr b) {
  return std::make_shared<ExtValue>(ExtValue{ExtValue::Clo{std::move(e), std::move(x), std::move(b)}});
}
inline XV xpair(XV l, XV r) {
  return std::make_shared<ExtValue>(ExtValue{ExtValue::PairV{std::move(l), std::move(r)}});
}
inline XV xinl(XV v) { return std::make_shared<ExtValue>(ExtValue{ExtValue::InlV{std::move(v)}}); }
inline XV xinr(XV v) { return std::make_shared<ExtValue>(ExtValue{ExtValue::InrV{std::move(v)}}); }

inline XEnv ext_initial_env() { return XEnv::empty().extend("succ", xsucc()); }

inline bool xv_is_int(const XV& v, std::int64_t* out = nullptr) {
  if (auto* i = std::get_if<ExtValue::Int>(&v->v)) {
    if (out) *out = i->n;
    return true;
  }
  return false;
}

struct Fuel {
  std::uint64_t left;
};

enum class EvalOrder { RightToLeft, LeftToRight };

inline XC::Comp ext_apply(XV v0, XV v1, const std::shared_ptr<Fuel>& fuel, EvalOrder order);

inline XC::Comp ext_eval(const ExtPtr& t, XEnv e, std::shared_ptr<Fuel> fuel,
                         EvalOrder order = EvalOrder::RightToLeft) {
  using E = ExtTerm;
  if (fuel->left == 0) return XC::fuel_exhausted();
  --fuel->left;

  if (auto* l = std::get_if<E::Lit>(&t->node)) return XC::ret(xint(l->value));
  if (auto* x = std::get_if<E::Var>(&t->node)) {
    auto v = e.lookup(x->name);
    if (!v) return XC::fail(StuckReason::UnboundVariable);
    return XC::ret(*v);
  }
  if (auto* m = std::get_if<E::Lam>(&t->node)) return XC::ret(xclo(e, m->param, m->body));
  if (auto* a = std::get_if<E::App>(&t->node)) {
    ExtPtr rator = a->rator, rand = a->rand;
    if (order == EvalOrder::RightToLeft) {
      return XC::bind(ext_eval(rand, e, fuel, order), [=](XV v1) {
        return XC::bind(ext_eval(rator, e, fuel, order),
                        [=](XV v0) { return ext_apply(v0, v1, fuel, order); });
      });
    }
    return XC::bind(ext_eval(rator, e, fuel, order), [=](XV v0) {
      return XC::bind(ext_eval(rand, e, fuel, order),
                      [=](XV v1) { return ext_apply(v0, v1, fuel, order); });
    });
  }
  if (auto* s1 = std::get_if<E::Shift1>(&t->node)) {
    ExtPtr body = s1->body;
    std::string binder = s1->binder;
    return XC::shift1([=](XC::Cap1 cap) {
      XV kv = std::make_shared<ExtValue>(ExtValue{ExtValue::Capt1{std::move(cap)}});
      return ext_eval(body, e.extend(binder, kv), fuel, order);
    });
  }
  if (auto* r1 = std::get_if<E::Reset1>(&t->node)) {
    return XC::reset1(ext_eval(r1->body, e, fuel, order));
  }
  if (auto* s2 = std::get_if<E::Shift2>(&t->node)) {
    ExtPtr body = s2->body;
    std::string binder = s2->binder;
    return XC::shift2([=](XC::Cap2 cap) {
      XV kv = std::make_shared<ExtValue>(ExtValue{ExtValue::Capt2{std::move(cap)}});
      return ext_eval(body, e.extend(binder, kv), fuel, order);
    });
  }
  if (auto* r2 = std::get_if<E::Reset2>(&t->node)) {
    return XC::reset2(ext_eval(r2->body, e, fuel, order));
  }
  if (auto* c1 = std::get_if<E::Cop1>(&t->node)) {
    ExtPtr body = c1->body;
    std::string binder = c1->binder;
    return XC::cop1([=](XC::Cap1 cap) {
      XV kv = std::make_shared<ExtValue>(ExtValue{ExtValue::Capt1{std::move(cap)}});
      return ext_eval(body, e.extend(binder, kv), fuel, order);
    });
  }
  if (auto* c2 = std::get_if<E::Cop2>(&t->node)) {
    ExtPtr body = c2->body;
    std::string binder = c2->binder;
    return XC::cop2([=](XC::Cap2 cap) {
      XV kv = std::make_shared<ExtValue>(ExtValue{ExtValue::Capt2{std::move(cap)}});
      return ext_eval(body, e.extend(binder, kv), fuel, order);
    });
  }
  if (auto* cc = std::get_if<E::Callcc>(&t->node)) {
    ExtPtr arg = cc->arg;
    return XC::bind(ext_eval(arg, e, fuel, order), [=](XV f) {
      return XC::callcc_with([=](XC::Cap1 cap) {
        XV kv = std::make_shared<ExtValue>(ExtValue{ExtValue::CaptCC{std::move(cap)}});
        return ext_apply(f, kv, fuel, order);
      });
    });
  }
  if (auto* pr = std::get_if<E::Pair>(&t->node)) {
    ExtPtr lt = pr->left, rt = pr->right;
    if (order == EvalOrder::RightToLeft) {
      return XC::bind(ext_eval(rt, e, fuel, order), [=](XV rv) {
        return XC::bind(ext_eval(lt, e, fuel, order),
                        [=](XV lv) { return XC::ret(xpair(lv, rv)); });
      });
    }
    return XC::bind(ext_eval(lt, e, fuel, order), [=](XV lv) {
      return XC::bind(ext_eval(rt, e, fuel, order), [=](XV rv) { return XC::ret(xpair(lv, rv)); });
    });
  }
  if (auto* il = std::get_if<E::Inl>(&t->node)) {
    return XC::bind(ext_eval(il->body, e, fuel, order), [](XV v) { return XC::ret(xinl(v)); });
  }
  if (auto* ir = std::get_if<E::Inr>(&t->node)) {
    return XC::bind(ext_eval(ir->body, e, fuel, order), [](XV v) { return XC::ret(xinr(v)); });
  }
  if (auto* cs = std::get_if<E::Case>(&t->node)) {
    ExtPtr scrut = cs->scrutinee, lbody = cs->left_body, rbody = cs->right_body;
    std::string lb = cs->left_binder, rb = cs->right_binder;
    return XC::bind(ext_eval(scrut, e, fuel, order), [=](XV sv) {
      if (auto* i = std::get_if<ExtValue::InlV>(&sv->v)) {
        return ext_eval(lbody, e.extend(lb, i->v), fuel, order);
      }
      if (auto* i = std::get_if<ExtValue::InrV>(&sv->v)) {
        return ext_eval(rbody, e.extend(rb, i->v), fuel, order);
      }
      return XC::fail(StuckReason::CaseNonSum);
    });
  }
  const auto& lp = std::get<E::LetP>(t->node);
  ExtPtr bound = lp.bound, body = lp.body;
  std::string name = lp.name, name2 = lp.name2;
  E::PatKind pat = lp.pattern;
  return XC::bind(ext_eval(bound, e, fuel, order), [=](XV v) {
    if (pat == E::PatKind::Plain) return ext_eval(body, e.extend(name, v), fuel, order);
    if (pat == E::PatKind::Inl) {
      if (auto* i = std::get_if<ExtValue::InlV>(&v->v)) {
        return ext_eval(body, e.extend(name, i->v), fuel, order);
      }
      return XC::fail(StuckReason::CaseNonSum);
    }
    if (pat == E::PatKind::Inr) {
      if (auto* i = std::get_if<ExtValue::InrV>(&v->v)) {
        return ext_eval(body, e.extend(name, i->v), fuel, order);
      }
      return XC::fail(StuckReason::CaseNonSum);
    }
    if (auto* pr = std::get_if<ExtValue::PairV>(&v->v)) {
      return ext_eval(body, e.extend(name, pr->left).extend(name2, pr->right), fuel, order);
    }
    return XC::fail(StuckReason::CaseNonSum);
  });
}

inline XC::Comp ext_apply(XV v0, XV v1, const std::shared_ptr<Fuel>& fuel, EvalOrder order) {
  if (std::holds_alternative<ExtValue::Succ>(v0->v)) {
    std::int64_t n;
    if (!xv_is_int(v1, &n)) return XC::fail(StuckReason::SuccNonInteger);
    return XC::ret(xint(n + 1));
  }
  if (auto* c = std::get_if<ExtValue::Clo>(&v0->v)) {
    return ext_eval(c->body, c->env.extend(c->param, v1), fuel, order);
  }
  if (auto* k = std::get_if<ExtValue::Capt1>(&v0->v)) return XC::apply_cap1(k->cap, v1);
  if (auto* k = std::get_if<ExtValue::Capt2>(&v0->v)) return XC::apply_cap2(k->cap, v1);
  if (auto* k = std::get_if<ExtValue::CaptCC>(&v0->v)) return XC::apply_cap1(k->cap, v1);
  return XC::fail(StuckReason::ApplyNonFunction);
}

// Runs a whole program: the term is evaluated under reset2 (reset1 [.])
// in the given environment (by default the initial one binding succ).
inline RunResult ext_run_in(const ExtPtr& t, const XEnv& env, std::uint64_t fuel_budget,
                            EvalOrder order = EvalOrder::RightToLeft) {
  auto fuel = std::make_shared<Fuel>(Fuel{fuel_budget});
  XC::Comp program = XC::reset2(XC::reset1(ext_eval(t, env, fuel, order)));
  XC::Res r = XC::run(program);
  std::uint64_t used = fuel_budget - fuel->left;
  switch (r.kind) {
    case XC::Res::Kind::Value: {
      std::int64_t n;
      if (xv_is_int(r.value, &n)) return {RunResult::Kind::Num, n, {}, used};
      return {RunResult::Kind::Procedure, 0, {}, used};
    }
    case XC::Res::Kind::Stuck:
      return {RunResult::Kind::Stuck, 0, r.reason, used};
    case XC::Res::Kind::Fuel:
      return {RunResult::Kind::OutOfFuel, 0, {}, fuel_budget};
  }
  return {RunResult::Kind::OutOfFuel, 0, {}, fuel_budget};
}

inline RunResult ext_run(const ExtPtr& t, std::uint64_t fuel_budget,
                         EvalOrder order = EvalOrder::RightToLeft) {
  return ext_run_in(t, ext_initial_env(), fuel_budget, order);
}

}  // namespace landin::dc
