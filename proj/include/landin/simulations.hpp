#pragma once

// Syntax-directed translations of applicative expressions with J into the
// extended language, one per simulation, plus the program wrappers. Each
// translation composed with the extended-language evaluator is an engine.

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "landin/delimited.hpp"
#include "landin/outcome.hpp"
#include "landin/syntax.hpp"
#include "landin/util.hpp"

namespace landin::sim {

enum class SimName {
  DsShift2,      // direct style, shift/reset at two levels
  Cps1Shift,     // one layer of continuations, shift/reset
  Cps2,          // two layers of continuations, pure CPS
  DsC2,          // direct style, jumpy C at two levels
  Cps1C,         // one layer, jumpy C
  Cps1Callcc,    // one layer, call/cc
  CpsRet,        // CPS with a return continuation
  DsRet,         // direct style with a return continuation
  Thielecke,     // double-barrelled CPS encoding
  FelleisenDs,   // J dynamically bound, direct style (shift flavor)
  FelleisenCps,  // J dynamically bound, CPS
  BurgeDs,       // tagged returns, direct style
  BurgeCps1,     // tagged returns, one layer
  BurgeCps2,     // tagged returns, two layers, pure CPS
};

inline const char* sim_id(SimName s) {
  switch (s) {
    case SimName::DsShift2: return "sim-ds-shift2";
    case SimName::Cps1Shift: return "sim-cps1-shift";
    case SimName::Cps2: return "sim-cps2";
    case SimName::DsC2: return "sim-ds-C2";
    case SimName::Cps1C: return "sim-cps1-C";
    case SimName::Cps1Callcc: return "sim-cps1-callcc";
    case SimName::CpsRet: return "sim-cps-ret";
    case SimName::DsRet: return "sim-ds-ret";
    case SimName::Thielecke: return "sim-thielecke";
    case SimName::FelleisenDs: return "sim-felleisen-ds";
    case SimName::FelleisenCps: return "sim-felleisen-cps";
    case SimName::BurgeDs: return "sim-burge-ds";
    case SimName::BurgeCps1: return "sim-burge-cps1";
    case SimName::BurgeCps2: return "sim-burge-cps2";
  }
  return "?";
}

inline bool sim_is_burge(SimName s) {
  return s == SimName::BurgeDs || s == SimName::BurgeCps1 || s == SimName::BurgeCps2;
}

// These simulations bind J dynamically or tag thrown values; both schemes
// restrict J to occur inside a lambda-abstraction (checked before
// translating).
inline bool sim_requires_j_under_lambda(SimName s) {
  return sim_is_burge(s) || s == SimName::FelleisenDs || s == SimName::FelleisenCps;
}

// Fresh binders: the bare base name when it is free, then base1, base2, ...
// Seeded with every identifier of the source program so no capture occurs.
class FreshNames {
  std::set<std::string> used_;

 public:
  explicit FreshNames(const TermPtr& source) {
    used_ = all_identifiers(source);
    used_.insert("succ");
    used_.insert("J");
  }

  void reserve(const std::string& n) { used_.insert(n); }

  std::string fresh(const std::string& base) {
    if (!used_.count(base)) {
      used_.insert(base);
      return base;
    }
    for (int i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!used_.count(cand)) {
        used_.insert(cand);
        return cand;
      }
    }
  }
};

namespace det {

using ext::app;
using ext::callcc;
using ext::case_of;
using ext::cop1;
using ext::cop2;
using ext::inl;
using ext::inr;
using ext::lam;
using ext::letp;
using ext::letpair;
using ext::pair;
using ext::reset1;
using ext::reset2;
using ext::shift1;
using ext::shift2;

inline ExtPtr xv(const std::string& n) { return ext::var(n); }

enum class Level1Op { Shift, JumpyC, Callcc };

// Direct-style translation with two context layers. Only the J clause
// differs between the shift flavor and the jumpy-C flavor.
inline ExtPtr tr_ds2(const TermPtr& t, FreshNames& fn, bool jumpy) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) return ext::lit(l->value);
  if (auto* x = std::get_if<Term::Var>(&t->node)) return xv(x->name);
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    return app(tr_ds2(a->rator, fn, jumpy), tr_ds2(a->rand, fn, jumpy));
  }
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    return lam(m->param, reset1(tr_ds2(m->body, fn, jumpy)));
  }
  std::string c = fn.fresh("c"), d = fn.fresh("d"), v = fn.fresh("v"), w = fn.fresh("v");
  if (jumpy) {
    // program closures jump by invoking the captured level-2 continuation
    ExtPtr pc = lam(w, app(xv(d), reset1(app(xv(v), xv(w)))));
    return cop1(c, cop2(d, app(xv(d), app(xv(c), lam(v, pc)))));
  }
  std::string c2 = fn.fresh("c"), d2 = fn.fresh("d");
  ExtPtr pc = lam(w, shift1(c2, shift2(d2, app(xv(d), reset1(app(xv(v), xv(w)))))));
  return shift1(c, shift2(d, app(xv(d), app(xv(c), lam(v, pc)))));
}

// One layer of continuations; the implicit layer is the dump. The J clause
// varies with the control operator used to capture the dump.
inline ExtPtr tr_cps1(const TermPtr& t, FreshNames& fn, Level1Op op) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    std::string k = fn.fresh("k");
    return lam(k, app(xv(k), ext::lit(l->value)));
  }
  if (auto* x = std::get_if<Term::Var>(&t->node)) {
    std::string k = fn.fresh("k");
    return lam(k, app(xv(k), xv(x->name)));
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    std::string k = fn.fresh("k"), v1 = fn.fresh("v"), v0 = fn.fresh("v");
    return lam(k, app(tr_cps1(a->rand, fn, op),
                      lam(v1, app(tr_cps1(a->rator, fn, op),
                                  lam(v0, app(app(xv(v0), xv(v1)), xv(k)))))));
  }
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    std::string k = fn.fresh("k"), k2 = fn.fresh("k"), v = fn.fresh("v");
    return lam(k, app(xv(k), lam(m->param,
                                 lam(k2, app(xv(k2), app(tr_cps1(m->body, fn, op),
                                                         lam(v, xv(v))))))));
  }
  std::string k = fn.fresh("k"), d = fn.fresh("d"), v = fn.fresh("v"), k2 = fn.fresh("k"),
              w = fn.fresh("v"), k3 = fn.fresh("k"), u = fn.fresh("v");
  // the program closure applies the captured function and jumps to d
  ExtPtr ret_id = lam(u, xv(u));
  ExtPtr jump = app(xv(d), app(app(xv(v), xv(w)), ret_id));
  ExtPtr pc_body = [&] {
    switch (op) {
      case Level1Op::Shift: {
        std::string d2 = fn.fresh("d");
        return lam(k3, shift1(d2, jump));
      }
      default:
        return lam(k3, jump);  // a jumpy d discards the context by itself
    }
  }();
  ExtPtr sa = lam(v, lam(k2, app(xv(k2), lam(w, pc_body))));
  switch (op) {
    case Level1Op::Shift: return lam(k, shift1(d, app(xv(d), app(xv(k), sa))));
    case Level1Op::JumpyC: return lam(k, cop1(d, app(xv(d), app(xv(k), sa))));
    case Level1Op::Callcc: return lam(k, callcc(lam(d, app(xv(k), sa))));
  }
  return nullptr;
}

// Two layers of continuations: pure CPS, no control operators.
inline ExtPtr tr_cps2(const TermPtr& t, FreshNames& fn) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    std::string c = fn.fresh("c"), d = fn.fresh("d");
    return lam(c, lam(d, app(app(xv(c), ext::lit(l->value)), xv(d))));
  }
  if (auto* x = std::get_if<Term::Var>(&t->node)) {
    std::string c = fn.fresh("c"), d = fn.fresh("d");
    return lam(c, lam(d, app(app(xv(c), xv(x->name)), xv(d))));
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    std::string c = fn.fresh("c"), d = fn.fresh("d"), v1 = fn.fresh("v"), d2 = fn.fresh("d"),
                v0 = fn.fresh("v"), d3 = fn.fresh("d");
    ExtPtr apply_k = lam(v0, lam(d3, app(app(app(xv(v0), xv(v1)), xv(c)), xv(d3))));
    ExtPtr operand_k = lam(v1, lam(d2, app(app(tr_cps2(a->rator, fn), apply_k), xv(d2))));
    return lam(c, lam(d, app(app(tr_cps2(a->rand, fn), operand_k), xv(d))));
  }
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    std::string c = fn.fresh("c"), d = fn.fresh("d"), c2 = fn.fresh("c"), d2 = fn.fresh("d"),
                v = fn.fresh("v"), d3 = fn.fresh("d"), w = fn.fresh("v");
    ExtPtr fun = lam(m->param,
                     lam(c2, lam(d2, app(app(tr_cps2(m->body, fn),
                                             lam(v, lam(d3, app(xv(d3), xv(v))))),
                                         lam(w, app(app(xv(c2), xv(w)), xv(d2)))))));
    return lam(c, lam(d, app(app(xv(c), fun), xv(d))));
  }
  std::string c = fn.fresh("c"), d = fn.fresh("d"), v = fn.fresh("v"), c2 = fn.fresh("c"),
              d3 = fn.fresh("d"), w = fn.fresh("v"), c3 = fn.fresh("c"), d4 = fn.fresh("d"),
              u = fn.fresh("v"), d5 = fn.fresh("d");
  ExtPtr pc = lam(w, lam(c3, lam(d4, app(app(app(xv(v), xv(w)),
                                             lam(u, lam(d5, app(xv(d5), xv(u))))),
                                         xv(d)))));
  ExtPtr sa = lam(v, lam(c2, lam(d3, app(app(xv(c2), pc), xv(d3)))));
  return lam(c, lam(d, app(app(xv(c), sa), xv(d))));
}

// CPS with a return continuation (also the double-barrelled encoding).
inline ExtPtr tr_cps_ret(const TermPtr& t, FreshNames& fn) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    std::string c = fn.fresh("c"), h = fn.fresh("h");
    return lam(c, lam(h, app(xv(c), ext::lit(l->value))));
  }
  if (auto* x = std::get_if<Term::Var>(&t->node)) {
    std::string c = fn.fresh("c"), h = fn.fresh("h");
    return lam(c, lam(h, app(xv(c), xv(x->name))));
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    std::string c = fn.fresh("c"), h = fn.fresh("h"), v1 = fn.fresh("v"), v0 = fn.fresh("v");
    return lam(c, lam(h, app(app(tr_cps_ret(a->rand, fn),
                                 lam(v1, app(app(tr_cps_ret(a->rator, fn),
                                                 lam(v0, app(app(xv(v0), xv(v1)), xv(c)))),
                                             xv(h)))),
                             xv(h))));
  }
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    std::string c = fn.fresh("c"), h = fn.fresh("h"), c2 = fn.fresh("c");
    ExtPtr fun = lam(m->param, lam(c2, app(app(tr_cps_ret(m->body, fn), xv(c2)), xv(c2))));
    return lam(c, lam(h, app(xv(c), fun)));
  }
  std::string c = fn.fresh("c"), h = fn.fresh("h"), v0 = fn.fresh("v"), c2 = fn.fresh("c"),
              v1 = fn.fresh("v"), c3 = fn.fresh("c");
  ExtPtr pc = lam(v1, lam(c3, app(app(xv(v0), xv(v1)), xv(h))));
  ExtPtr sa = lam(v0, lam(c2, app(xv(c2), pc)));
  return lam(c, lam(h, app(xv(c), sa)));
}

// Direct style with a return continuation. The resets around the shift
// bodies are operationally unnecessary; with_resets keeps them as written.
inline ExtPtr tr_ds_ret(const TermPtr& t, FreshNames& fn, bool with_resets) {
  auto maybe_reset = [&](ExtPtr b) { return with_resets ? reset1(b) : b; };
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    std::string d = fn.fresh("d");
    return lam(d, ext::lit(l->value));
  }
  if (auto* x = std::get_if<Term::Var>(&t->node)) {
    std::string d = fn.fresh("d");
    return lam(d, xv(x->name));
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    std::string d = fn.fresh("d");
    return lam(d, app(app(tr_ds_ret(a->rator, fn, with_resets), xv(d)),
                      app(tr_ds_ret(a->rand, fn, with_resets), xv(d))));
  }
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    std::string d = fn.fresh("d"), c = fn.fresh("c");
    return lam(d, lam(m->param,
                      shift1(c, maybe_reset(app(xv(c), app(tr_ds_ret(m->body, fn, with_resets),
                                                           xv(c)))))));
  }
  std::string d = fn.fresh("d"), v0 = fn.fresh("v"), v1 = fn.fresh("v"), c = fn.fresh("c");
  return lam(d, lam(v0, lam(v1, shift1(c, maybe_reset(app(xv(d), app(xv(v0), xv(v1))))))));
}

// J as a dynamically bound identifier, direct style. Three interchangeable
// control flavors for abstraction bodies; shift is total within the layered
// abstraction, call/cc is the classical rendering.
inline ExtPtr tr_felleisen_ds(const TermPtr& t, FreshNames& fn, Level1Op op) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) return ext::lit(l->value);
  if (auto* x = std::get_if<Term::Var>(&t->node)) return xv(x->name);
  if (std::holds_alternative<Term::JOp>(t->node)) return xv("J");
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    return app(tr_felleisen_ds(a->rator, fn, op), tr_felleisen_ds(a->rand, fn, op));
  }
  const auto& m = std::get<Term::Lam>(t->node);
  ExtPtr body = tr_felleisen_ds(m.body, fn, op);
  std::string d = fn.fresh("d"), v = fn.fresh("v"), w = fn.fresh("v");
  switch (op) {
    case Level1Op::Callcc: {
      ExtPtr sa = lam(v, lam(w, app(xv(d), app(xv(v), xv(w)))));
      return lam(m.param, callcc(lam(d, app(lam("J", body), sa))));
    }
    case Level1Op::JumpyC: {
      ExtPtr sa = lam(v, lam(w, app(xv(d), app(xv(v), xv(w)))));
      return lam(m.param, cop1(d, app(lam("J", app(xv(d), body)), sa)));
    }
    default: {
      std::string c = fn.fresh("c");
      ExtPtr sa = lam(v, lam(w, shift1(c, app(xv(d), app(xv(v), xv(w))))));
      return lam(m.param, shift1(d, app(lam("J", app(xv(d), body)), sa)));
    }
  }
}

// J as a dynamically bound identifier, CPS.
inline ExtPtr tr_felleisen_cps(const TermPtr& t, FreshNames& fn) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    std::string c = fn.fresh("c");
    return lam(c, app(xv(c), ext::lit(l->value)));
  }
  if (auto* x = std::get_if<Term::Var>(&t->node)) {
    std::string c = fn.fresh("c");
    return lam(c, app(xv(c), xv(x->name)));
  }
  if (std::holds_alternative<Term::JOp>(t->node)) {
    std::string c = fn.fresh("c");
    return lam(c, app(xv(c), xv("J")));
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    std::string c = fn.fresh("c"), v1 = fn.fresh("v"), v0 = fn.fresh("v");
    return lam(c, app(tr_felleisen_cps(a->rand, fn),
                      lam(v1, app(tr_felleisen_cps(a->rator, fn),
                                  lam(v0, app(app(xv(v0), xv(v1)), xv(c)))))));
  }
  const auto& m = std::get<Term::Lam>(t->node);
  ExtPtr body = tr_felleisen_cps(m.body, fn);
  std::string c = fn.fresh("c"), d = fn.fresh("d"), v = fn.fresh("v"), c2 = fn.fresh("c"),
              w = fn.fresh("v"), c3 = fn.fresh("c");
  ExtPtr pc = lam(w, lam(c3, app(app(xv(v), xv(w)), xv(d))));
  ExtPtr sa = lam(v, lam(c2, app(xv(c2), pc)));
  ExtPtr fun = lam(m.param, lam(d, app(lam("J", app(body, xv(d))), sa)));
  return lam(c, app(xv(c), fun));
}

// Tagged-return translations: normal completion is inl v, a value thrown to
// a program closure is inr (pair fn arg).
inline ExtPtr tr_burge_ds(const TermPtr& t, FreshNames& fn) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) return ext::lit(l->value);
  if (auto* x = std::get_if<Term::Var>(&t->node)) return xv(x->name);
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    return app(tr_burge_ds(a->rator, fn), tr_burge_ds(a->rand, fn));
  }
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    std::string v = fn.fresh("v"), p = fn.fresh("p"), f = fn.fresh("v"), x = fn.fresh("v");
    return lam(m->param,
               case_of(reset1(inl(tr_burge_ds(m->body, fn))), v, xv(v), p,
                       letpair(f, x, xv(p), app(xv(f), xv(x)))));
  }
  std::string c = fn.fresh("c"), d = fn.fresh("d"), v = fn.fresh("v"), w = fn.fresh("v"),
              c2 = fn.fresh("c"), d2 = fn.fresh("d");
  ExtPtr pc = lam(w, shift1(c2, shift2(d2, app(xv(d), inr(pair(xv(v), xv(w)))))));
  return shift1(c, shift2(d, app(xv(d), app(xv(c), lam(v, pc)))));
}

inline ExtPtr tr_burge_cps1(const TermPtr& t, FreshNames& fn) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    std::string k = fn.fresh("k");
    return lam(k, app(xv(k), ext::lit(l->value)));
  }
  if (auto* x = std::get_if<Term::Var>(&t->node)) {
    std::string k = fn.fresh("k");
    return lam(k, app(xv(k), xv(x->name)));
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    std::string k = fn.fresh("k"), v1 = fn.fresh("v"), v0 = fn.fresh("v");
    return lam(k, app(tr_burge_cps1(a->rand, fn),
                      lam(v1, app(tr_burge_cps1(a->rator, fn),
                                  lam(v0, app(app(xv(v0), xv(v1)), xv(k)))))));
  }
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    std::string k = fn.fresh("k"), k2 = fn.fresh("k"), v = fn.fresh("v"), w = fn.fresh("v"),
                p = fn.fresh("p"), f = fn.fresh("v"), x = fn.fresh("v");
    ExtPtr fun = lam(m->param,
                     lam(k2, case_of(app(tr_burge_cps1(m->body, fn), lam(v, inl(xv(v)))), w,
                                     app(xv(k2), xv(w)), p,
                                     letpair(f, x, xv(p), app(app(xv(f), xv(x)), xv(k2))))));
    return lam(k, app(xv(k), fun));
  }
  std::string c = fn.fresh("c"), d = fn.fresh("d"), v = fn.fresh("v"), c2 = fn.fresh("c"),
              w = fn.fresh("v"), c3 = fn.fresh("c"), d2 = fn.fresh("d");
  ExtPtr pc = lam(w, lam(c3, shift1(d2, app(xv(d), inr(pair(xv(v), xv(w)))))));
  ExtPtr sa = lam(v, lam(c2, app(xv(c2), pc)));
  return lam(c, shift1(d, app(xv(d), app(xv(c), sa))));
}

inline ExtPtr tr_burge_cps2(const TermPtr& t, FreshNames& fn) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    std::string c = fn.fresh("c"), m = fn.fresh("m");
    return lam(c, lam(m, app(app(xv(c), ext::lit(l->value)), xv(m))));
  }
  if (auto* x = std::get_if<Term::Var>(&t->node)) {
    std::string c = fn.fresh("c"), m = fn.fresh("m");
    return lam(c, lam(m, app(app(xv(c), xv(x->name)), xv(m))));
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    std::string c = fn.fresh("c"), m = fn.fresh("m"), v1 = fn.fresh("v"), m2 = fn.fresh("m"),
                v0 = fn.fresh("v"), m3 = fn.fresh("m");
    ExtPtr apply_k = lam(v0, lam(m3, app(app(app(xv(v0), xv(v1)), xv(c)), xv(m3))));
    ExtPtr operand_k = lam(v1, lam(m2, app(app(tr_burge_cps2(a->rator, fn), apply_k), xv(m2))));
    return lam(c, lam(m, app(app(tr_burge_cps2(a->rand, fn), operand_k), xv(m))));
  }
  if (auto* lm = std::get_if<Term::Lam>(&t->node)) {
    std::string c = fn.fresh("c"), m = fn.fresh("m"), c2 = fn.fresh("c"), m2 = fn.fresh("m"),
                v = fn.fresh("v"), m3 = fn.fresh("m"), w = fn.fresh("v"), u = fn.fresh("v"),
                p = fn.fresh("p"), f = fn.fresh("v"), x = fn.fresh("v");
    ExtPtr yield_k = lam(v, lam(m3, app(xv(m3), inl(xv(v)))));
    ExtPtr dump_k = lam(w, case_of(xv(w), u, app(app(xv(c2), xv(u)), xv(m2)), p,
                                   letpair(f, x, xv(p),
                                           app(app(app(xv(f), xv(x)), xv(c2)), xv(m2)))));
    ExtPtr fun = lam(lm->param,
                     lam(c2, lam(m2, app(app(tr_burge_cps2(lm->body, fn), yield_k), dump_k))));
    return lam(c, lam(m, app(app(xv(c), fun), xv(m))));
  }
  std::string c = fn.fresh("c"), m = fn.fresh("m"), v = fn.fresh("v"), c2 = fn.fresh("c"),
              m3 = fn.fresh("m"), w = fn.fresh("v"), c3 = fn.fresh("c"), m4 = fn.fresh("m");
  ExtPtr pc = lam(w, lam(c3, lam(m4, app(xv(m), inr(pair(xv(v), xv(w)))))));
  ExtPtr sa = lam(v, lam(c2, lam(m3, app(app(xv(c2), pc), xv(m3)))));
  return lam(c, lam(m, app(app(xv(c), sa), xv(m))));
}

}  // namespace det

// Translate a source term. Fails (JOutsideLambda) for the restricted
// simulations when J occurs outside every lambda-abstraction.
inline Result<ExtPtr> translate(SimName s, const TermPtr& t) {
  if (sim_requires_j_under_lambda(s) && !j_under_lambda_only(t)) {
    return Result<ExtPtr>::failure("JOutsideLambda");
  }
  FreshNames fn(t);
  using det::Level1Op;
  ExtPtr out;
  switch (s) {
    case SimName::DsShift2: out = det::tr_ds2(t, fn, false); break;
    case SimName::Cps1Shift: out = det::tr_cps1(t, fn, Level1Op::Shift); break;
    case SimName::Cps2: out = det::tr_cps2(t, fn); break;
    case SimName::DsC2: out = det::tr_ds2(t, fn, true); break;
    case SimName::Cps1C: out = det::tr_cps1(t, fn, Level1Op::JumpyC); break;
    case SimName::Cps1Callcc: out = det::tr_cps1(t, fn, Level1Op::Callcc); break;
    case SimName::CpsRet: out = det::tr_cps_ret(t, fn); break;
    case SimName::DsRet: out = det::tr_ds_ret(t, fn, true); break;
    case SimName::Thielecke: out = det::tr_cps_ret(t, fn); break;
    case SimName::FelleisenDs: out = det::tr_felleisen_ds(t, fn, Level1Op::Shift); break;
    case SimName::FelleisenCps: out = det::tr_felleisen_cps(t, fn); break;
    case SimName::BurgeDs: out = det::tr_burge_ds(t, fn); break;
    case SimName::BurgeCps1: out = det::tr_burge_cps1(t, fn); break;
    case SimName::BurgeCps2: out = det::tr_burge_cps2(t, fn); break;
  }
  return Result<ExtPtr>::success(out);
}

// Wrap a translated body as a whole program.
inline ExtPtr wrap_program(SimName s, const ExtPtr& body) {
  using namespace det;
  switch (s) {
    case SimName::DsShift2:
    case SimName::DsC2:
      return reset2(reset1(body));
    case SimName::Cps1Shift:
    case SimName::Cps1C:
    case SimName::Cps1Callcc:
      return reset1(app(body, lam("v", xv("v"))));
    case SimName::Cps2:
      return app(app(body, lam("v", lam("d", app(xv("d"), xv("v"))))), lam("w", xv("w")));
    case SimName::CpsRet:
    case SimName::Thielecke:
      return app(app(body, lam("v", xv("v"))), lam("w", xv("w")));
    case SimName::DsRet:
      return reset1(app(body, lam("v", xv("v"))));
    case SimName::FelleisenDs: {
      ExtPtr top_sa = lam("v", lam("w", reset1(app(xv("v"), xv("w")))));
      return app(lam("J", reset1(body)), top_sa);
    }
    case SimName::FelleisenCps: {
      ExtPtr pc = lam("w", lam("c2", app(app(xv("v"), xv("w")), lam("u", xv("u")))));
      ExtPtr top_sa = lam("v", lam("c", app(xv("c"), pc)));
      return app(lam("J", app(body, lam("u", xv("u")))), top_sa);
    }
    case SimName::BurgeDs:
      return reset2(letp(ExtTerm::PatKind::Inl, "v", reset1(inl(body)), xv("v")));
    case SimName::BurgeCps1:
      return reset1(
          letp(ExtTerm::PatKind::Inl, "v", app(body, lam("w", inl(xv("w")))), xv("v")));
    case SimName::BurgeCps2:
      return app(app(body, lam("v", lam("m", app(xv("m"), inl(xv("v")))))),
                 lam("w", letp(ExtTerm::PatKind::Inl, "u", xv("w"), xv("u"))));
  }
  return body;
}

// Each calling convention needs the succ primitive in its own image: CPS
// simulations apply functions to an argument and then to continuations, so
// the environment provides succ already converted.
enum class SuccImage { Direct, OneCont, TwoConts, DoubleBarrelled };

inline SuccImage sim_succ_image(SimName s) {
  switch (s) {
    case SimName::DsShift2:
    case SimName::DsC2:
    case SimName::DsRet:
    case SimName::FelleisenDs:
    case SimName::BurgeDs:
      return SuccImage::Direct;
    case SimName::Cps2:
    case SimName::BurgeCps2:
      return SuccImage::TwoConts;
    default:
      return SuccImage::OneCont;
  }
}

inline dc::XEnv sim_initial_env(SuccImage image) {
  dc::XEnv base = dc::ext_initial_env();
  switch (image) {
    case SuccImage::Direct:
      return base;
    case SuccImage::OneCont:
      // succ |-> \v. \k. k (succ v)
      return base.extend("succ", dc::xclo(base, "v",
                                          det::lam("k", det::app(det::xv("k"),
                                                                 det::app(det::xv("succ"),
                                                                          det::xv("v"))))));
    case SuccImage::TwoConts:
      // succ |-> \v. \c. \d. (c (succ v)) d
      return base.extend(
          "succ",
          dc::xclo(base, "v",
                   det::lam("c", det::lam("d", det::app(det::app(det::xv("c"),
                                                                 det::app(det::xv("succ"),
                                                                          det::xv("v"))),
                                                        det::xv("d"))))));
    case SuccImage::DoubleBarrelled:
      // succ |-> \v. \c. \h. c (succ v)
      return base.extend(
          "succ", dc::xclo(base, "v",
                           det::lam("c", det::lam("h", det::app(det::xv("c"),
                                                                det::app(det::xv("succ"),
                                                                         det::xv("v")))))));
  }
  return base;
}

inline RunResult run_simulation(SimName s, const TermPtr& p, std::uint64_t fuel,
                                dc::EvalOrder order = dc::EvalOrder::RightToLeft) {
  auto tr = translate(s, p);
  if (!tr.ok()) return {RunResult::Kind::Stuck, 0, StuckReason::JOutsideLambda, 0};
  return dc::ext_run_in(wrap_program(s, tr.value()), sim_initial_env(sim_succ_image(s)), fuel,
                        order);
}

// --- variants kept for equivalence tests -----------------------------------

// The call/cc flavor of the dynamically-bound-J direct-style simulation.
inline RunResult run_felleisen_ds_callcc(const TermPtr& p, std::uint64_t fuel) {
  if (!j_under_lambda_only(p)) return {RunResult::Kind::Stuck, 0, StuckReason::JOutsideLambda, 0};
  FreshNames fn(p);
  ExtPtr body = det::tr_felleisen_ds(p, fn, det::Level1Op::Callcc);
  return dc::ext_run(wrap_program(SimName::FelleisenDs, body), fuel);
}

// The reset-free flavor of the direct-style return-continuation simulation.
inline RunResult run_ds_ret_noreset(const TermPtr& p, std::uint64_t fuel) {
  FreshNames fn(p);
  ExtPtr body = det::tr_ds_ret(p, fn, false);
  return dc::ext_run(wrap_program(SimName::DsRet, body), fuel);
}

// The double-barrelled encoding obtained by expanding J into the eta-expanded
// application of the JI combinator, translated with the two-continuation
// clause table (the extra continuation of abstractions still in place).
inline ExtPtr tr_thielecke_ji(const TermPtr& t, FreshNames& fn);

namespace det {

inline ExtPtr tr_ji_table(const TermPtr& t, FreshNames& fn, bool is_ji_leaf) {
  using namespace det;
  if (is_ji_leaf) {
    std::string c = fn.fresh("c"), h = fn.fresh("h"), x = fn.fresh("v"), c2 = fn.fresh("c"),
                h2 = fn.fresh("h");
    return lam(c, lam(h, app(xv(c), lam(x, lam(c2, lam(h2, app(xv(h), xv(x))))))));
  }
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    std::string c = fn.fresh("c"), h = fn.fresh("h");
    return lam(c, lam(h, app(xv(c), ext::lit(l->value))));
  }
  if (auto* x = std::get_if<Term::Var>(&t->node)) {
    std::string c = fn.fresh("c"), h = fn.fresh("h");
    return lam(c, lam(h, app(xv(c), xv(x->name))));
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    std::string c = fn.fresh("c"), h = fn.fresh("h"), v1 = fn.fresh("v"), v0 = fn.fresh("v");
    return lam(c, lam(h, app(app(tr_ji_table(a->rand, fn, false),
                                 lam(v1, app(app(tr_ji_table(a->rator, fn, false),
                                                 lam(v0, app(app(app(xv(v0), xv(v1)), xv(c)),
                                                             xv(h)))),
                                             xv(h)))),
                             xv(h))));
  }
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    std::string c = fn.fresh("c"), h = fn.fresh("h"), c2 = fn.fresh("c"), h2 = fn.fresh("h");
    ExtPtr fun = lam(m->param,
                     lam(c2, lam(h2, app(app(tr_ji_table(m->body, fn, false), xv(c2)), xv(c2)))));
    return lam(c, lam(h, app(xv(c), fun)));
  }
  // J == (lam jc (lam jv (lam jw (jc (jv jw))))) (JI)
  fn.reserve("jc");
  fn.reserve("jv");
  fn.reserve("jw");
  TermPtr expansion_fn =
      landin::lam("jc", landin::lam("jv", landin::lam("jw", landin::app(landin::var("jc"),
                                                                        landin::app(landin::var("jv"),
                                                                                    landin::var("jw"))))));
  // translate the application (expansion_fn JI) with the same table
  std::string c = fn.fresh("c"), h = fn.fresh("h"), v1 = fn.fresh("v"), v0 = fn.fresh("v");
  return lam(c, lam(h, app(app(tr_ji_table(nullptr, fn, true),
                               lam(v1, app(app(tr_ji_table(expansion_fn, fn, false),
                                               lam(v0, app(app(app(xv(v0), xv(v1)), xv(c)),
                                                           xv(h)))),
                                           xv(h)))),
                           xv(h))));
}

}  // namespace det

inline ExtPtr tr_thielecke_ji(const TermPtr& t, FreshNames& fn) {
  return det::tr_ji_table(t, fn, false);
}

inline RunResult run_thielecke_ji(const TermPtr& p, std::uint64_t fuel) {
  FreshNames fn(p);
  ExtPtr body = tr_thielecke_ji(p, fn);
  ExtPtr wrapped = det::app(det::app(body, det::lam("v", det::xv("v"))),
                            det::lam("w", det::xv("w")));
  return dc::ext_run_in(wrapped, sim_initial_env(SuccImage::DoubleBarrelled), fuel);
}

// Pure-CPS images contain no control operators.
inline bool has_control_ops(const ExtPtr& t) {
  using E = ExtTerm;
  if (auto* m = std::get_if<E::Lam>(&t->node)) return has_control_ops(m->body);
  if (auto* a = std::get_if<E::App>(&t->node)) {
    return has_control_ops(a->rator) || has_control_ops(a->rand);
  }
  if (auto* pr = std::get_if<E::Pair>(&t->node)) {
    return has_control_ops(pr->left) || has_control_ops(pr->right);
  }
  if (auto* il = std::get_if<E::Inl>(&t->node)) return has_control_ops(il->body);
  if (auto* ir = std::get_if<E::Inr>(&t->node)) return has_control_ops(ir->body);
  if (auto* cs = std::get_if<E::Case>(&t->node)) {
    return has_control_ops(cs->scrutinee) || has_control_ops(cs->left_body) ||
           has_control_ops(cs->right_body);
  }
  if (auto* lp = std::get_if<E::LetP>(&t->node)) {
    return has_control_ops(lp->bound) || has_control_ops(lp->body);
  }
  return std::holds_alternative<E::Shift1>(t->node) || std::holds_alternative<E::Reset1>(t->node) ||
         std::holds_alternative<E::Shift2>(t->node) || std::holds_alternative<E::Reset2>(t->node) ||
         std::holds_alternative<E::Cop1>(t->node) || std::holds_alternative<E::Cop2>(t->node) ||
         std::holds_alternative<E::Callcc>(t->node);
}

// Free variables of an extended term (hygiene checks).
inline void ext_free_vars(const ExtPtr& t, std::set<std::string>& bound,
                          std::set<std::string>& free) {
  using E = ExtTerm;
  auto under = [&](const std::string& x, const ExtPtr& b) {
    bool fresh = bound.insert(x).second;
    ext_free_vars(b, bound, free);
    if (fresh) bound.erase(x);
  };
  if (auto* v = std::get_if<E::Var>(&t->node)) {
    if (!bound.count(v->name)) free.insert(v->name);
  } else if (auto* m = std::get_if<E::Lam>(&t->node)) {
    under(m->param, m->body);
  } else if (auto* a = std::get_if<E::App>(&t->node)) {
    ext_free_vars(a->rator, bound, free);
    ext_free_vars(a->rand, bound, free);
  } else if (auto* s = std::get_if<E::Shift1>(&t->node)) {
    under(s->binder, s->body);
  } else if (auto* r = std::get_if<E::Reset1>(&t->node)) {
    ext_free_vars(r->body, bound, free);
  } else if (auto* s2 = std::get_if<E::Shift2>(&t->node)) {
    under(s2->binder, s2->body);
  } else if (auto* r2 = std::get_if<E::Reset2>(&t->node)) {
    ext_free_vars(r2->body, bound, free);
  } else if (auto* c1 = std::get_if<E::Cop1>(&t->node)) {
    under(c1->binder, c1->body);
  } else if (auto* c2 = std::get_if<E::Cop2>(&t->node)) {
    under(c2->binder, c2->body);
  } else if (auto* cc = std::get_if<E::Callcc>(&t->node)) {
    ext_free_vars(cc->arg, bound, free);
  } else if (auto* pr = std::get_if<E::Pair>(&t->node)) {
    ext_free_vars(pr->left, bound, free);
    ext_free_vars(pr->right, bound, free);
  } else if (auto* il = std::get_if<E::Inl>(&t->node)) {
    ext_free_vars(il->body, bound, free);
  } else if (auto* ir = std::get_if<E::Inr>(&t->node)) {
    ext_free_vars(ir->body, bound, free);
  } else if (auto* cs = std::get_if<E::Case>(&t->node)) {
    ext_free_vars(cs->scrutinee, bound, free);
    under(cs->left_binder, cs->left_body);
    under(cs->right_binder, cs->right_body);
  } else if (auto* lp = std::get_if<E::LetP>(&t->node)) {
    ext_free_vars(lp->bound, bound, free);
    if (lp->pattern == E::PatKind::PairP) {
      bool f1 = bound.insert(lp->name).second;
      bool f2 = bound.insert(lp->name2).second;
      ext_free_vars(lp->body, bound, free);
      if (f2) bound.erase(lp->name2);
      if (f1) bound.erase(lp->name);
    } else {
      under(lp->name, lp->body);
    }
  }
}

inline std::set<std::string> ext_free_vars(const ExtPtr& t) {
  std::set<std::string> bound, free;
  ext_free_vars(t, bound, free);
  return free;
}

}  // namespace landin::sim
