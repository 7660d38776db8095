#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "landin/util.hpp"

namespace landin {

// ---------------------------------------------------------------------------
// Abstract syntax
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  struct Lit {
    std::int64_t value;
  };
  struct Var {
    std::string name;
  };
  struct Lam {
    std::string param;
    TermPtr body;
  };
  struct App {
    TermPtr rator;
    TermPtr rand;
  };
  struct JOp {};

  std::variant<Lit, Var, Lam, App, JOp> node;
};

inline TermPtr lit(std::int64_t n) { return std::make_shared<Term>(Term{Term::Lit{n}}); }
inline TermPtr var(std::string x) { return std::make_shared<Term>(Term{Term::Var{std::move(x)}}); }
inline TermPtr lam(std::string x, TermPtr b) {
  return std::make_shared<Term>(Term{Term::Lam{std::move(x), std::move(b)}});
}
inline TermPtr app(TermPtr f, TermPtr a) {
  return std::make_shared<Term>(Term{Term::App{std::move(f), std::move(a)}});
}
inline TermPtr jop() { return std::make_shared<Term>(Term{Term::JOp{}}); }

inline bool term_equal(const Term& a, const Term& b);
inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return term_equal(*a, *b);
}

inline bool term_equal(const Term& a, const Term& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto* la = std::get_if<Term::Lit>(&a.node)) {
    return la->value == std::get<Term::Lit>(b.node).value;
  }
  if (auto* va = std::get_if<Term::Var>(&a.node)) {
    return va->name == std::get<Term::Var>(b.node).name;
  }
  if (auto* ma = std::get_if<Term::Lam>(&a.node)) {
    const auto& mb = std::get<Term::Lam>(b.node);
    return ma->param == mb.param && term_equal(ma->body, mb.body);
  }
  if (auto* pa = std::get_if<Term::App>(&a.node)) {
    const auto& pb = std::get<Term::App>(b.node);
    return term_equal(pa->rator, pb.rator) && term_equal(pa->rand, pb.rand);
  }
  return true;  // JOp
}

// Extended target language: the source language without the J constructor,
// plus delimited-control operators, pairs, sums, and destructuring let.
struct ExtTerm;
using ExtPtr = std::shared_ptr<const ExtTerm>;

struct ExtTerm {
  struct Lit {
    std::int64_t value;
  };
  struct Var {
    std::string name;
  };
  struct Lam {
    std::string param;
    ExtPtr body;
  };
  struct App {
    ExtPtr rator;
    ExtPtr rand;
  };
  struct Shift1 {
    std::string binder;
    ExtPtr body;
  };
  struct Reset1 {
    ExtPtr body;
  };
  struct Shift2 {
    std::string binder;
    ExtPtr body;
  };
  struct Reset2 {
    ExtPtr body;
  };
  struct Cop1 {  // jumpy C at level 1
    std::string binder;
    ExtPtr body;
  };
  struct Cop2 {  // jumpy C at level 2
    std::string binder;
    ExtPtr body;
  };
  struct Callcc {
    ExtPtr arg;
  };
  struct Pair {
    ExtPtr left;
    ExtPtr right;
  };
  struct Inl {
    ExtPtr body;
  };
  struct Inr {
    ExtPtr body;
  };
  struct Case {
    ExtPtr scrutinee;
    std::string left_binder;
    ExtPtr left_body;
    std::string right_binder;
    ExtPtr right_body;
  };
  enum class PatKind { Plain, Inl, Inr, PairP };
  struct LetP {
    PatKind pattern;
    std::string name;
    std::string name2;  // PairP only
    ExtPtr bound;
    ExtPtr body;
  };

  std::variant<Lit, Var, Lam, App, Shift1, Reset1, Shift2, Reset2, Cop1, Cop2, Callcc,
               Pair, Inl, Inr, Case, LetP>
      node;
};

namespace ext {
inline ExtPtr lit(std::int64_t n) { return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Lit{n}}); }
inline ExtPtr var(std::string x) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Var{std::move(x)}});
}
inline ExtPtr lam(std::string x, ExtPtr b) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Lam{std::move(x), std::move(b)}});
}
inline ExtPtr app(ExtPtr f, ExtPtr a) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::App{std::move(f), std::move(a)}});
}
inline ExtPtr shift1(std::string k, ExtPtr b) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Shift1{std::move(k), std::move(b)}});
}
inline ExtPtr reset1(ExtPtr b) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Reset1{std::move(b)}});
}
inline ExtPtr shift2(std::string k, ExtPtr b) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Shift2{std::move(k), std::move(b)}});
}
inline ExtPtr reset2(ExtPtr b) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Reset2{std::move(b)}});
}
inline ExtPtr cop1(std::string k, ExtPtr b) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Cop1{std::move(k), std::move(b)}});
}
inline ExtPtr cop2(std::string k, ExtPtr b) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Cop2{std::move(k), std::move(b)}});
}
inline ExtPtr callcc(ExtPtr t) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Callcc{std::move(t)}});
}
inline ExtPtr pair(ExtPtr l, ExtPtr r) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Pair{std::move(l), std::move(r)}});
}
inline ExtPtr inl(ExtPtr t) { return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Inl{std::move(t)}}); }
inline ExtPtr inr(ExtPtr t) { return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::Inr{std::move(t)}}); }
inline ExtPtr case_of(ExtPtr s, std::string lb, ExtPtr lbody, std::string rb, ExtPtr rbody) {
  return std::make_shared<ExtTerm>(ExtTerm{
      ExtTerm::Case{std::move(s), std::move(lb), std::move(lbody), std::move(rb), std::move(rbody)}});
}
inline ExtPtr letp(ExtTerm::PatKind k, std::string x, ExtPtr bound, ExtPtr body) {
  return std::make_shared<ExtTerm>(
      ExtTerm{ExtTerm::LetP{k, std::move(x), "", std::move(bound), std::move(body)}});
}
inline ExtPtr letpair(std::string x, std::string y, ExtPtr bound, ExtPtr body) {
  return std::make_shared<ExtTerm>(ExtTerm{ExtTerm::LetP{
      ExtTerm::PatKind::PairP, std::move(x), std::move(y), std::move(bound), std::move(body)}});
}
}  // namespace ext

inline bool ext_equal(const ExtPtr& a, const ExtPtr& b);

inline bool ext_equal(const ExtTerm& a, const ExtTerm& b) {
  if (a.node.index() != b.node.index()) return false;
  using E = ExtTerm;
  if (auto* x = std::get_if<E::Lit>(&a.node)) return x->value == std::get<E::Lit>(b.node).value;
  if (auto* x = std::get_if<E::Var>(&a.node)) return x->name == std::get<E::Var>(b.node).name;
  if (auto* x = std::get_if<E::Lam>(&a.node)) {
    const auto& y = std::get<E::Lam>(b.node);
    return x->param == y.param && ext_equal(x->body, y.body);
  }
  if (auto* x = std::get_if<E::App>(&a.node)) {
    const auto& y = std::get<E::App>(b.node);
    return ext_equal(x->rator, y.rator) && ext_equal(x->rand, y.rand);
  }
  if (auto* x = std::get_if<E::Shift1>(&a.node)) {
    const auto& y = std::get<E::Shift1>(b.node);
    return x->binder == y.binder && ext_equal(x->body, y.body);
  }
  if (auto* x = std::get_if<E::Reset1>(&a.node)) return ext_equal(x->body, std::get<E::Reset1>(b.node).body);
  if (auto* x = std::get_if<E::Shift2>(&a.node)) {
    const auto& y = std::get<E::Shift2>(b.node);
    return x->binder == y.binder && ext_equal(x->body, y.body);
  }
  if (auto* x = std::get_if<E::Reset2>(&a.node)) return ext_equal(x->body, std::get<E::Reset2>(b.node).body);
  if (auto* x = std::get_if<E::Cop1>(&a.node)) {
    const auto& y = std::get<E::Cop1>(b.node);
    return x->binder == y.binder && ext_equal(x->body, y.body);
  }
  if (auto* x = std::get_if<E::Cop2>(&a.node)) {
    const auto& y = std::get<E::Cop2>(b.node);
    return x->binder == y.binder && ext_equal(x->body, y.body);
  }
  if (auto* x = std::get_if<E::Callcc>(&a.node)) return ext_equal(x->arg, std::get<E::Callcc>(b.node).arg);
  if (auto* x = std::get_if<E::Pair>(&a.node)) {
    const auto& y = std::get<E::Pair>(b.node);
    return ext_equal(x->left, y.left) && ext_equal(x->right, y.right);
  }
  if (auto* x = std::get_if<E::Inl>(&a.node)) return ext_equal(x->body, std::get<E::Inl>(b.node).body);
  if (auto* x = std::get_if<E::Inr>(&a.node)) return ext_equal(x->body, std::get<E::Inr>(b.node).body);
  if (auto* x = std::get_if<E::Case>(&a.node)) {
    const auto& y = std::get<E::Case>(b.node);
    return ext_equal(x->scrutinee, y.scrutinee) && x->left_binder == y.left_binder &&
           ext_equal(x->left_body, y.left_body) && x->right_binder == y.right_binder &&
           ext_equal(x->right_body, y.right_body);
  }
  const auto& x = std::get<E::LetP>(a.node);
  const auto& y = std::get<E::LetP>(b.node);
  return x.pattern == y.pattern && x.name == y.name && x.name2 == y.name2 &&
         ext_equal(x.bound, y.bound) && ext_equal(x.body, y.body);
}

inline bool ext_equal(const ExtPtr& a, const ExtPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return ext_equal(*a, *b);
}

// ---------------------------------------------------------------------------
// Environments: persistent maps, most recent binding wins
// ---------------------------------------------------------------------------

template <typename V>
class Env {
  PList<std::pair<std::string, V>> items_;

 public:
  Env() = default;

  static Env empty() { return Env(); }

  Env extend(std::string name, V value) const {
    Env e;
    e.items_ = items_.cons({std::move(name), std::move(value)});
    return e;
  }

  std::optional<V> lookup(const std::string& name) const {
    for (auto it = items_; !it.empty(); it = it.tail()) {
      if (it.head().first == name) return it.head().second;
    }
    return std::nullopt;
  }

  bool same(const Env& other) const { return items_.identical(other.items_); }
};

// ---------------------------------------------------------------------------
// Concrete syntax
// ---------------------------------------------------------------------------

struct ParseError {
  std::size_t offset = 0;
  std::string message;
};

namespace detail {

struct Token {
  enum class Kind { LParen, RParen, Atom, End } kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
  const std::string& src_;
  std::size_t pos_ = 0;

 public:
  explicit Lexer(const std::string& s) : src_(s) {}

  Token next() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= src_.size()) return {Token::Kind::End, "", pos_};
    std::size_t start = pos_;
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::Kind::LParen, "(", start};
    }
    if (c == ')') {
      ++pos_;
      return {Token::Kind::RParen, ")", start};
    }
    while (pos_ < src_.size()) {
      char d = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      ++pos_;
    }
    return {Token::Kind::Atom, src_.substr(start, pos_ - start), start};
  }
};

inline bool is_integer_atom(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

inline const std::set<std::string>& term_reserved() {
  static const std::set<std::string> r{"lam", "let", "J"};
  return r;
}

inline const std::set<std::string>& ext_reserved() {
  static const std::set<std::string> r{"lam",  "let",    "shift1", "reset1", "shift2", "reset2",
                                       "C1",   "C2",     "callcc", "pair",   "inl",    "inr",
                                       "case"};
  return r;
}

inline const std::set<std::string>& ext_control_heads() {
  static const std::set<std::string> r{"shift1", "reset1", "shift2", "reset2",
                                       "C1",     "C2",     "callcc", "pair",
                                       "inl",    "inr",    "case"};
  return r;
}

template <typename T>
struct Parser {
  Lexer lex;
  Token look;
  bool ext_mode;
  std::optional<ParseError> err;

  Parser(const std::string& s, bool ext) : lex(s), look(lex.next()), ext_mode(ext) {}

  void advance() { look = lex.next(); }

  std::nullptr_t fail(std::size_t offset, std::string msg) {
    if (!err) err = ParseError{offset, std::move(msg)};
    return nullptr;
  }

  bool expect_rparen(const char* what) {
    if (look.kind != Token::Kind::RParen) {
      fail(look.offset, std::string("expected ')' to close ") + what);
      return false;
    }
    advance();
    return true;
  }

  std::optional<std::string> identifier(const char* what) {
    if (look.kind != Token::Kind::Atom || is_integer_atom(look.text)) {
      fail(look.offset, std::string("expected identifier for ") + what);
      return std::nullopt;
    }
    const auto& reserved = ext_mode ? ext_reserved() : term_reserved();
    if (reserved.count(look.text)) {
      fail(look.offset, "reserved word '" + look.text + "' cannot be used as identifier");
      return std::nullopt;
    }
    if (!ext_mode && look.text == "J") {
      fail(look.offset, "'J' cannot be bound");
      return std::nullopt;
    }
    std::string name = look.text;
    advance();
    return name;
  }
};

}  // namespace detail

inline Result<TermPtr> parse_term(const std::string& text);
inline Result<ExtPtr> parse_ext(const std::string& text);

namespace detail {

inline TermPtr parse_term_expr(Parser<TermPtr>& p) {
  using K = Token::Kind;
  if (p.look.kind == K::End) return p.fail(p.look.offset, "unexpected end of input");
  if (p.look.kind == K::RParen) return p.fail(p.look.offset, "unexpected ')'");
  if (p.look.kind == K::Atom) {
    Token t = p.look;
    p.advance();
    if (is_integer_atom(t.text)) return lit(std::stoll(t.text));
    if (t.text == "J") return jop();
    if (term_reserved().count(t.text))
      return p.fail(t.offset, "reserved word '" + t.text + "' is not a term");
    if (ext_control_heads().count(t.text))
      return p.fail(t.offset, "control form '" + t.text + "' rejected in pure-Term mode");
    return var(t.text);
  }
  // parenthesized form
  std::size_t open = p.look.offset;
  p.advance();
  if (p.look.kind == K::Atom && p.look.text == "lam") {
    p.advance();
    auto x = p.identifier("lam binder");
    if (!x) return nullptr;
    auto body = parse_term_expr(p);
    if (!body) return nullptr;
    if (!p.expect_rparen("lam")) return nullptr;
    return lam(*x, body);
  }
  if (p.look.kind == K::Atom && p.look.text == "let") {
    p.advance();
    auto x = p.identifier("let binder");
    if (!x) return nullptr;
    auto bound = parse_term_expr(p);
    if (!bound) return nullptr;
    auto body = parse_term_expr(p);
    if (!body) return nullptr;
    if (!p.expect_rparen("let")) return nullptr;
    return app(lam(*x, body), bound);  // let is sugar for a beta-redex
  }
  if (p.look.kind == K::Atom && ext_control_heads().count(p.look.text)) {
    return p.fail(p.look.offset, "control form '" + p.look.text + "' rejected in pure-Term mode");
  }
  auto f = parse_term_expr(p);
  if (!f) return nullptr;
  auto a = parse_term_expr(p);
  if (!a) return nullptr;
  if (p.look.kind != K::RParen) return p.fail(p.look.offset, "expected ')' to close application");
  p.advance();
  (void)open;
  return app(f, a);
}

inline ExtPtr parse_ext_expr(Parser<ExtPtr>& p) {
  using K = Token::Kind;
  using ext::app;
  using ext::callcc;
  using ext::case_of;
  using ext::cop1;
  using ext::cop2;
  using ext::inl;
  using ext::inr;
  using ext::lam;
  using ext::letp;
  using ext::pair;
  using ext::reset1;
  using ext::reset2;
  using ext::shift1;
  using ext::shift2;
  if (p.look.kind == K::End) return p.fail(p.look.offset, "unexpected end of input");
  if (p.look.kind == K::RParen) return p.fail(p.look.offset, "unexpected ')'");
  if (p.look.kind == K::Atom) {
    Token t = p.look;
    p.advance();
    if (is_integer_atom(t.text)) return ext::lit(std::stoll(t.text));
    if (ext_reserved().count(t.text))
      return p.fail(t.offset, "reserved word '" + t.text + "' is not a term");
    return ext::var(t.text);  // 'J' is an ordinary identifier here
  }
  p.advance();
  if (p.look.kind != K::Atom) {
    auto f = parse_ext_expr(p);
    if (!f) return nullptr;
    auto a = parse_ext_expr(p);
    if (!a) return nullptr;
    if (!p.expect_rparen("application")) return nullptr;
    return app(f, a);
  }
  Token head = p.look;
  auto binder_form = [&](auto make) -> ExtPtr {
    p.advance();
    auto x = p.identifier("binder");
    if (!x) return nullptr;
    auto body = parse_ext_expr(p);
    if (!body) return nullptr;
    if (!p.expect_rparen(head.text.c_str())) return nullptr;
    return make(*x, body);
  };
  auto unary_form = [&](auto make) -> ExtPtr {
    p.advance();
    auto body = parse_ext_expr(p);
    if (!body) return nullptr;
    if (!p.expect_rparen(head.text.c_str())) return nullptr;
    return make(body);
  };
  if (head.text == "lam") return binder_form([](std::string x, ExtPtr b) { return lam(x, b); });
  if (head.text == "shift1") return binder_form([](std::string x, ExtPtr b) { return shift1(x, b); });
  if (head.text == "shift2") return binder_form([](std::string x, ExtPtr b) { return shift2(x, b); });
  if (head.text == "C1") return binder_form([](std::string x, ExtPtr b) { return cop1(x, b); });
  if (head.text == "C2") return binder_form([](std::string x, ExtPtr b) { return cop2(x, b); });
  if (head.text == "reset1") return unary_form([](ExtPtr b) { return reset1(b); });
  if (head.text == "reset2") return unary_form([](ExtPtr b) { return reset2(b); });
  if (head.text == "callcc") return unary_form([](ExtPtr b) { return callcc(b); });
  if (head.text == "inl") return unary_form([](ExtPtr b) { return inl(b); });
  if (head.text == "inr") return unary_form([](ExtPtr b) { return inr(b); });
  if (head.text == "pair") {
    p.advance();
    auto l = parse_ext_expr(p);
    if (!l) return nullptr;
    auto r = parse_ext_expr(p);
    if (!r) return nullptr;
    if (!p.expect_rparen("pair")) return nullptr;
    return pair(l, r);
  }
  if (head.text == "case") {
    p.advance();
    auto scrut = parse_ext_expr(p);
    if (!scrut) return nullptr;
    auto branch = [&](const char* tag) -> std::optional<std::pair<std::string, ExtPtr>> {
      if (p.look.kind != K::LParen) {
        p.fail(p.look.offset, std::string("expected (") + tag + " x body) branch");
        return std::nullopt;
      }
      p.advance();
      if (p.look.kind != K::Atom || p.look.text != tag) {
        p.fail(p.look.offset, std::string("expected '") + tag + "' branch");
        return std::nullopt;
      }
      p.advance();
      auto x = p.identifier("case binder");
      if (!x) return std::nullopt;
      auto body = parse_ext_expr(p);
      if (!body) return std::nullopt;
      if (!p.expect_rparen("case branch")) return std::nullopt;
      return std::make_pair(*x, body);
    };
    auto l = branch("inl");
    if (!l) return nullptr;
    auto r = branch("inr");
    if (!r) return nullptr;
    if (!p.expect_rparen("case")) return nullptr;
    if (l->first == r->first) {
      return p.fail(head.offset, "case binders must be distinct");
    }
    return case_of(scrut, l->first, l->second, r->first, r->second);
  }
  if (head.text == "let") {
    p.advance();
    if (p.look.kind == K::LParen) {  // (let (inl x) t0 t1) destructuring form
      p.advance();
      if (p.look.kind != K::Atom ||
          (p.look.text != "inl" && p.look.text != "inr" && p.look.text != "pair")) {
        return p.fail(p.look.offset, "expected inl, inr, or pair pattern");
      }
      bool is_pair = p.look.text == "pair";
      ExtTerm::PatKind kind = p.look.text == "inl"  ? ExtTerm::PatKind::Inl
                              : p.look.text == "inr" ? ExtTerm::PatKind::Inr
                                                     : ExtTerm::PatKind::PairP;
      p.advance();
      auto x = p.identifier("let pattern");
      if (!x) return nullptr;
      std::optional<std::string> y;
      if (is_pair) {
        y = p.identifier("let pattern");
        if (!y) return nullptr;
      }
      if (!p.expect_rparen("let pattern")) return nullptr;
      auto bound = parse_ext_expr(p);
      if (!bound) return nullptr;
      auto body = parse_ext_expr(p);
      if (!body) return nullptr;
      if (!p.expect_rparen("let")) return nullptr;
      if (is_pair) return ext::letpair(*x, *y, bound, body);
      return letp(kind, *x, bound, body);
    }
    auto x = p.identifier("let binder");
    if (!x) return nullptr;
    auto bound = parse_ext_expr(p);
    if (!bound) return nullptr;
    auto body = parse_ext_expr(p);
    if (!body) return nullptr;
    if (!p.expect_rparen("let")) return nullptr;
    return app(lam(*x, body), bound);
  }
  // application whose operator is an atom
  auto f = parse_ext_expr(p);
  if (!f) return nullptr;
  auto a = parse_ext_expr(p);
  if (!a) return nullptr;
  if (!p.expect_rparen("application")) return nullptr;
  return app(f, a);
}

}  // namespace detail

inline Result<TermPtr> parse_term(const std::string& text) {
  detail::Parser<TermPtr> p(text, /*ext=*/false);
  auto t = detail::parse_term_expr(p);
  if (!t) {
    auto e = p.err.value_or(ParseError{0, "parse error"});
    return Result<TermPtr>::failure("parse error at byte " + std::to_string(e.offset) + ": " +
                                    e.message);
  }
  if (p.look.kind != detail::Token::Kind::End) {
    return Result<TermPtr>::failure("parse error at byte " + std::to_string(p.look.offset) +
                                    ": trailing input after term");
  }
  return Result<TermPtr>::success(t);
}

inline Result<ExtPtr> parse_ext(const std::string& text) {
  detail::Parser<ExtPtr> p(text, /*ext=*/true);
  auto t = detail::parse_ext_expr(p);
  if (!t) {
    auto e = p.err.value_or(ParseError{0, "parse error"});
    return Result<ExtPtr>::failure("parse error at byte " + std::to_string(e.offset) + ": " +
                                   e.message);
  }
  if (p.look.kind != detail::Token::Kind::End) {
    return Result<ExtPtr>::failure("parse error at byte " + std::to_string(p.look.offset) +
                                   ": trailing input after term");
  }
  return Result<ExtPtr>::success(t);
}

// ---------------------------------------------------------------------------
// Printing: parse(print(t)) is structurally t
// ---------------------------------------------------------------------------

inline void print_to(const TermPtr& t, std::string& out) {
  if (auto* l = std::get_if<Term::Lit>(&t->node)) {
    out += std::to_string(l->value);
  } else if (auto* v = std::get_if<Term::Var>(&t->node)) {
    out += v->name;
  } else if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    out += "(lam ";
    out += m->param;
    out += ' ';
    print_to(m->body, out);
    out += ')';
  } else if (auto* a = std::get_if<Term::App>(&t->node)) {
    out += '(';
    print_to(a->rator, out);
    out += ' ';
    print_to(a->rand, out);
    out += ')';
  } else {
    out += 'J';
  }
}

inline std::string print(const TermPtr& t) {
  std::string out;
  print_to(t, out);
  return out;
}

inline void print_to(const ExtPtr& t, std::string& out) {
  using E = ExtTerm;
  if (auto* l = std::get_if<E::Lit>(&t->node)) {
    out += std::to_string(l->value);
  } else if (auto* v = std::get_if<E::Var>(&t->node)) {
    out += v->name;
  } else if (auto* m = std::get_if<E::Lam>(&t->node)) {
    out += "(lam " + m->param + ' ';
    print_to(m->body, out);
    out += ')';
  } else if (auto* a = std::get_if<E::App>(&t->node)) {
    out += '(';
    print_to(a->rator, out);
    out += ' ';
    print_to(a->rand, out);
    out += ')';
  } else if (auto* s = std::get_if<E::Shift1>(&t->node)) {
    out += "(shift1 " + s->binder + ' ';
    print_to(s->body, out);
    out += ')';
  } else if (auto* r = std::get_if<E::Reset1>(&t->node)) {
    out += "(reset1 ";
    print_to(r->body, out);
    out += ')';
  } else if (auto* s2 = std::get_if<E::Shift2>(&t->node)) {
    out += "(shift2 " + s2->binder + ' ';
    print_to(s2->body, out);
    out += ')';
  } else if (auto* r2 = std::get_if<E::Reset2>(&t->node)) {
    out += "(reset2 ";
    print_to(r2->body, out);
    out += ')';
  } else if (auto* c1 = std::get_if<E::Cop1>(&t->node)) {
    out += "(C1 " + c1->binder + ' ';
    print_to(c1->body, out);
    out += ')';
  } else if (auto* c2 = std::get_if<E::Cop2>(&t->node)) {
    out += "(C2 " + c2->binder + ' ';
    print_to(c2->body, out);
    out += ')';
  } else if (auto* cc = std::get_if<E::Callcc>(&t->node)) {
    out += "(callcc ";
    print_to(cc->arg, out);
    out += ')';
  } else if (auto* pr = std::get_if<E::Pair>(&t->node)) {
    out += "(pair ";
    print_to(pr->left, out);
    out += ' ';
    print_to(pr->right, out);
    out += ')';
  } else if (auto* il = std::get_if<E::Inl>(&t->node)) {
    out += "(inl ";
    print_to(il->body, out);
    out += ')';
  } else if (auto* ir = std::get_if<E::Inr>(&t->node)) {
    out += "(inr ";
    print_to(ir->body, out);
    out += ')';
  } else if (auto* cs = std::get_if<E::Case>(&t->node)) {
    out += "(case ";
    print_to(cs->scrutinee, out);
    out += " (inl " + cs->left_binder + ' ';
    print_to(cs->left_body, out);
    out += ") (inr " + cs->right_binder + ' ';
    print_to(cs->right_body, out);
    out += "))";
  } else {
    const auto& lp = std::get<E::LetP>(t->node);
    out += "(let ";
    if (lp.pattern == E::PatKind::Plain) {
      out += lp.name;
    } else if (lp.pattern == E::PatKind::PairP) {
      out += "(pair " + lp.name + ' ' + lp.name2 + ')';
    } else {
      out += lp.pattern == E::PatKind::Inl ? "(inl " : "(inr ";
      out += lp.name;
      out += ')';
    }
    out += ' ';
    print_to(lp.bound, out);
    out += ' ';
    print_to(lp.body, out);
    out += ')';
  }
}

inline std::string print(const ExtPtr& t) {
  std::string out;
  print_to(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Program-level checks
// ---------------------------------------------------------------------------

inline void free_vars_into(const TermPtr& t, std::set<std::string>& bound,
                           std::set<std::string>& free) {
  if (auto* v = std::get_if<Term::Var>(&t->node)) {
    if (!bound.count(v->name)) free.insert(v->name);
  } else if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    bool fresh = bound.insert(m->param).second;
    free_vars_into(m->body, bound, free);
    if (fresh) bound.erase(m->param);
  } else if (auto* a = std::get_if<Term::App>(&t->node)) {
    free_vars_into(a->rator, bound, free);
    free_vars_into(a->rand, bound, free);
  }
}

inline std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, free;
  free_vars_into(t, bound, free);
  return free;
}

// A program is closed except for succ and never binds the identifier J.
inline bool binds_j(const TermPtr& t) {
  if (auto* m = std::get_if<Term::Lam>(&t->node)) {
    return m->param == "J" || binds_j(m->body);
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    return binds_j(a->rator) || binds_j(a->rand);
  }
  return false;
}

inline bool program_ok(const TermPtr& t) {
  if (binds_j(t)) return false;
  auto fv = free_vars(t);
  fv.erase("succ");
  return fv.empty();
}

inline bool contains_j(const TermPtr& t) {
  if (std::holds_alternative<Term::JOp>(t->node)) return true;
  if (auto* m = std::get_if<Term::Lam>(&t->node)) return contains_j(m->body);
  if (auto* a = std::get_if<Term::App>(&t->node)) return contains_j(a->rator) || contains_j(a->rand);
  return false;
}

inline bool j_under_lambda_only(const TermPtr& t, bool under = false) {
  if (std::holds_alternative<Term::JOp>(t->node)) return under;
  if (auto* m = std::get_if<Term::Lam>(&t->node)) return j_under_lambda_only(m->body, true);
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    return j_under_lambda_only(a->rator, under) && j_under_lambda_only(a->rand, under);
  }
  return true;
}

// Syntactic corpus class of a program.
enum class Subset { PureLambda = 0, JUnderLambda = 1, Unrestricted = 2 };

inline Subset classify(const TermPtr& t) {
  if (!contains_j(t)) return Subset::PureLambda;
  if (j_under_lambda_only(t)) return Subset::JUnderLambda;
  return Subset::Unrestricted;
}

inline const char* subset_name(Subset s) {
  switch (s) {
    case Subset::PureLambda: return "pure-lambda";
    case Subset::JUnderLambda: return "j-under-lambda";
    default: return "unrestricted";
  }
}

inline std::set<std::string> all_identifiers(const TermPtr& t) {
  std::set<std::string> ids;
  struct Walk {
    std::set<std::string>& ids;
    void operator()(const TermPtr& u) {
      if (auto* v = std::get_if<Term::Var>(&u->node)) {
        ids.insert(v->name);
      } else if (auto* m = std::get_if<Term::Lam>(&u->node)) {
        ids.insert(m->param);
        (*this)(m->body);
      } else if (auto* a = std::get_if<Term::App>(&u->node)) {
        (*this)(a->rator);
        (*this)(a->rand);
      }
    }
  } walk{ids};
  walk(t);
  return ids;
}

}  // namespace landin
