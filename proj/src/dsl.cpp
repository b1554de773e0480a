#include "grl/dsl.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "grl/error.hpp"

namespace grl {

namespace {

enum class Tok { ident, colon, comma, dot, lparen, rparen, lbrack, rbrack, equals, wedge, turnstile, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::colon: return "':'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrack: return "'['";
    case Tok::rbrack: return "']'";
    case Tok::equals: return "'='";
    case Tok::wedge: return "'/\\'";
    case Tok::turnstile: return "'|-'";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const auto l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\'')) ++j;
      out.push_back({Tok::ident, src.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "/\\") {
      out.push_back({Tok::wedge, two, l, cl});
      advance(2);
      continue;
    }
    if (two == "|-") {
      out.push_back({Tok::turnstile, two, l, cl});
      advance(2);
      continue;
    }
    Tok k;
    switch (c) {
      case ':': k = Tok::colon; break;
      case ',': k = Tok::comma; break;
      case '.': k = Tok::dot; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '[': k = Tok::lbrack; break;
      case ']': k = Tok::rbrack; break;
      case '=': k = Tok::equals; break;
      default: throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, Theory* th) : toks_(lex(src)), th_(th) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(const char* w) const { return at(Tok::ident) && peek().text == w; }

  Token expect(Tok k) {
    if (!at(k)) fail("expected " + describe(k) + ", found " + found());
    return toks_[pos_++];
  }
  void expect_word(const char* w) {
    if (!at_word(w)) fail(std::string("expected '") + w + "', found " + found());
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }
  std::string found() const { return at(Tok::end) ? "end of input" : "'" + peek().text + "'"; }

  Sort sort_ref() {
    auto t = expect(Tok::ident);
    Sort s(t.text);
    if (!th_->has_sort(s)) fail_at(t, "undeclared sort " + t.text);
    return s;
  }

  void theory() {
    expect_word("theory");
    th_->name = expect(Tok::ident).text;
    while (!at(Tok::end)) decl();
  }

  void decl() {
    auto t = peek();
    if (at_word("sort")) {
      ++pos_;
      auto n = expect(Tok::ident);
      if (th_->has_sort(Sort(n.text))) fail_at(n, "duplicate sort " + n.text);
      th_->add_sort(Sort(n.text));
    } else if (at_word("rel")) {
      ++pos_;
      auto n = expect(Tok::ident);
      if (th_->rels.contains(n.text)) fail_at(n, "duplicate relation symbol " + n.text);
      expect(Tok::colon);
      Context ar;
      // Arity sorts run until the next declaration keyword.
      while (at(Tok::ident) && !is_keyword(peek().text)) ar.push_back(sort_ref());
      if (ar.empty()) fail("relation " + n.text + " needs at least one sort");
      th_->add_rel(n.text, std::move(ar));
    } else if (at_word("axiom")) {
      ++pos_;
      Sequent s;
      s.name = expect(Tok::ident).text;
      expect(Tok::colon);
      binding_list(s.context, s.vars);
      s.lhs = formula(s.context, s.vars);
      expect(Tok::turnstile);
      s.rhs = formula(s.context, s.vars);
      th_->add_axiom(std::move(s));
    } else {
      fail_at(t, "expected 'sort', 'rel' or 'axiom', found " + found());
    }
  }

  static bool is_keyword(const std::string& w) { return w == "sort" || w == "rel" || w == "axiom"; }

  void binding_list(Context& ctx, std::vector<std::string>& names) {
    expect(Tok::lbrack);
    if (!at(Tok::rbrack)) {
      while (true) {
        auto n = expect(Tok::ident);
        for (const auto& m : names) {
          if (m == n.text) fail_at(n, "variable " + n.text + " bound twice in context");
        }
        expect(Tok::colon);
        ctx.push_back(sort_ref());
        names.push_back(n.text);
        if (!at(Tok::comma)) break;
        ++pos_;
      }
    }
    expect(Tok::rbrack);
  }

  // env[i] names level i; lookup picks the innermost binding.
  std::size_t var(const Token& t, const std::vector<std::string>& env) const {
    for (std::size_t i = env.size(); i-- > 0;) {
      if (env[i] == t.text) return i;
    }
    fail_at(t, "unbound variable " + t.text);
  }

  Formula formula(Context ctx, std::vector<std::string> env) {
    auto left = conjunct(ctx, env);
    if (at(Tok::wedge)) {
      ++pos_;
      return Formula::conj(left, formula(ctx, env));
    }
    return left;
  }

  Formula conjunct(Context& ctx, std::vector<std::string>& env) {
    if (at_word("true")) {
      ++pos_;
      return Formula::truth();
    }
    if (at_word("exists")) {
      ++pos_;
      auto n = expect(Tok::ident).text;
      expect(Tok::colon);
      auto s = sort_ref();
      expect(Tok::dot);
      auto c = ctx;
      auto e = env;
      c.push_back(s);
      e.push_back(n);
      return Formula::exists(s, formula(c, e));
    }
    if (at(Tok::lparen)) {
      ++pos_;
      auto f = formula(ctx, env);
      expect(Tok::rparen);
      return f;
    }
    auto head = expect(Tok::ident);
    if (at(Tok::equals)) {
      ++pos_;
      auto rhs = expect(Tok::ident);
      auto a = var(head, env), b = var(rhs, env);
      if (ctx[a] != ctx[b]) {
        fail_at(head, "equality between " + head.text + ":" + ctx[a].name + " and " + rhs.text + ":" + ctx[b].name);
      }
      return Formula::eq(a, b);
    }
    if (!at(Tok::lparen)) fail("expected '(' or '=' after " + head.text + ", found " + found());
    ++pos_;
    auto it = th_->rels.find(head.text);
    if (it == th_->rels.end()) fail_at(head, "unknown relation symbol " + head.text);
    std::vector<std::size_t> args;
    std::vector<Token> arg_toks;
    if (!at(Tok::rparen)) {
      while (true) {
        arg_toks.push_back(expect(Tok::ident));
        args.push_back(var(arg_toks.back(), env));
        if (!at(Tok::comma)) break;
        ++pos_;
      }
    }
    expect(Tok::rparen);
    const auto& ar = it->second;
    if (ar.size() != args.size()) {
      fail_at(head, head.text + " expects " + std::to_string(ar.size()) + " arguments, got " + std::to_string(args.size()));
    }
    for (std::size_t i = 0; i < ar.size(); ++i) {
      if (ctx[args[i]] != ar[i]) {
        fail_at(arg_toks[i], "argument " + arg_toks[i].text + " of " + head.text + " has sort " + ctx[args[i]].name +
                                 ", expected " + ar[i].name);
      }
    }
    return Formula::atom(head.text, std::move(args));
  }

  ScopedFormula scoped() {
    ScopedFormula sf;
    binding_list(sf.context, sf.names);
    sf.formula = formula(sf.context, sf.names);
    expect(Tok::end);
    return sf;
  }

  Formula bare(const Context& ctx, const std::vector<std::string>& names) {
    auto f = formula(ctx, names);
    expect(Tok::end);
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Theory* th_;
};

}  // namespace

Theory parse_theory(const std::string& text) {
  Theory th;
  Parser p(text, &th);
  p.theory();
  return th;
}

ScopedFormula parse_scoped_formula(const Theory& th, const std::string& text) {
  Theory copy = th;
  Parser p(text, &copy);
  return p.scoped();
}

Formula parse_formula(const Theory& th, const Context& ctx, const std::vector<std::string>& names,
                      const std::string& text) {
  if (ctx.size() != names.size()) throw ShapeError("parse_formula: context and names differ in length");
  Theory copy = th;
  Parser p(text, &copy);
  return p.bare(ctx, names);
}

std::string to_string(const ScopedFormula& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.context.size(); ++i) os << (i ? "," : "") << f.names[i] << ":" << f.context[i].name;
  os << "] " << to_string(f.formula, f.names);
  return os.str();
}

std::string to_source(const Theory& th) {
  std::ostringstream os;
  os << "theory " << th.name << "\n";
  for (const auto& s : th.sorts) os << "sort " << s.name << "\n";
  for (const auto& [r, ar] : th.rels) {
    os << "rel " << r << " :";
    for (const auto& s : ar) os << " " << s.name;
    os << "\n";
  }
  for (const auto& ax : th.axioms) {
    ScopedFormula l{ax.context, ax.vars, ax.lhs};
    os << "axiom " << ax.name << " : " << to_string(l) << " |- " << to_string(ax.rhs, ax.vars) << "\n";
  }
  return os.str();
}

}  // namespace grl
