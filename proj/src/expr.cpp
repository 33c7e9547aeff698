#include "swl/expr.hpp"

#include <cctype>

#include "swl/error.hpp"

namespace swl {

struct Expr::Node {
  enum class Kind { number, variable, negate, binary, call } kind;
  Int value;
  std::string name;  // variable, call, or binary operator spelling
  std::vector<Expr> args;
};

namespace {

using Node = Expr::Node;

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw DomainError("division by zero in expression");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Expr make(Node::Kind k, std::string name, std::vector<Expr> args, Int v = 0) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->args = std::move(args);
  n->value = std::move(v);
  return Expr(n);
}

class Parser {
 public:
  explicit Parser(std::string_view t) : text_(t) {}

  Expr expression() { return logical_or(); }

  ClassExpr class_expr() {
    ClassExpr out;
    skip();
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    while (true) {
      out.terms.push_back(term(negative));
      skip();
      if (accept('+')) negative = false;
      else if (accept('-')) negative = true;
      else break;
    }
    return out;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view s) {
    skip();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  Expr logical_or() {
    Expr a = logical_and();
    while (accept("||")) a = Expr::binary('|', a, logical_and());
    return a;
  }
  Expr logical_and() {
    Expr a = comparison();
    while (accept("&&")) a = Expr::binary('&', a, comparison());
    return a;
  }
  Expr comparison() {
    Expr a = additive();
    while (true) {
      if (accept("<=")) a = Expr::binary('l', a, additive());
      else if (accept(">=")) a = Expr::binary('g', a, additive());
      else if (accept("==")) a = Expr::binary('=', a, additive());
      else if (accept("!=")) a = Expr::binary('!', a, additive());
      else if (accept('<')) a = Expr::binary('<', a, additive());
      else if (accept('>')) a = Expr::binary('>', a, additive());
      else return a;
    }
  }
  Expr additive() {
    Expr a = multiplicative();
    while (true) {
      if (accept('+')) a = Expr::binary('+', a, multiplicative());
      else if (accept('-')) a = Expr::binary('-', a, multiplicative());
      else return a;
    }
  }
  Expr multiplicative() {
    Expr a = unary();
    while (true) {
      if (accept('*')) a = Expr::binary('*', a, unary());
      else if (accept('/')) a = Expr::binary('/', a, unary());
      else return a;
    }
  }
  Expr unary() {
    if (accept('-')) return make(Node::Kind::negate, "-", {unary()});
    if (accept('+')) return unary();
    return power();
  }
  Expr power() {
    Expr base = atom();
    if (accept('^')) return Expr::binary('^', base, unary());
    return base;
  }
  Expr atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    if (c == '{') {
      ++pos_;
      Expr e = expression();
      expect('}');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::number(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      if (accept('(')) {
        std::vector<Expr> args;
        if (!accept(')')) {
          do args.push_back(expression());
          while (accept(','));
          expect(')');
        }
        return make(Node::Kind::call, name, std::move(args));
      }
      return make(Node::Kind::variable, name, {});
    }
    fail("expected a number, name or '('");
  }

  // Exponent after '^' in class notation: a signed literal or name, or a
  // bracketed expression.
  Expr exponent() {
    char c = peek();
    if (c == '{' || c == '(') return atom();
    bool neg = accept('-');
    Expr e;
    c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) e = Expr::number(integer());
    else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      e = make(Node::Kind::variable, identifier(), {});
    else fail("expected an exponent");
    return neg ? make(Node::Kind::negate, "-", {e}) : e;
  }

  bool starts_factor() {
    skip();
    auto rest = text_.substr(pos_);
    auto keyword = [&](std::string_view k) {
      if (rest.substr(0, k.size()) != k) return false;
      char nxt = rest.size() > k.size() ? rest[k.size()] : '\0';
      return nxt == '^' || nxt == '[' || std::isspace(static_cast<unsigned char>(nxt));
    };
    return keyword("Sym") || keyword("det") || keyword("e");
  }

  TermExpr term(bool negative) {
    TermExpr t;
    Expr coef = Expr::number(1);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coef = Expr::number(integer());
      accept('*');
    } else if (c == '{') {
      coef = atom();
      accept('*');
    }
    t.coef = negative ? make(Node::Kind::negate, "-", {coef}) : coef;
    while (starts_factor()) {
      FactorExpr f;
      std::string kw = identifier();
      f.is_det = kw != "Sym";
      if (accept('[')) {
        f.embedding = static_cast<int>(integer());
        expect(']');
      }
      expect('^');
      f.exponent = exponent();
      t.factors.push_back(std::move(f));
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::number(const Int& v) { return make(Node::Kind::number, "", {}, v); }

Expr Expr::binary(char op, Expr a, Expr b) {
  return make(Node::Kind::binary, std::string(1, op), {std::move(a), std::move(b)});
}

Int Expr::eval(const Env& env) const {
  if (!node_) throw DomainError("empty expression");
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::number:
      return n.value;
    case Node::Kind::variable: {
      auto it = env.find(n.name);
      if (it == env.end()) throw ParseError("unbound name '" + n.name + "'");
      return it->second;
    }
    case Node::Kind::negate:
      return -n.args[0].eval(env);
    case Node::Kind::call: {
      std::vector<Int> v;
      for (const auto& a : n.args) v.push_back(a.eval(env));
      auto need = [&](std::size_t k) {
        if (v.size() != k)
          throw ParseError(n.name + "() takes " + std::to_string(k) + " arguments");
      };
      if (n.name == "div") { need(2); return floor_div(v[0], v[1]); }
      if (n.name == "mod") { need(2); return v[0] - v[1] * floor_div(v[0], v[1]); }
      if (n.name == "ceil_div") { need(2); return -floor_div(-v[0], v[1]); }
      if (n.name == "min") { need(2); return std::min(v[0], v[1]); }
      if (n.name == "max") { need(2); return std::max(v[0], v[1]); }
      throw ParseError("unknown function '" + n.name + "'");
    }
    case Node::Kind::binary: {
      Int a = n.args[0].eval(env);
      Int b = n.args[1].eval(env);
      switch (n.name[0]) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0 || a % b != 0)
            throw DomainError("inexact division " + a.str() + " / " + b.str());
          return a / b;
        case '^':
          if (b < 0 || b > 4096) throw DomainError("exponent out of range in '^'");
          return ipow(a, static_cast<unsigned>(b));
        case '<': return a < b ? 1 : 0;
        case '>': return a > b ? 1 : 0;
        case 'l': return a <= b ? 1 : 0;
        case 'g': return a >= b ? 1 : 0;
        case '=': return a == b ? 1 : 0;
        case '!': return a != b ? 1 : 0;
        case '&': return (a != 0 && b != 0) ? 1 : 0;
        case '|': return (a != 0 || b != 0) ? 1 : 0;
        default: break;
      }
    }
  }
  throw DomainError("malformed expression");
}

Expr parse_expr(std::string_view text) {
  Parser ps(text);
  Expr e = ps.expression();
  ps.finish();
  return e;
}

Int eval_expr(std::string_view text, const Env& env) {
  return parse_expr(text).eval(env);
}

ClassExpr ClassExpr::with_bumped_coefficient(std::size_t i, long long delta) const {
  if (i >= terms.size()) throw DomainError("term index out of range");
  ClassExpr out = *this;
  out.terms[i].coef = Expr::binary('+', out.terms[i].coef, Expr::number(delta));
  return out;
}

ClassExpr parse_class(std::string_view text) {
  Parser ps(text);
  ClassExpr c = ps.class_expr();
  ps.finish();
  return c;
}

SymbolicClass eval_class(const ClassExpr& c, const PlaceStructure& s,
                         const Env& env) {
  SymbolicClass out(s);
  const auto total = static_cast<std::size_t>(s.total_degree());
  for (const auto& t : c.terms) {
    Int coef = t.coef.eval(env);
    if (coef == 0) continue;
    std::vector<Int> D(static_cast<std::size_t>(s.place_count()), Int(0));
    std::vector<std::int64_t> n(total, 0);
    std::vector<bool> seen(total, false);
    for (const auto& f : t.factors) {
      int emb = f.embedding;
      if (emb < 0) {
        if (f.is_det ? s.place_count() != 1 : total != 1)
          throw ParseError("unindexed det/e/Sym needs a single place (and a "
                           "single embedding for Sym); use det[i] / Sym[i]");
        emb = 0;
      }
      if (emb >= s.total_degree())
        throw ParseError("embedding index " + std::to_string(emb) + " out of range");
      Int x = f.exponent.eval(env);
      auto v = static_cast<std::size_t>(s.place_of(emb));
      if (f.is_det) {
        D[v] += x * ipow(Int(s.p()), static_cast<unsigned>(s.local_index(emb)));
      } else {
        auto e = static_cast<std::size_t>(emb);
        if (seen[e]) throw ParseError("repeated Sym factor at one embedding");
        if (x > Int(std::int64_t{1} << 40) || x < -Int(std::int64_t{1} << 40))
          throw DomainError("Sym degree out of range");
        seen[e] = true;
        n[e] = static_cast<std::int64_t>(x);
      }
    }
    if (coef > Int(std::int64_t{1} << 40) || coef < -Int(std::int64_t{1} << 40))
      throw DomainError("coefficient out of range");
    SymbolTerm term;
    term.coef = static_cast<long long>(coef);
    for (int v = 0; v < s.place_count(); ++v) {
      PlaceSymbol ps;
      ps.D = D[static_cast<std::size_t>(v)];
      for (int i = 0; i < s.degree(v); ++i)
        ps.n.push_back(n[static_cast<std::size_t>(s.offset(v) + i)]);
      term.places.push_back(std::move(ps));
    }
    out.add_term(std::move(term));
  }
  return out;
}

SymbolicClass parse_symbolic(std::string_view text, const PlaceStructure& s,
                             const Env& extra) {
  Env env = extra;
  env["p"] = s.p();
  return eval_class(parse_class(text), s, env);
}

}  // namespace swl
