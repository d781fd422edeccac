#include "wheelgebra/expr.hpp"

#include <cctype>
#include <stdexcept>

#include "wheelgebra/cyclic.hpp"

namespace wg {

namespace {

struct Token {
  enum class Kind { Rational, Name, Plus, Minus, Star, Hash, LParen, RParen, LBracket,
                    RBracket, DD, Mul, End };
  Kind kind;
  Rational value;
  std::string text;
  int column;
};

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& str) : s(str) {}

  Token next() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    int col = static_cast<int>(pos) + 1;
    if (pos >= s.size()) return {Token::Kind::End, 0, "", col};
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      Integer num(s.substr(start, pos - start));
      Integer den = 1;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (dstart == pos) throw ParseError("expected denominator", static_cast<int>(pos) + 1);
        den = Integer(s.substr(dstart, pos - dstart));
      }
      return {Token::Kind::Rational, Rational(num, den), "", col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      // a star directly attached to an identifier is part of a reversed name
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        name += '*';
      }
      if (name == "dd" && pos < s.size() && s[pos] == '(') return {Token::Kind::DD, 0, name, col};
      if (name == "mul" && pos < s.size() && s[pos] == '(')
        return {Token::Kind::Mul, 0, name, col};
      return {Token::Kind::Name, 0, name, col};
    }
    ++pos;
    switch (c) {
      case '+': return {Token::Kind::Plus, 0, "+", col};
      case '-': return {Token::Kind::Minus, 0, "-", col};
      case '*': return {Token::Kind::Star, 0, "*", col};
      case '#': return {Token::Kind::Hash, 0, "#", col};
      case '(': return {Token::Kind::LParen, 0, "(", col};
      case ')': return {Token::Kind::RParen, 0, ")", col};
      case '[': return {Token::Kind::LBracket, 0, "[", col};
      case ']': return {Token::Kind::RBracket, 0, "]", col};
      default: throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t idx = 0;

  explicit Parser(const std::string& text) {
    Lexer lex(text);
    while (true) {
      Token t = lex.next();
      toks.push_back(t);
      if (t.kind == Token::Kind::End) break;
    }
  }

  const Token& peek() const { return toks[idx]; }
  Token eat() { return toks[idx++]; }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().column);
    ++idx;
  }

  ExprPtr make(Expr::Kind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
  }

  ExprPtr parse_sum() {
    auto first = parse_tensor();
    if (peek().kind != Token::Kind::Plus && peek().kind != Token::Kind::Minus) return first;
    auto sum = make(Expr::Kind::Sum);
    sum->args.push_back(first);
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      bool minus = eat().kind == Token::Kind::Minus;
      auto term = parse_tensor();
      if (minus) {
        auto neg = make(Expr::Kind::Neg);
        neg->args.push_back(term);
        term = neg;
      }
      sum->args.push_back(term);
    }
    return sum;
  }

  ExprPtr parse_tensor() {
    auto first = parse_product();
    if (peek().kind != Token::Kind::Hash) return first;
    auto t = make(Expr::Kind::Tensor);
    t->args.push_back(first);
    while (peek().kind == Token::Kind::Hash) {
      eat();
      t->args.push_back(parse_product());
    }
    return t;
  }

  ExprPtr parse_product() {
    auto first = parse_atom();
    if (peek().kind != Token::Kind::Star) return first;
    auto p = make(Expr::Kind::Product);
    p->args.push_back(first);
    while (peek().kind == Token::Kind::Star) {
      eat();
      p->args.push_back(parse_atom());
    }
    return p;
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Rational: {
        auto e = make(Expr::Kind::Rational);
        e->value = eat().value;
        return e;
      }
      case Token::Kind::Minus: {
        eat();
        auto inner = parse_atom();
        auto neg = make(Expr::Kind::Neg);
        neg->args.push_back(inner);
        return neg;
      }
      case Token::Kind::Name: {
        auto e = make(Expr::Kind::Name);
        e->name = eat().text;
        return e;
      }
      case Token::Kind::LParen: {
        eat();
        auto inner = parse_sum();
        expect(Token::Kind::RParen, "')'");
        return inner;
      }
      case Token::Kind::LBracket: {
        eat();
        auto e = make(Expr::Kind::Cyclic);
        e->args.push_back(parse_sum());
        expect(Token::Kind::RBracket, "']'");
        return e;
      }
      case Token::Kind::DD: {
        eat();
        expect(Token::Kind::LParen, "'('");
        auto e = make(Expr::Kind::DD);
        e->args.push_back(parse_sum());
        expect(Token::Kind::RParen, "')'");
        return e;
      }
      case Token::Kind::Mul: {
        eat();
        expect(Token::Kind::LParen, "'('");
        auto e = make(Expr::Kind::Mul);
        e->args.push_back(parse_sum());
        expect(Token::Kind::RParen, "')'");
        return e;
      }
      default:
        throw ParseError("expected an expression", t.column);
    }
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  Parser p(text);
  auto e = p.parse_sum();
  if (p.peek().kind != Token::Kind::End)
    throw ParseError("unexpected trailing input", p.peek().column);
  return e;
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Rational: return rat_str(e.value);
    case Expr::Kind::Name: return e.name;
    case Expr::Kind::Neg: return "- " + print_expr(*e.args[0]);
    case Expr::Kind::Cyclic: return "[" + print_expr(*e.args[0]) + "]";
    case Expr::Kind::DD: return "dd(" + print_expr(*e.args[0]) + ")";
    case Expr::Kind::Mul: return "mul(" + print_expr(*e.args[0]) + ")";
    case Expr::Kind::Sum: {
      std::string out;
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += " + ";
        out += print_expr(*e.args[i]);
      }
      return out;
    }
    case Expr::Kind::Product:
    case Expr::Kind::Tensor: {
      const char* sep = e.kind == Expr::Kind::Product ? " * " : " # ";
      std::string out;
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += sep;
        std::string piece = print_expr(*e.args[i]);
        bool atomic = e.args[i]->kind == Expr::Kind::Rational ||
                      e.args[i]->kind == Expr::Kind::Name ||
                      e.args[i]->kind == Expr::Kind::Cyclic ||
                      e.args[i]->kind == Expr::Kind::DD ||
                      e.args[i]->kind == Expr::Kind::Mul;
        out += atomic ? piece : "(" + piece + ")";
      }
      return out;
    }
  }
  return "";
}

namespace {

WheelElement name_element(const Quiver& q, const std::string& name) {
  if (auto a = q.arrow_id(name)) return WheelElement::from_path(q, Path::of(q, {*a}));
  if (name.size() > 2 && name.rfind("e_", 0) == 0) {
    if (auto v = q.vertex_id(name.substr(2)))
      return WheelElement::from_path(q, Path::trivial(*v));
  }
  throw std::invalid_argument("unknown name: " + name);
}

WheelElement to_f1_word(const Quiver& q, const WheelElement& u, const char* what) {
  for (const auto& [k, c] : u.terms())
    if (k.degree() != 1 || !k.cycs.empty())
      throw std::invalid_argument(std::string(what) + ": expected a sum of words");
  return u;
}

}  // namespace

EvalResult eval_expr(const Quiver& q, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Rational:
      return {WheelElement::unit(q).scaled(e.value)};
    case Expr::Kind::Name:
      return {name_element(q, e.name)};
    case Expr::Kind::Neg: {
      auto r = eval_expr(q, *e.args[0]);
      if (r.is_op()) return {r.op().scaled(-1)};
      return {r.element().scaled(-1)};
    }
    case Expr::Kind::Cyclic: {
      auto r = eval_expr(q, *e.args[0]);
      WheelElement w = to_f1_word(q, r.element(), "[...]");
      WheelElement out(&q);
      for (const auto& [k, c] : w.terms()) {
        if (!k.word[0].closed(q))
          throw std::invalid_argument("[...]: the word is not closed");
        auto [cw, s] = cyclic_normalize(q, k.word[0]);
        if (s == 0) continue;
        out += WheelElement::from_cyclic(q, cw, c * s);
      }
      return {out};
    }
    case Expr::Kind::DD: {
      auto r = eval_expr(q, *e.args[0]);
      WheelElement w = to_f1_word(q, r.element(), "dd(...)");
      WheeledDiffOp op(&q);
      for (const auto& [k, c] : w.terms())
        op += WheeledDiffOp::annihilator(q, k.word[0]).scaled(c);
      return {op};
    }
    case Expr::Kind::Mul: {
      auto r = eval_expr(q, *e.args[0]);
      return {WheeledDiffOp::multiplier(r.element())};
    }
    case Expr::Kind::Sum: {
      bool any_op = false;
      for (const auto& a : e.args) {
        auto r = eval_expr(q, *a);
        if (r.is_op()) any_op = true;
      }
      if (any_op) {
        WheeledDiffOp out(&q);
        for (const auto& a : e.args) {
          auto r = eval_expr(q, *a);
          out += r.is_op() ? r.op() : WheeledDiffOp::multiplier(r.element());
        }
        return {out};
      }
      WheelElement out(&q);
      for (const auto& a : e.args) out += eval_expr(q, *a).element();
      return {out};
    }
    case Expr::Kind::Product: {
      // operator composition when any factor is an operator, otherwise the
      // path-algebra product on words (scalars act as scalars)
      std::vector<EvalResult> rs;
      bool any_op = false;
      for (const auto& a : e.args) {
        rs.push_back(eval_expr(q, *a));
        if (rs.back().is_op()) any_op = true;
      }
      if (any_op) {
        WheeledDiffOp out = WheeledDiffOp::identity(q);
        for (auto& r : rs)
          out = out.compose(r.is_op() ? r.op() : WheeledDiffOp::multiplier(r.element()));
        return {out};
      }
      WheelElement out = WheelElement::unit(q);
      for (auto& r : rs) {
        const WheelElement& v = r.element();
        int du = out.mixed_degree() ? -2 : out.homogeneous_degree();
        int dv = v.mixed_degree() ? -2 : v.homogeneous_degree();
        if (du <= 0 || dv <= 0) {
          // scalar or degree-zero factors multiply freely
          out = wheel_product(out, v);
        } else if (du == 1 && dv == 1) {
          out = contract(wheel_product(out, v), 1, 2);  // path product
        } else {
          throw std::invalid_argument("'*' needs scalars or words; use '#' for tensors");
        }
      }
      return {out};
    }
    case Expr::Kind::Tensor: {
      WheelElement out = WheelElement::unit(q);
      for (const auto& a : e.args) out = wheel_product(out, eval_expr(q, *a).element());
      return {out};
    }
  }
  throw std::logic_error("eval_expr: unhandled node");
}

WheelElement eval_element(const Quiver& q, const std::string& text) {
  auto r = eval_expr(q, *parse_expr(text));
  if (r.is_op()) throw std::invalid_argument("expected an element, got an operator");
  return r.element();
}

WheeledDiffOp eval_operator(const Quiver& q, const std::string& text) {
  auto r = eval_expr(q, *parse_expr(text));
  if (r.is_op()) return r.op();
  return WheeledDiffOp::multiplier(r.element());
}

}  // namespace wg
