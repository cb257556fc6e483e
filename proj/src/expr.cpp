#include "bsswb/expr.hpp"

#include <cctype>
#include <memory>

#include "bsswb/error.hpp"

namespace bsswb {

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Node {
  enum class Kind { Number, Symbol, Z, Neg, Add, Sub, Mul, Div, Pow } kind;
  BigInt number;
  unsigned symbol = 0;  // 1-based
  unsigned exponent = 0;
  std::unique_ptr<Node> lhs, rhs;
};
using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  Parser(std::string_view text, unsigned max_symbols, bool allow_z)
      : text_(text), max_symbols_(max_symbols), allow_z_(allow_z) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

  unsigned max_symbol_seen() const { return max_seen_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg, 1, static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(Node::Kind k, NodePtr l, NodePtr r) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  NodePtr expr() {
    NodePtr n = term();
    while (true) {
      if (accept('+'))
        n = binary(Node::Kind::Add, std::move(n), term());
      else if (accept('-'))
        n = binary(Node::Kind::Sub, std::move(n), term());
      else
        return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    while (true) {
      if (accept('*'))
        n = binary(Node::Kind::Mul, std::move(n), unary());
      else if (accept('/'))
        n = binary(Node::Kind::Div, std::move(n), unary());
      else
        return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Neg;
      n->lhs = unary();
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) {
      skip();
      std::string d = digits();
      if (d.empty()) fail("exponent must be a nonnegative integer");
      if (d.size() > 6) fail("exponent too large");
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Pow;
      n->exponent = static_cast<unsigned>(std::stoul(d));
      n->lhs = std::move(base);
      return n;
    }
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Number;
      n->number = BigInt(digits());
      return n;
    }
    if (c == 'T') {
      std::size_t at = pos_;
      ++pos_;
      std::string d = digits();
      if (d.empty() || d.size() > 6) {
        pos_ = at;
        fail("malformed symbol");
      }
      unsigned idx = static_cast<unsigned>(std::stoul(d));
      if (idx == 0 || idx > max_symbols_) {
        pos_ = at;
        fail("symbol T" + d + " is not declared");
      }
      max_seen_ = std::max(max_seen_, idx);
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Symbol;
      n->symbol = idx;
      return n;
    }
    if (c == 'Z' && allow_z_) {
      ++pos_;
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Z;
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  unsigned max_symbols_;
  bool allow_z_;
  unsigned max_seen_ = 0;
};

RatFunc evaluate(const Node& n, std::size_t zvar) {
  switch (n.kind) {
    case Node::Kind::Number: return RatFunc(Rat(n.number));
    case Node::Kind::Symbol: return RatFunc(MPoly::var(n.symbol - 1));
    case Node::Kind::Z: return RatFunc(MPoly::var(zvar));
    case Node::Kind::Neg: return -evaluate(*n.lhs, zvar);
    case Node::Kind::Add: return evaluate(*n.lhs, zvar) + evaluate(*n.rhs, zvar);
    case Node::Kind::Sub: return evaluate(*n.lhs, zvar) - evaluate(*n.rhs, zvar);
    case Node::Kind::Mul: return evaluate(*n.lhs, zvar) * evaluate(*n.rhs, zvar);
    case Node::Kind::Div: return evaluate(*n.lhs, zvar) / evaluate(*n.rhs, zvar);
    case Node::Kind::Pow: return evaluate(*n.lhs, zvar).pow(n.exponent);
  }
  return RatFunc();
}

std::vector<RatFunc> parse_z_polynomial(std::string_view text, unsigned max_symbols) {
  Parser p(text, max_symbols, true);
  NodePtr root = p.parse();
  std::size_t zvar = p.max_symbol_seen();
  RatFunc f = evaluate(*root, zvar);
  if (f.den().degree(zvar) > 0)
    throw Error(Errc::SyntaxError, "Z may not occur in a denominator");
  std::vector<RatFunc> coeffs;
  for (const auto& [e, c] : coefficients_in(f.num(), zvar)) {
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = RatFunc(c, f.den());
  }
  return coeffs;
}

FieldElem parse_alg(std::string_view body, unsigned max_symbols) {
  auto bar = split_top_level(body, '|');
  if (bar.size() > 2) throw Error(Errc::SyntaxError, "alg(...) takes at most one '|'");
  if (bar.size() == 2) {
    auto minpoly = parse_z_polynomial(bar[0], max_symbols);
    std::vector<RatFunc> base;
    for (auto part : split_top_level(bar[1], ',')) base.push_back(parse_ratfunc(part, max_symbols));
    return AlgElem::make(std::move(base), std::move(minpoly), std::nullopt);
  }
  auto parts = split_top_level(body, ',');
  if (parts.size() != 3)
    throw Error(Errc::SyntaxError, "alg(...) expects 'poly, a, b' or 'poly | base'");
  auto minpoly = parse_z_polynomial(parts[0], max_symbols);
  RatFunc a = parse_ratfunc(parts[1], 0);
  RatFunc b = parse_ratfunc(parts[2], 0);
  return AlgElem::make({}, std::move(minpoly), std::make_pair(a.constant_value(), b.constant_value()));
}

}  // namespace

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim_view(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim_view(text.substr(start)));
  return out;
}

RatFunc parse_ratfunc(std::string_view text, unsigned max_symbols) {
  Parser p(text, max_symbols, false);
  NodePtr root = p.parse();
  return evaluate(*root, 0);
}

FieldElem parse_field_elem(std::string_view text, unsigned max_symbols) {
  std::string_view t = trim_view(text);
  if (t.substr(0, 4) == "alg(") {
    if (t.back() != ')') throw Error(Errc::SyntaxError, "unterminated alg(...)");
    return parse_alg(t.substr(4, t.size() - 5), max_symbols);
  }
  return FieldElem(parse_ratfunc(t, max_symbols));
}

std::vector<FieldElem> parse_field_elem_list(std::string_view text, unsigned max_symbols) {
  std::string_view t = trim_view(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw Error(Errc::SyntaxError, "unterminated '['");
    t = trim_view(t.substr(1, t.size() - 2));
  }
  std::vector<FieldElem> out;
  if (t.empty()) return out;
  for (auto part : split_top_level(t, ',')) out.push_back(parse_field_elem(part, max_symbols));
  return out;
}

}  // namespace bsswb
