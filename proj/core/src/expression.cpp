#include "bihom/expression.hpp"

#include <cctype>
#include <vector>

#include "bihom/errors.hpp"

namespace bihom {

struct Expression::Node {
  enum class Kind { number, identifier, unary, binary };
  Kind kind;
  std::string token;  // literal digits, identifier name, or operator
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind kind, std::string token, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  return std::make_shared<const Expression::Node>(
      Expression::Node{kind, std::move(token), std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr node = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("expression '" + std::string(text_) + "' column " +
                      std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view op) {
    skip_space();
    if (text_.substr(pos_, op.size()) != op) return false;
    // Keep "<" from swallowing the first half of "<=" and similar.
    if (op.size() == 1 && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=' &&
        (op == "<" || op == ">" || op == "!")) {
      return false;
    }
    pos_ += op.size();
    return true;
  }

  NodePtr parse_or() {
    NodePtr node = parse_and();
    while (accept("||")) node = make(Kind::binary, "||", node, parse_and());
    return node;
  }

  NodePtr parse_and() {
    NodePtr node = parse_cmp();
    while (accept("&&")) node = make(Kind::binary, "&&", node, parse_cmp());
    return node;
  }

  NodePtr parse_cmp() {
    NodePtr node = parse_sum();
    for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
      if (accept(op)) return make(Kind::binary, op, node, parse_sum());
    }
    return node;
  }

  NodePtr parse_sum() {
    NodePtr node = parse_prod();
    for (;;) {
      if (accept("+")) {
        node = make(Kind::binary, "+", node, parse_prod());
      } else if (accept("-")) {
        node = make(Kind::binary, "-", node, parse_prod());
      } else {
        return node;
      }
    }
  }

  NodePtr parse_prod() {
    NodePtr node = parse_unary();
    for (;;) {
      if (accept("*")) {
        node = make(Kind::binary, "*", node, parse_unary());
      } else if (accept("/")) {
        node = make(Kind::binary, "/", node, parse_unary());
      } else {
        return node;
      }
    }
  }

  NodePtr parse_unary() {
    if (accept("-")) return make(Kind::unary, "-", parse_unary());
    if (accept("!")) return make(Kind::unary, "!", parse_unary());
    return parse_pow();
  }

  NodePtr parse_pow() {
    NodePtr base = parse_atom();
    if (accept("^")) return make(Kind::binary, "^", base, parse_unary());
    return base;
  }

  NodePtr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept("(")) {
      NodePtr inner = parse_or();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return make(Kind::number, std::string(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      return make(Kind::identifier, std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

FieldElement truth(bool b, Field field) { return FieldElement::integer(b ? 1 : 0, field); }

FieldElement eval(const Expression::Node& node, const Environment& env, Field field) {
  switch (node.kind) {
    case Kind::number:
      return FieldElement::parse(node.token, field);
    case Kind::identifier: {
      auto it = env.find(node.token);
      if (it == env.end()) throw precondition_error("unbound symbol '" + node.token + "'");
      return it->second.to_field(field);
    }
    case Kind::unary: {
      const FieldElement v = eval(*node.lhs, env, field);
      return node.token == "-" ? -v : truth(v.is_zero(), field);
    }
    case Kind::binary:
      break;
  }
  const std::string& op = node.token;
  if (op == "&&") {
    return truth(!eval(*node.lhs, env, field).is_zero() && !eval(*node.rhs, env, field).is_zero(),
                 field);
  }
  if (op == "||") {
    return truth(!eval(*node.lhs, env, field).is_zero() || !eval(*node.rhs, env, field).is_zero(),
                 field);
  }
  const FieldElement a = eval(*node.lhs, env, field);
  const FieldElement b = eval(*node.rhs, env, field);
  if (op == "+") return a + b;
  if (op == "-") return a - b;
  if (op == "*") return a * b;
  if (op == "/") return a / b;
  if (op == "^") {
    const auto e = b.to_integer();
    if (!e) throw precondition_error("exponent " + b.to_string() + " is not an integer");
    return a.pow(*e);
  }
  if (op == "==") return truth(a == b, field);
  if (op == "!=") return truth(a != b, field);
  const auto order = a.compare(b);
  if (op == "<") return truth(order < 0, field);
  if (op == "<=") return truth(order <= 0, field);
  if (op == ">") return truth(order > 0, field);
  return truth(order >= 0, field);
}

void collect(const Expression::Node& node, std::set<std::string>& out) {
  if (node.kind == Kind::identifier) out.insert(node.token);
  if (node.lhs) collect(*node.lhs, out);
  if (node.rhs) collect(*node.rhs, out);
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(e.text_).parse_all();
  return e;
}

FieldElement Expression::evaluate(const Environment& env, Field field) const {
  return eval(*root_, env, field);
}

bool Expression::holds(const Environment& env, Field field) const {
  return !evaluate(env, field).is_zero();
}

std::set<std::string> Expression::identifiers() const {
  std::set<std::string> out;
  collect(*root_, out);
  return out;
}

}  // namespace bihom
