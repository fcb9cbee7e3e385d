#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "bihom/field.hpp"

namespace bihom {

using Environment = std::map<std::string, FieldElement, std::less<>>;

/// Arithmetic and boolean expressions over field elements, used for
/// parametric catalog data and table guards.
///
/// Grammar, loosest binding first:
///   or  := and ("||" and)*
///   and := cmp ("&&" cmp)*
///   cmp := sum (("==" | "!=" | "<" | "<=" | ">" | ">=") sum)?
///   sum := prod (("+" | "-") prod)*
///   prod := unary (("*" | "/") unary)*
///   unary := ("-" | "!") unary | pow
///   pow := atom ("^" unary)?
///   atom := integer | identifier | "(" or ")"
/// Booleans evaluate to 1 or 0. Exponents must evaluate to integers.
/// Ordering comparisons need rational operands.
class Expression {
 public:
  /// Throws parse_error with the offending column.
  static Expression parse(std::string_view text);

  /// Integer literals are mapped into `field`; identifiers must be bound.
  FieldElement evaluate(const Environment& env, Field field) const;
  bool holds(const Environment& env, Field field) const;
  const std::string& text() const { return text_; }
  std::set<std::string> identifiers() const;

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace bihom
