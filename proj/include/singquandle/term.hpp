#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sq {

/// Immutable expression tree over generators and the four operations.
/// Copies share structure.
class Term {
 public:
  enum class Kind { generator, star, bar, r1, r2 };

  static Term generator(std::string name);
  static Term binary(Kind kind, Term left, Term right);
  static Term star(Term l, Term r) { return binary(Kind::star, std::move(l), std::move(r)); }
  static Term bar(Term l, Term r) { return binary(Kind::bar, std::move(l), std::move(r)); }
  static Term r1(Term l, Term r) { return binary(Kind::r1, std::move(l), std::move(r)); }
  static Term r2(Term l, Term r) { return binary(Kind::r2, std::move(l), std::move(r)); }

  Kind kind() const noexcept;
  /// Generator name; empty for operation nodes.
  const std::string& name() const noexcept;
  const Term& left() const;
  const Term& right() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar:
///   expr    := primary (('*' | '/') primary)*       left-associative
///   primary := ident | ('R1' | 'R2') '(' expr ',' expr ')' | '(' expr ')'
/// `/` stands for the inverse operation (bar-star). Throws SyntaxError, or
/// SyntaxError with kind UnknownOperator for unsupported operators.
Term parse_term(std::string_view text);

/// Minimal-parenthesis rendering; parse_term(render_term(t)) == t.
std::string render_term(const Term& t);

/// Distinct generator names in first-occurrence order.
std::vector<std::string> generators_of(const Term& t);

}  // namespace sq
