#include "singquandle/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>

#include "singquandle/error.hpp"

namespace sq {

struct Term::Node {
  Kind kind;
  std::string name;
  std::optional<Term> left;
  std::optional<Term> right;
};

Term Term::generator(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::generator, std::move(name), {}, {}}));
}

Term Term::binary(Kind kind, Term left, Term right) {
  if (kind == Kind::generator) throw std::logic_error("binary() needs an operation kind");
  return Term(std::make_shared<const Node>(Node{kind, {}, std::move(left), std::move(right)}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }

const Term& Term::left() const {
  if (!node_->left) throw std::logic_error("generator has no operands");
  return *node_->left;
}

const Term& Term::right() const {
  if (!node_->right) throw std::logic_error("generator has no operands");
  return *node_->right;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Term::Kind::generator) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = expr();
    skip_space();
    if (!at_end()) unexpected({"'*'", "'/'", "end of input"});
    return t;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    if (at_end()) {
      throw SyntaxError(ErrorKind::syntax_error, "unexpected end of input", pos_,
                        std::move(expected));
    }
    const char c = peek();
    if (std::string_view("+-^%&|\\.!<>~").find(c) != std::string_view::npos) {
      throw SyntaxError(ErrorKind::unknown_operator, std::string("unknown operator '") + c + "'",
                        pos_, {"'*'", "'/'", "R1(...)", "R2(...)"});
    }
    throw SyntaxError(ErrorKind::syntax_error, std::string("unexpected '") + c + "'", pos_,
                      std::move(expected));
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) unexpected({std::string("'") + c + "'"});
    ++pos_;
  }

  Term expr() {
    Term t = primary();
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') return t;
      ++pos_;
      Term rhs = primary();
      t = Term::binary(c == '*' ? Term::Kind::star : Term::Kind::bar, std::move(t),
                       std::move(rhs));
    }
  }

  Term primary() {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      Term t = expr();
      expect(')');
      return t;
    }
    if (!ident_start(peek())) unexpected({"generator", "R1(", "R2(", "'('"});
    const std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    const std::size_t after_name = pos_;
    skip_space();
    if (peek() != '(') {
      pos_ = after_name;
      return Term::generator(std::move(name));
    }
    Term::Kind kind;
    if (name == "R1") {
      kind = Term::Kind::r1;
    } else if (name == "R2") {
      kind = Term::Kind::r2;
    } else {
      throw SyntaxError(ErrorKind::unknown_operator, "unknown operator '" + name + "'", start,
                        {"R1", "R2"});
    }
    ++pos_;
    Term l = expr();
    expect(',');
    Term r = expr();
    expect(')');
    return Term::binary(kind, std::move(l), std::move(r));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_infix(Term::Kind k) { return k == Term::Kind::star || k == Term::Kind::bar; }

void render_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::generator:
      out += t.name();
      return;
    case Term::Kind::r1:
    case Term::Kind::r2:
      out += t.kind() == Term::Kind::r1 ? "R1(" : "R2(";
      render_into(t.left(), out);
      out += ',';
      render_into(t.right(), out);
      out += ')';
      return;
    case Term::Kind::star:
    case Term::Kind::bar:
      render_into(t.left(), out);
      out += t.kind() == Term::Kind::star ? '*' : '/';
      if (is_infix(t.right().kind())) {
        out += '(';
        render_into(t.right(), out);
        out += ')';
      } else {
        render_into(t.right(), out);
      }
      return;
  }
}

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string render_term(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

std::vector<std::string> generators_of(const Term& t) {
  std::vector<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.kind() == Term::Kind::generator) {
      if (std::find(out.begin(), out.end(), u.name()) == out.end()) out.push_back(u.name());
      return;
    }
    walk(u.left());
    walk(u.right());
  };
  walk(t);
  return out;
}

}  // namespace sq
