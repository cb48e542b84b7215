#include "singquandle/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace sq {

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (std::uint32_t e : exponents) d += e;
  return d;
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const std::uint64_t da = a.total_degree();
  const std::uint64_t db = b.total_degree();
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

void SqPolynomial::add(const Monomial& m, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer SqPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer SqPolynomial::coefficient_sum() const {
  Integer sum = 0;
  for (const auto& [m, c] : terms_) sum += c;
  return sum;
}

bool CanonicalPolynomialLess::operator()(const SqPolynomial& a, const SqPolynomial& b) const {
  const GradedLexDescending before;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return before(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

void PhiInvariant::add(const SqPolynomial& p, const Integer& multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = entries_.try_emplace(p, multiplicity);
  if (!inserted) it->second += multiplicity;
}

SqPolynomial sqp(const FiniteSingquandle& q) {
  SqPolynomial out;
  for (std::uint32_t x = 0; x < q.order(); ++x) out.add(Monomial::of(profile(q, ElementId{x})), 1);
  return out;
}

SqPolynomial ssqp(const FiniteSingquandle& q, const ElementSet& subset) {
  if (!is_subsingquandle(q, subset)) {
    throw Error(ErrorKind::not_a_subsingquandle, "subset is not closed under *, R1 and R2");
  }
  SqPolynomial out;
  for (ElementId x : subset) out.add(Monomial::of(profile(q, x)), 1);
  return out;
}

PhiInvariant phi_from_images(const FiniteSingquandle& q, std::span<const ElementSet> images) {
  // Images repeat heavily, so each distinct subset is evaluated once.
  std::map<ElementSet, Integer> tally;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!is_subsingquandle(q, images[i])) {
      throw Error(ErrorKind::not_a_subsingquandle,
                  "image " + std::to_string(i) + " is not a subsingquandle");
    }
    tally[images[i]] += 1;
  }
  PhiInvariant phi;
  for (const auto& [subset, count] : tally) phi.add(ssqp(q, subset), count);
  return phi;
}

Integer counting(const PhiInvariant& phi) {
  Integer sum = 0;
  for (const auto& [p, k] : phi.entries()) sum += k;
  return sum;
}

SqPolynomial restrict_to_quandle_part(const SqPolynomial& p) {
  SqPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    r.exponents[0] = m.exponents[0];
    r.exponents[1] = m.exponents[1];
    out.add(r, c);
  }
  return out;
}

namespace {

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < variable_names.size(); ++v) {
    const std::uint32_t e = m.exponents[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_names[v];
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string render_term(const Monomial& m, const Integer& c) {
  const std::string vars = render_monomial(m);
  if (vars.empty()) return c.str();
  if (c == 1) return vars;
  return c.str() + '*' + vars;
}

std::vector<std::pair<const SqPolynomial*, Integer>> phi_display_order(const PhiInvariant& phi) {
  std::vector<std::pair<const SqPolynomial*, Integer>> entries;
  for (const auto& [p, k] : phi.entries()) entries.emplace_back(&p, k);
  // entries() is already in canonical polynomial order; a stable sort on
  // multiplicity keeps that as the tie-break.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return entries;
}

}  // namespace

std::string render(const SqPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += render_term(m, c);
  }
  return out;
}

std::string render_phi(const PhiInvariant& phi) {
  if (phi.empty()) return "0";
  std::string out;
  for (const auto& [p, k] : phi_display_order(phi)) {
    if (!out.empty()) out += " + ";
    if (k != 1) out += k.str() + '*';
    out += "u^{" + render(*p) + '}';
  }
  return out;
}

std::string render_machine(const SqPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t v = 0; v < m.exponents.size(); ++v) {
      if (v != 0) out += ',';
      out += std::to_string(m.exponents[v]);
    }
    out += "):" + c.str();
  }
  return out;
}

std::string render_phi_machine(const PhiInvariant& phi) {
  std::string out;
  for (const auto& [p, k] : phi_display_order(phi)) {
    out += k.str() + '\t' + render_machine(*p) + '\n';
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  SqPolynomial polynomial() {
    SqPolynomial out;
    skip_space();
    if (peek() == '0' && !is_digit_at(pos_ + 1)) {
      const std::size_t start = pos_;
      ++pos_;
      skip_space();
      if (at_end() || peek() == '}') return out;
      pos_ = start;
    }
    term_into(out);
    while (true) {
      skip_space();
      if (peek() != '+') break;
      ++pos_;
      term_into(out);
    }
    return out;
  }

  PhiInvariant phi() {
    PhiInvariant out;
    skip_space();
    if (peek() == '0' && !is_digit_at(pos_ + 1)) {
      ++pos_;
      skip_space();
      expect_end();
      return out;
    }
    phi_term_into(out);
    while (true) {
      skip_space();
      if (peek() != '+') break;
      ++pos_;
      phi_term_into(out);
    }
    expect_end();
    return out;
  }

  void expect_end() {
    skip_space();
    if (!at_end()) fail("unexpected input", {"end of input", "'+'"});
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool is_digit_at(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    throw SyntaxError(ErrorKind::syntax_error, what, pos_, std::move(expected));
  }

  Integer number() {
    skip_space();
    if (!is_digit_at(pos_)) fail("expected a number", {"integer"});
    const std::size_t start = pos_;
    while (is_digit_at(pos_)) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t exponent() {
    const Integer e = number();
    if (e > 1'000'000) fail("exponent too large", {});
    return e.convert_to<std::uint32_t>();
  }

  // Returns the variable index, or -1 when the next token is not a variable.
  int variable() {
    skip_space();
    for (std::size_t v = 0; v < variable_names.size(); ++v) {
      const std::string_view name = variable_names[v];
      if (text_.substr(pos_, name.size()) == name && !is_digit_at(pos_ + name.size())) {
        pos_ += name.size();
        return static_cast<int>(v);
      }
    }
    return -1;
  }

  void factor_into(Monomial& m) {
    const int v = variable();
    if (v < 0) fail("expected a variable", {"s1", "t1", "s2", "t2", "s3", "t3"});
    std::uint32_t e = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      e = exponent();
    }
    m.exponents[static_cast<std::size_t>(v)] += e;
  }

  void term_into(SqPolynomial& out) {
    skip_space();
    Integer c = 1;
    Monomial m;
    if (is_digit_at(pos_)) {
      c = number();
      skip_space();
      if (peek() != '*') {
        out.add(m, c);
        return;
      }
      ++pos_;
    }
    factor_into(m);
    while (true) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      factor_into(m);
    }
    out.add(m, c);
  }

  void phi_term_into(PhiInvariant& out) {
    skip_space();
    Integer k = 1;
    if (is_digit_at(pos_)) {
      k = number();
      skip_space();
      if (peek() != '*') fail("expected '*' after multiplicity", {"'*'"});
      ++pos_;
      skip_space();
    }
    if (peek() != 'u') fail("expected u^{...}", {"'u'"});
    ++pos_;
    skip_space();
    if (peek() != '^') fail("expected '^'", {"'^'"});
    ++pos_;
    skip_space();
    if (peek() != '{') fail("expected '{'", {"'{'"});
    ++pos_;
    SqPolynomial p = polynomial();
    skip_space();
    if (peek() != '}') fail("expected '}'", {"'}'", "'+'"});
    ++pos_;
    out.add(p, k);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SqPolynomial parse_polynomial(std::string_view text) {
  PolyParser parser(text);
  SqPolynomial p = parser.polynomial();
  parser.expect_end();
  return p;
}

PhiInvariant parse_phi(std::string_view text) { return PolyParser(text).phi(); }

}  // namespace sq
