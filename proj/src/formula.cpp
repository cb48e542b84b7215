#include "singquandle/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>

namespace sq {

namespace {

constexpr std::uint64_t max_modulus = std::numeric_limits<std::uint32_t>::max();

std::uint64_t reduce(std::int64_t value, std::uint64_t n) {
  const auto m = static_cast<std::int64_t>(n);
  const std::int64_t r = value % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

__extension__ using Wide = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % n);
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::uint64_t n) : text_(text), n_(n) {}

  std::vector<BivariatePolyFormula::Term> parse() {
    std::vector<BivariatePolyFormula::Term> terms;
    skip_space();
    if (at_end()) fail("empty formula", {"term"});
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("unexpected character", {"'+'", "'-'", "end of formula"});
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    throw SyntaxError(ErrorKind::malformed_formula, what, pos_, std::move(expected));
  }

  std::uint64_t number() {
    std::uint64_t value = 0;
    if (!digit()) fail("expected a number", {"integer"});
    while (digit()) {
      const auto d = static_cast<std::uint64_t>(take() - '0');
      value = (mulmod(value, 10, n_) + d) % n_;
    }
    return value;
  }

  BivariatePolyFormula::Term term(bool negative) {
    BivariatePolyFormula::Term t;
    skip_space();
    t.coefficient = 1 % n_;
    bool have_factor = false;
    if (digit()) {
      t.coefficient = number();
      have_factor = true;
    }
    while (true) {
      skip_space();
      if (peek() == '*') {
        if (!have_factor) fail("unexpected '*'", {"number", "x", "y"});
        ++pos_;
        skip_space();
        if (peek() != 'x' && peek() != 'y') fail("expected a variable", {"x", "y"});
      }
      if (peek() != 'x' && peek() != 'y') break;
      const char var = take();
      std::uint64_t e = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        if (!digit()) fail("expected an exponent", {"integer"});
        e = 0;
        while (digit()) {
          e = e * 10 + static_cast<std::uint64_t>(take() - '0');
          if (e > BivariatePolyFormula::max_exponent) {
            pos_ = start;
            fail("exponent exceeds " + std::to_string(BivariatePolyFormula::max_exponent), {});
          }
        }
      }
      std::uint32_t& slot = var == 'x' ? t.x_exponent : t.y_exponent;
      slot += static_cast<std::uint32_t>(e);
      if (slot > BivariatePolyFormula::max_exponent) {
        fail("exponent exceeds " + std::to_string(BivariatePolyFormula::max_exponent), {});
      }
      have_factor = true;
    }
    if (!have_factor) fail("expected a term", {"number", "x", "y"});
    if (negative) t.coefficient = (n_ - t.coefficient) % n_;
    return t;
  }

  std::string_view text_;
  std::uint64_t n_;
  std::size_t pos_ = 0;
};

void check_modulus(std::uint64_t n) {
  if (n == 0 || n > max_modulus) {
    throw Error(ErrorKind::malformed_formula, "modulus must be in [1, 2^32)");
  }
}

}  // namespace

BivariatePolyFormula::BivariatePolyFormula(std::uint64_t modulus, std::vector<Term> terms)
    : modulus_(modulus) {
  check_modulus(modulus);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> combined;
  for (const Term& t : terms) {
    if (t.x_exponent > max_exponent || t.y_exponent > max_exponent) {
      throw Error(ErrorKind::malformed_formula,
                  "exponent exceeds " + std::to_string(max_exponent));
    }
    auto& c = combined[{t.x_exponent, t.y_exponent}];
    c = (c + t.coefficient % modulus) % modulus;
  }
  // Highest degree first, x-heavy before y-heavy, constant last.
  for (auto it = combined.rbegin(); it != combined.rend(); ++it) {
    if (it->second != 0) terms_.push_back(Term{it->first.first, it->first.second, it->second});
  }
  std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return a.x_exponent + a.y_exponent > b.x_exponent + b.y_exponent;
  });
}

BivariatePolyFormula BivariatePolyFormula::parse(std::string_view text, std::uint64_t modulus) {
  check_modulus(modulus);
  return BivariatePolyFormula(modulus, FormulaParser(text, modulus).parse());
}

std::uint32_t BivariatePolyFormula::evaluate(std::uint32_t x, std::uint32_t y) const {
  const std::uint64_t n = modulus_;
  std::uint64_t sum = 0;
  for (const Term& t : terms_) {
    std::uint64_t v = t.coefficient;
    for (std::uint32_t i = 0; i < t.x_exponent; ++i) v = mulmod(v, x % n, n);
    for (std::uint32_t j = 0; j < t.y_exponent; ++j) v = mulmod(v, y % n, n);
    sum = (sum + v) % n;
  }
  return static_cast<std::uint32_t>(sum);
}

RawTable BivariatePolyFormula::tabulate() const {
  const auto n = static_cast<std::uint32_t>(modulus_);
  RawTable out(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) out[x][y] = evaluate(x, y);
  }
  return out;
}

std::string BivariatePolyFormula::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string factors;
    auto power = [&](char var, std::uint32_t e) {
      if (e == 0) return;
      if (!factors.empty()) factors += '*';
      factors += var;
      if (e != 1) factors += '^' + std::to_string(e);
    };
    power('x', t.x_exponent);
    power('y', t.y_exponent);
    if (factors.empty()) {
      out += std::to_string(t.coefficient);
    } else if (t.coefficient == 1) {
      out += factors;
    } else {
      out += std::to_string(t.coefficient) + '*' + factors;
    }
  }
  return out;
}

FiniteSingquandle formula_singquandle(const BivariatePolyFormula& star,
                                      const BivariatePolyFormula& r1,
                                      const BivariatePolyFormula& r2) {
  if (star.modulus() != r1.modulus() || star.modulus() != r2.modulus()) {
    throw Error(ErrorKind::modulus_mismatch,
                "formulas use moduli " + std::to_string(star.modulus()) + ", " +
                    std::to_string(r1.modulus()) + ", " + std::to_string(r2.modulus()));
  }
  const auto n = static_cast<std::uint32_t>(star.modulus());
  return table_singquandle(n, star.tabulate(), r1.tabulate(), r2.tabulate());
}

SingquandleFormulas affine_formulas(std::uint64_t n, std::int64_t t, std::int64_t s) {
  check_modulus(n);
  const std::uint64_t tr = reduce(t, n);
  const std::uint64_t sr = reduce(s, n);
  if (std::gcd(tr, n) != 1) {
    throw Error(ErrorKind::not_invertible,
                "t = " + std::to_string(t) + " is not a unit modulo " + std::to_string(n));
  }
  const std::uint64_t one = 1 % n;
  const std::uint64_t one_minus_t = (one + n - tr) % n;
  const std::uint64_t one_minus_s = (one + n - sr) % n;
  const std::uint64_t st = mulmod(sr, tr, n);
  using Term = BivariatePolyFormula::Term;
  return SingquandleFormulas{
      BivariatePolyFormula(n, {Term{1, 0, tr}, Term{0, 1, one_minus_t}}),
      BivariatePolyFormula(n, {Term{1, 0, sr}, Term{0, 1, one_minus_s}}),
      BivariatePolyFormula(n, {Term{1, 0, mulmod(tr, one_minus_s, n)},
                               Term{0, 1, (one_minus_t + st) % n}}),
  };
}

FiniteSingquandle affine_singquandle(std::uint64_t n, std::int64_t t, std::int64_t s) {
  const SingquandleFormulas f = affine_formulas(n, t, s);
  return formula_singquandle(f.star, f.r1, f.r2);
}

}  // namespace sq
