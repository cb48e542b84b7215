#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "singquandle/singquandle.hpp"

namespace sq {

using Integer = boost::multiprecision::cpp_int;

/// Variable order used everywhere: s1, t1, s2, t2, s3, t3.
inline constexpr std::array<std::string_view, 6> variable_names = {"s1", "t1", "s2",
                                                                   "t2", "s3", "t3"};

struct Monomial {
  std::array<std::uint32_t, 6> exponents{};

  static Monomial of(const ProfileVector& p) { return Monomial{p.as_array()}; }

  std::uint64_t total_degree() const noexcept;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: higher total degree first, then the lexicographically
/// larger exponent tuple first.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial in s1..t3 with positive integer coefficients (zero
/// coefficients are never stored).
class SqPolynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GradedLexDescending>;

  SqPolynomial() = default;

  void add(const Monomial& m, const Integer& coefficient);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;
  Integer coefficient_sum() const;

  friend bool operator==(const SqPolynomial&, const SqPolynomial&) = default;

 private:
  TermMap terms_;
};

/// Total order on polynomials induced by their canonical term sequences.
struct CanonicalPolynomialLess {
  bool operator()(const SqPolynomial& a, const SqPolynomial& b) const;
};

/// Multiset of polynomials, stored as polynomial -> multiplicity.
class PhiInvariant {
 public:
  using EntryMap = std::map<SqPolynomial, Integer, CanonicalPolynomialLess>;

  void add(const SqPolynomial& p, const Integer& multiplicity = 1);

  const EntryMap& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const PhiInvariant&, const PhiInvariant&) = default;

 private:
  EntryMap entries_;
};

SqPolynomial sqp(const FiniteSingquandle& q);

/// Profiles are taken in the ambient q. Throws NotASubsingquandle.
SqPolynomial ssqp(const FiniteSingquandle& q, const ElementSet& subset);

/// Throws NotASubsingquandle naming the offending index.
PhiInvariant phi_from_images(const FiniteSingquandle& q, std::span<const ElementSet> images);

/// Sum of multiplicities; the coloring count.
Integer counting(const PhiInvariant& phi);

/// Substitutes s2 = t2 = s3 = t3 = 1, leaving a polynomial in s1, t1 only.
SqPolynomial restrict_to_quandle_part(const SqPolynomial& p);

// Human-readable canonical forms, e.g. `4*s1^2*t1^2*s2*t2*s3^4*t3^4` and
// `8*u^{4*s1^2*t1^2} + u^{s1*t1}`. The zero polynomial and the empty
// multiset both render as `0`.
std::string render(const SqPolynomial& p);
std::string render_phi(const PhiInvariant& phi);

// Machine forms: a polynomial is a space-separated list of
// `(e1,e2,e3,e4,e5,e6):c` tokens in canonical order (`0` when empty); phi is
// one `multiplicity<TAB>polynomial` line per entry in canonical order.
std::string render_machine(const SqPolynomial& p);
std::string render_phi_machine(const PhiInvariant& phi);

/// Reads the human form back. Terms may appear in any order and repeated
/// monomials are summed. Throws SyntaxError.
SqPolynomial parse_polynomial(std::string_view text);
PhiInvariant parse_phi(std::string_view text);

}  // namespace sq
