#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "singquandle/singquandle.hpp"

namespace sq {

/// A polynomial c + sum c_ij x^i y^j over Z_n, used to fill an operation
/// table by evaluating at every (x, y).
class BivariatePolyFormula {
 public:
  static constexpr std::uint32_t max_exponent = 4;

  struct Term {
    std::uint32_t x_exponent = 0;
    std::uint32_t y_exponent = 0;
    std::uint64_t coefficient = 0;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BivariatePolyFormula(std::uint64_t modulus, std::vector<Term> terms);

  /// Grammar: signed sum of terms `c`, `c*x^i`, `c*y^j`, `c*x^i*y^j`; the
  /// `*` may be omitted (`3x`, `4xy`) and a bare variable has coefficient 1.
  static BivariatePolyFormula parse(std::string_view text, std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  std::uint32_t evaluate(std::uint32_t x, std::uint32_t y) const;
  RawTable tabulate() const;

  /// Canonical text, e.g. `4*x^2 + 5*x + 4*y`; reparses to an equal formula.
  std::string to_string() const;

  friend bool operator==(const BivariatePolyFormula&, const BivariatePolyFormula&) = default;

 private:
  std::uint64_t modulus_;
  std::vector<Term> terms_;  // combined, reduced mod n, zero terms dropped
};

struct SingquandleFormulas {
  BivariatePolyFormula star;
  BivariatePolyFormula r1;
  BivariatePolyFormula r2;
};

/// Throws ModulusMismatch, then whatever table_singquandle throws.
FiniteSingquandle formula_singquandle(const BivariatePolyFormula& star,
                                      const BivariatePolyFormula& r1,
                                      const BivariatePolyFormula& r2);

/// a*b = t a + (1-t) b, R1(a,b) = s a + (1-s) b, R2(a,b) = t(1-s) a + (1-t+st) b.
/// Throws NotInvertible when gcd(t, n) != 1.
SingquandleFormulas affine_formulas(std::uint64_t n, std::int64_t t, std::int64_t s);
FiniteSingquandle affine_singquandle(std::uint64_t n, std::int64_t t, std::int64_t s);

}  // namespace sq
