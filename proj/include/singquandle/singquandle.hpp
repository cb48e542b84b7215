#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singquandle/error.hpp"

namespace sq {

/// Index of an element in a finite carrier {0, ..., n-1}.
struct ElementId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

using ElementSet = std::set<ElementId>;

/// Row-major table of a binary operation; `at(x, y)` is x op y.
class OperationTable {
 public:
  OperationTable() = default;
  OperationTable(std::uint32_t order, std::vector<std::uint32_t> cells);

  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t at(std::uint32_t left, std::uint32_t right) const noexcept {
    return cells_[static_cast<std::size_t>(left) * order_ + right];
  }
  ElementId operator()(ElementId left, ElementId right) const noexcept {
    return ElementId{at(left.index, right.index)};
  }
  std::vector<std::vector<std::uint32_t>> rows() const;
  const std::vector<std::uint32_t>& cells() const noexcept { return cells_; }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;

 private:
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> cells_;
};

using RawTable = std::vector<std::vector<std::uint32_t>>;

enum class Operation { star, bar, r1, r2 };

std::string_view to_string(Operation op) noexcept;

/// Trivial-action counts of one element: r^i(x) counts y with op_i(x,y) = x,
/// c^i(x) counts y with op_i(y,x) = y, for op_1 = *, op_2 = R1, op_3 = R2.
struct ProfileVector {
  std::uint32_t r1 = 0;
  std::uint32_t c1 = 0;
  std::uint32_t r2 = 0;
  std::uint32_t c2 = 0;
  std::uint32_t r3 = 0;
  std::uint32_t c3 = 0;

  std::array<std::uint32_t, 6> as_array() const noexcept { return {r1, c1, r2, c2, r3, c3}; }

  friend constexpr auto operator<=>(const ProfileVector&, const ProfileVector&) = default;
};

enum class Axiom {
  idempotency,          // x*x = x
  right_invertibility,  // y -> x*y is a bijection for each fixed y
  self_distributivity,  // (x*y)*z = (x*z)*(y*z)
  singular_1,           // R1(a/b, c)*b = R1(a, c*b)
  singular_2,           // R2(a/b, c) = R2(a, c*b)/b
  singular_3,           // (b/R1(a,c))*a = (b*R2(a,c))/c
  singular_4,           // R2(a,b) = R1(b, a*b)
  singular_5,           // R1(a,b)*R2(a,b) = R2(b, a*b)
};

std::string_view to_string(Axiom axiom) noexcept;
std::string_view identity_of(Axiom axiom) noexcept;
bool is_quandle_axiom(Axiom axiom) noexcept;

struct Violation {
  Axiom axiom;
  std::vector<ElementId> witness;
};

struct ValidationReport {
  static constexpr std::size_t max_violations = 100;

  std::vector<Violation> violations;
  bool truncated = false;

  bool ok() const noexcept { return violations.empty(); }
  bool has_quandle_violation() const noexcept;
};

/// Display metadata. `names[i]` is the label of element i; `display_order`
/// lists element ids in the order rows/columns are printed.
struct ElementLabels {
  std::vector<std::string> names;
  std::vector<ElementId> display_order;

  static ElementLabels residues(std::uint32_t order);
};

class ValidationFailure : public Error {
 public:
  ValidationFailure(ErrorKind kind, ValidationReport report);

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// A validated finite oriented singquandle. Immutable once built; the only
/// way to obtain one is through the checked factories below.
class FiniteSingquandle {
 public:
  std::uint32_t order() const noexcept { return star_.order(); }

  ElementId star(ElementId x, ElementId y) const noexcept { return star_(x, y); }
  ElementId bar(ElementId x, ElementId y) const noexcept { return bar_(x, y); }
  ElementId r1(ElementId x, ElementId y) const noexcept { return r1_(x, y); }
  ElementId r2(ElementId x, ElementId y) const noexcept { return r2_(x, y); }
  ElementId apply(Operation op, ElementId x, ElementId y) const noexcept {
    return table(op)(x, y);
  }

  const OperationTable& table(Operation op) const noexcept;

  const std::string& label(ElementId x) const { return labels_.names.at(x.index); }
  const ElementLabels& labels() const noexcept { return labels_; }

  /// Structural equality of the operation tables; labels are presentation only.
  friend bool operator==(const FiniteSingquandle& a, const FiniteSingquandle& b) {
    return a.star_ == b.star_ && a.r1_ == b.r1_ && a.r2_ == b.r2_;
  }

 private:
  friend FiniteSingquandle table_singquandle(std::uint32_t, const RawTable&, const RawTable&,
                                             const RawTable&, ElementLabels);

  FiniteSingquandle() = default;

  OperationTable star_;
  OperationTable bar_;
  OperationTable r1_;
  OperationTable r2_;
  ElementLabels labels_;
};

/// Exhaustive check of the quandle axioms and the five singquandle identities
/// over all triples. Throws MalformedTable on shape or range problems only.
ValidationReport validate(std::uint32_t order, const RawTable& star, const RawTable& r1,
                          const RawTable& r2);

/// Builds and validates. Throws MalformedTable, or ValidationFailure with kind
/// NotAQuandle / NotASingquandle carrying the full report.
FiniteSingquandle table_singquandle(std::uint32_t order, const RawTable& star, const RawTable& r1,
                                    const RawTable& r2, ElementLabels labels = {});

/// bar[z][y] is the unique x with star[x][y] = z. Throws NotRightInvertible.
OperationTable derive_bar(const OperationTable& star);

ProfileVector profile(const FiniteSingquandle& q, ElementId x);

/// Smallest superset of `seed` closed under *, R1 and R2. Closure under the
/// bar operation follows: on a finite *-closed set each right translation is
/// an injective self-map, hence a bijection whose inverse is bar.
ElementSet closure(const FiniteSingquandle& q, const ElementSet& seed);

bool is_subsingquandle(const FiniteSingquandle& q, const ElementSet& subset);

/// Copy of q transported along perm: new(perm[x], perm[y]) = perm[old(x, y)].
FiniteSingquandle relabel(const FiniteSingquandle& q, std::span<const ElementId> perm);

enum class IsoOutcome { isomorphic, sqp_mismatch, profile_mismatch, exhausted };

std::string_view to_string(IsoOutcome outcome) noexcept;

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::exhausted;
  std::vector<ElementId> witness;  // witness[x] = f(x) when isomorphic

  explicit operator bool() const noexcept { return outcome == IsoOutcome::isomorphic; }
};

IsoResult are_isomorphic(const FiniteSingquandle& a, const FiniteSingquandle& b);

/// True iff f (given as f[x]) is a bijective map preserving *, R1 and R2.
bool is_isomorphism(const FiniteSingquandle& a, const FiniteSingquandle& b,
                    std::span<const ElementId> f);

}  // namespace sq
