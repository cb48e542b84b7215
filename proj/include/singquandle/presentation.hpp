#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singquandle/polynomial.hpp"
#include "singquandle/singquandle.hpp"
#include "singquandle/term.hpp"

namespace sq {

struct Relation {
  Term lhs;
  Term rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Generators plus relations presenting a fundamental singquandle. Generator
/// names are unique and every relation mentions declared generators only.
class SingPresentation {
 public:
  /// Throws DuplicateGenerator or UnknownGenerator.
  SingPresentation(std::vector<std::string> generators, std::vector<Relation> relations,
                   std::string name = {});

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::string& name() const noexcept { return name_; }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  friend bool operator==(const SingPresentation&, const SingPresentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
  std::string name_;
};

using Assignment = std::map<std::string, ElementId, std::less<>>;

/// images[i] is the value of the presentation's i-th generator.
struct Homomorphism {
  std::vector<ElementId> images;

  friend auto operator<=>(const Homomorphism&, const Homomorphism&) = default;
};

Assignment assignment_of(const SingPresentation& pres, const Homomorphism& hom);

/// Structural evaluation in q. Throws UnboundGenerator.
ElementId eval(const Term& term, const Assignment& assignment, const FiniteSingquandle& q);

bool satisfies(const SingPresentation& pres, const Homomorphism& hom, const FiniteSingquandle& q);

struct EnumerationOptions {
  /// Worker count; 0 picks one based on the search size.
  unsigned threads = 0;
};

/// Every assignment satisfying all relations, sorted lexicographically by the
/// image tuple in generator order.
std::vector<Homomorphism> enumerate_homs(const SingPresentation& pres, const FiniteSingquandle& q,
                                         EnumerationOptions options = {});

/// Subsingquandle generated by the generator images.
ElementSet hom_image(const SingPresentation& pres, const Homomorphism& hom,
                     const FiniteSingquandle& q);

PhiInvariant phi_ssqp(const SingPresentation& pres, const FiniteSingquandle& q);

// Text form:
//   name: 1_1l               (optional)
//   generators: x, y, z
//   x = R2(x,y)              (one relation per line)
// `#` starts a comment.
SingPresentation parse_presentation(std::string_view text);
std::string render_presentation(const SingPresentation& pres);

}  // namespace sq
