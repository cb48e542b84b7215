#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "singquandle/presentation.hpp"

namespace sq {

enum class CrossingKind { positive, negative, singular };

/// Port convention (all orientations implicit in the port order):
///   P[a,b,c,d]  a under-in, b over-in, c under-out = a*b, d over-out = b
///   N[a,b,c,d]  a under-in, b over-in, c under-out = a/b, d over-out = b
///   S[a,b,c,d]  a, b incoming;       c = R1(a,b),  d = R2(a,b)
/// Ports a, b are inputs and c, d are outputs in every kind.
struct Crossing {
  CrossingKind kind = CrossingKind::positive;
  std::array<std::string, 4> ports;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Extended PD code of a closed singular link diagram: every semi-arc label
/// is the output of exactly one port and the input of exactly one port.
struct SingularPD {
  std::string name;
  std::vector<Crossing> crossings;

  /// Labels in first-occurrence order.
  std::vector<std::string> labels() const;

  friend bool operator==(const SingularPD&, const SingularPD&) = default;
};

/// Throws DuplicatePort (a label used more than twice, or twice on the same
/// side) or DanglingArc (a label used only once).
void check_closed(const SingularPD& pd);

/// Entries `P[a,b,c,d]`, `N[...]`, `S[...]` separated by whitespace (commas
/// between entries are tolerated), `#` comments, optional `name:` line.
/// Throws SyntaxError, DanglingArc, DuplicatePort.
SingularPD parse_pd(std::string_view text);

/// One crossing per line after an optional `name:` header.
std::string render_pd(const SingularPD& pd);

/// One generator per semi-arc label and two relations per crossing, one per
/// output port.
SingPresentation pd_to_presentation(const SingularPD& pd);

}  // namespace sq
