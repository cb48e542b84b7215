#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "singquandle/formula.hpp"
#include "singquandle/singquandle.hpp"

namespace sq {

// Singquandle text files come in two variants.
//
// Table form:
//   singquandle n=4
//   labels: 1 2 3 0        (optional; row/column order and display names)
//   star:
//   1 3 1 3
//   ...                    (n rows of n labels, likewise for R1: and R2:)
//
// Formula form:
//   singquandle-formula n=8
//   star = 7*x + 6*y + 4*x*y
//   R1 = ...
//   R2 = ...
//
// `#` starts a comment. When the labels are exactly the residues 0..n-1 in
// some order, label k is element k; otherwise elements are numbered by their
// position in the labels line.

struct SingquandleDocument {
  FiniteSingquandle algebra;
  std::optional<SingquandleFormulas> formulas;  // set for the formula form
};

SingquandleDocument parse_singquandle_document(std::string_view text);
FiniteSingquandle parse_singquandle(std::string_view text);

/// Table form in the algebra's display order, with a labels line when the
/// labels differ from the plain residues 0..n-1.
std::string write_singquandle_tables(const FiniteSingquandle& q);
std::string write_singquandle_formulas(const SingquandleFormulas& formulas);

/// Resolves a label (or, failing that, a decimal index) to an element.
/// Throws IndexOutOfRange.
ElementId element_by_label(const FiniteSingquandle& q, std::string_view label);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sq
