#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "singquandle/diagram.hpp"
#include "singquandle/io.hpp"
#include "singquandle/presentation.hpp"

namespace sq::corpus {

enum class EntryKind { singquandle, presentation, pd_code, expected };

std::string_view to_string(EntryKind kind) noexcept;

/// One bundled file. The id is the file stem.
struct CorpusEntry {
  std::string id;
  EntryKind kind;
  std::string file_name;
  std::string_view payload;
};

const std::vector<CorpusEntry>& entries();

std::vector<std::string> ids(EntryKind kind);

/// Accepts exact ids, a `link-` prefix, and bare link names such as `1_1l`
/// (which resolve to `1_1l-presentation`). Throws UnknownId.
const CorpusEntry& find(std::string_view id);

using Loaded = std::variant<SingquandleDocument, SingPresentation, SingularPD>;

/// Parses and validates the entry. Throws UnknownId for the expected-values
/// file, which has no domain object.
Loaded load(std::string_view id);

SingquandleDocument load_singquandle_document(std::string_view id);
FiniteSingquandle load_singquandle(std::string_view id);
SingPresentation load_presentation(std::string_view id);
SingularPD load_pd(std::string_view id);

/// A presentation entry as-is, or a PD entry compiled to relations.
SingPresentation load_link(std::string_view id);

/// Names X for which both `X-presentation` and `X-pd` are bundled.
std::vector<std::string> link_names();

/// Raw JSON text of the recorded expected values.
std::string_view expected_json();

}  // namespace sq::corpus
