#include "singquandle/corpus.hpp"

#include <algorithm>

#include "corpus_data.hpp"

namespace sq::corpus {

std::string_view to_string(EntryKind kind) noexcept {
  switch (kind) {
    case EntryKind::singquandle: return "singquandle";
    case EntryKind::presentation: return "presentation";
    case EntryKind::pd_code: return "pd-code";
    case EntryKind::expected: return "expected";
  }
  return "?";
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<CorpusEntry> build_entries() {
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < detail::embedded_file_count; ++i) {
    const std::string name = detail::embedded_files[i].name;
    const auto dot = name.rfind('.');
    if (dot == std::string::npos) continue;
    const std::string_view ext = std::string_view(name).substr(dot);
    EntryKind kind;
    if (ext == ".sq") kind = EntryKind::singquandle;
    else if (ext == ".pres") kind = EntryKind::presentation;
    else if (ext == ".pd") kind = EntryKind::pd_code;
    else if (ext == ".json") kind = EntryKind::expected;
    else continue;
    out.push_back(CorpusEntry{name.substr(0, dot), kind, name, detail::embedded_files[i].text});
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return out;
}

const CorpusEntry* lookup(std::string_view id) {
  for (const CorpusEntry& e : entries()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

[[noreturn]] void unknown(std::string_view id) {
  throw Error(ErrorKind::unknown_id, "no corpus entry '" + std::string(id) + "'");
}

}  // namespace

const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> all = build_entries();
  return all;
}

std::vector<std::string> ids(EntryKind kind) {
  std::vector<std::string> out;
  for (const CorpusEntry& e : entries()) {
    if (e.kind == kind) out.push_back(e.id);
  }
  return out;
}

const CorpusEntry& find(std::string_view id) {
  if (const CorpusEntry* e = lookup(id)) return *e;
  std::string_view rest = id;
  if (rest.substr(0, 5) == "link-") {
    rest.remove_prefix(5);
    if (const CorpusEntry* e = lookup(rest)) return *e;
  }
  if (!ends_with(rest, "-presentation") && !ends_with(rest, "-pd")) {
    if (const CorpusEntry* e = lookup(std::string(rest) + "-presentation")) return *e;
  }
  unknown(id);
}

SingquandleDocument load_singquandle_document(std::string_view id) {
  const CorpusEntry& e = find(id);
  if (e.kind != EntryKind::singquandle) unknown(id);
  return parse_singquandle_document(e.payload);
}

FiniteSingquandle load_singquandle(std::string_view id) {
  return load_singquandle_document(id).algebra;
}

SingPresentation load_presentation(std::string_view id) {
  const CorpusEntry& e = find(id);
  if (e.kind != EntryKind::presentation) unknown(id);
  return parse_presentation(e.payload);
}

SingularPD load_pd(std::string_view id) {
  const CorpusEntry& e = find(id);
  if (e.kind != EntryKind::pd_code) unknown(id);
  return parse_pd(e.payload);
}

Loaded load(std::string_view id) {
  const CorpusEntry& e = find(id);
  switch (e.kind) {
    case EntryKind::singquandle: return parse_singquandle_document(e.payload);
    case EntryKind::presentation: return parse_presentation(e.payload);
    case EntryKind::pd_code: return parse_pd(e.payload);
    case EntryKind::expected: break;
  }
  unknown(id);
}

SingPresentation load_link(std::string_view id) {
  const CorpusEntry& e = find(id);
  if (e.kind == EntryKind::presentation) return parse_presentation(e.payload);
  if (e.kind == EntryKind::pd_code) return pd_to_presentation(parse_pd(e.payload));
  unknown(id);
}

std::vector<std::string> link_names() {
  std::vector<std::string> out;
  for (const CorpusEntry& e : entries()) {
    if (e.kind != EntryKind::presentation || !ends_with(e.id, "-presentation")) continue;
    const std::string name = e.id.substr(0, e.id.size() - 13);
    if (lookup(name + "-pd")) out.push_back(name);
  }
  return out;
}

std::string_view expected_json() {
  const CorpusEntry* e = lookup("expected");
  return e ? e->payload : std::string_view("{}");
}

}  // namespace sq::corpus
