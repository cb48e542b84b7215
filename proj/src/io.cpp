#include "singquandle/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace sq {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back(Line{number, std::move(t)});
    start = end + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what,
                       std::vector<std::string> expected = {}) {
  throw SyntaxError(ErrorKind::syntax_error, what, 0, std::move(expected), line.number);
}

std::optional<std::uint32_t> parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::uint32_t parse_header(const Line& line, std::string_view keyword) {
  const std::vector<std::string> w = words(line.text);
  if (w.size() != 2 || w[0] != keyword || w[1].rfind("n=", 0) != 0) {
    fail(line, "malformed header", {std::string(keyword) + " n=<order>"});
  }
  const auto n = parse_uint(std::string_view(w[1]).substr(2));
  if (!n || *n == 0) fail(line, "order must be a positive integer");
  return *n;
}

// Label -> element index, following the residue rule described in io.hpp.
ElementLabels make_labels(std::uint32_t n, const std::vector<std::string>& shown) {
  ElementLabels labels;
  bool residues = true;
  std::vector<char> seen(n, 0);
  for (const std::string& s : shown) {
    const auto v = parse_uint(s);
    if (!v || *v >= n || seen[*v] || std::to_string(*v) != s) {
      residues = false;
      break;
    }
    seen[*v] = 1;
  }
  labels.names.resize(n);
  for (std::uint32_t pos = 0; pos < n; ++pos) {
    const std::uint32_t id = residues ? *parse_uint(shown[pos]) : pos;
    labels.names[id] = shown[pos];
    labels.display_order.push_back(ElementId{id});
  }
  return labels;
}

FiniteSingquandle parse_tables(const std::vector<Line>& lines) {
  const std::uint32_t n = parse_header(lines.front(), "singquandle");
  std::optional<std::vector<std::string>> shown;
  std::map<std::string, std::vector<std::vector<std::string>>> blocks;
  std::string current;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.text.rfind("labels:", 0) == 0) {
      if (shown) fail(line, "duplicate labels line");
      shown = words(std::string_view(line.text).substr(7));
      if (shown->size() != n) {
        fail(line, "labels line has " + std::to_string(shown->size()) + " entries, expected " +
                       std::to_string(n));
      }
      current.clear();
      continue;
    }
    if (line.text == "star:" || line.text == "R1:" || line.text == "R2:") {
      current = line.text.substr(0, line.text.size() - 1);
      if (blocks.contains(current)) fail(line, "duplicate " + current + " block");
      blocks[current];
      continue;
    }
    if (current.empty()) fail(line, "unexpected line", {"labels:", "star:", "R1:", "R2:"});
    auto& rows = blocks[current];
    if (rows.size() == n) fail(line, current + " block has more than " + std::to_string(n) + " rows");
    rows.push_back(words(line.text));
    if (rows.back().size() != n) {
      throw Error(ErrorKind::malformed_table,
                  "line " + std::to_string(line.number) + ": " + current + " row has " +
                      std::to_string(rows.back().size()) + " entries, expected " +
                      std::to_string(n));
    }
  }
  for (const char* name : {"star", "R1", "R2"}) {
    auto it = blocks.find(name);
    if (it == blocks.end()) throw Error(ErrorKind::malformed_table, std::string("missing ") + name + " block");
    if (it->second.size() != n) {
      throw Error(ErrorKind::malformed_table, std::string(name) + " block has " +
                                                  std::to_string(it->second.size()) +
                                                  " rows, expected " + std::to_string(n));
    }
  }
  if (!shown) {
    shown.emplace();
    for (std::uint32_t i = 0; i < n; ++i) shown->push_back(std::to_string(i));
  }
  ElementLabels labels = make_labels(n, *shown);
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < n; ++i) index[labels.names[i]] = i;

  auto convert = [&](const std::string& name) {
    RawTable out(n, std::vector<std::uint32_t>(n));
    const auto& rows = blocks.at(name);
    for (std::uint32_t r = 0; r < n; ++r) {
      for (std::uint32_t c = 0; c < n; ++c) {
        auto it = index.find(rows[r][c]);
        if (it == index.end()) {
          throw Error(ErrorKind::malformed_table,
                      name + " entry '" + rows[r][c] + "' is not a known label");
        }
        out[labels.display_order[r].index][labels.display_order[c].index] = it->second;
      }
    }
    return out;
  };
  RawTable star = convert("star");
  RawTable r1 = convert("R1");
  RawTable r2 = convert("R2");
  return table_singquandle(n, star, r1, r2, std::move(labels));
}

SingquandleDocument parse_formulas(const std::vector<Line>& lines) {
  const std::uint32_t n = parse_header(lines.front(), "singquandle-formula");
  std::map<std::string, BivariatePolyFormula> found;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto eq = line.text.find('=');
    if (eq == std::string::npos) fail(line, "expected '<op> = <polynomial>'", {"star =", "R1 =", "R2 ="});
    const std::string key = trim(std::string_view(line.text).substr(0, eq));
    if (key != "star" && key != "R1" && key != "R2") fail(line, "unknown operation '" + key + "'", {"star", "R1", "R2"});
    if (found.contains(key)) fail(line, "duplicate " + key + " formula");
    try {
      found.emplace(key, BivariatePolyFormula::parse(std::string_view(line.text).substr(eq + 1), n));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.kind(), std::string(e.what()), e.position(), e.expected(), line.number);
    }
  }
  for (const char* name : {"star", "R1", "R2"}) {
    if (!found.contains(name)) throw Error(ErrorKind::malformed_formula, std::string("missing ") + name + " formula");
  }
  SingquandleFormulas f{found.at("star"), found.at("R1"), found.at("R2")};
  FiniteSingquandle q = formula_singquandle(f.star, f.r1, f.r2);
  return SingquandleDocument{std::move(q), std::move(f)};
}

}  // namespace

SingquandleDocument parse_singquandle_document(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) {
    throw SyntaxError(ErrorKind::syntax_error, "empty singquandle file", 0,
                      {"singquandle n=<order>", "singquandle-formula n=<order>"}, 1);
  }
  const std::string first = words(lines.front().text).front();
  if (first == "singquandle") return SingquandleDocument{parse_tables(lines), std::nullopt};
  if (first == "singquandle-formula") return parse_formulas(lines);
  fail(lines.front(), "unknown header", {"singquandle n=<order>", "singquandle-formula n=<order>"});
}

FiniteSingquandle parse_singquandle(std::string_view text) {
  return parse_singquandle_document(text).algebra;
}

std::string write_singquandle_tables(const FiniteSingquandle& q) {
  const std::uint32_t n = q.order();
  const ElementLabels& labels = q.labels();
  std::ostringstream os;
  os << "singquandle n=" << n << '\n';
  bool plain = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    plain = plain && labels.display_order[i].index == i && labels.names[i] == std::to_string(i);
  }
  if (!plain) {
    os << "labels:";
    for (ElementId e : labels.display_order) os << ' ' << q.label(e);
    os << '\n';
  }
  std::size_t width = 0;
  for (const std::string& s : labels.names) width = std::max(width, s.size());
  for (Operation op : {Operation::star, Operation::r1, Operation::r2}) {
    os << (op == Operation::star ? "star" : std::string(to_string(op))) << ":\n";
    const OperationTable& t = q.table(op);
    for (ElementId r : labels.display_order) {
      bool first = true;
      for (ElementId c : labels.display_order) {
        const std::string& s = q.label(t(r, c));
        if (!first) os << ' ';
        os << std::string(width - s.size(), ' ') << s;
        first = false;
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string write_singquandle_formulas(const SingquandleFormulas& f) {
  std::ostringstream os;
  os << "singquandle-formula n=" << f.star.modulus() << '\n'
     << "star = " << f.star.to_string() << '\n'
     << "R1 = " << f.r1.to_string() << '\n'
     << "R2 = " << f.r2.to_string() << '\n';
  return os.str();
}

ElementId element_by_label(const FiniteSingquandle& q, std::string_view label) {
  const std::string key = trim(label);
  for (std::uint32_t i = 0; i < q.order(); ++i) {
    if (q.labels().names[i] == key) return ElementId{i};
  }
  if (const auto v = parse_uint(key); v && *v < q.order()) return ElementId{*v};
  throw Error(ErrorKind::index_out_of_range, "no element labelled '" + key + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace sq
