#include "singquandle/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sq {

std::vector<std::string> SingularPD::labels() const {
  std::vector<std::string> out;
  for (const Crossing& c : crossings) {
    for (const std::string& p : c.ports) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  return out;
}

void check_closed(const SingularPD& pd) {
  struct Uses {
    int inputs = 0;
    int outputs = 0;
  };
  std::map<std::string, Uses> uses;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& ports = pd.crossings[i].ports;
    for (std::size_t p = 0; p < 4; ++p) {
      Uses& u = uses[ports[p]];
      (p < 2 ? u.inputs : u.outputs) += 1;
      if (u.inputs + u.outputs > 2 || u.inputs > 1 || u.outputs > 1) {
        throw Error(ErrorKind::duplicate_port,
                    "label '" + ports[p] + "' used again at crossing " + std::to_string(i + 1) +
                        (p < 2 ? " as an input" : " as an output"));
      }
    }
  }
  for (const auto& [label, u] : uses) {
    if (u.inputs != 1 || u.outputs != 1) {
      throw Error(ErrorKind::dangling_arc,
                  "label '" + label + "' has " + std::to_string(u.inputs) + " input and " +
                      std::to_string(u.outputs) + " output port(s); expected one of each");
    }
  }
}

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  SingularPD parse() {
    SingularPD pd;
    while (true) {
      skip_blank();
      if (at_end()) break;
      if (text_.substr(pos_, 5) == "name:") {
        pos_ += 5;
        const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
        std::string_view rest = text_.substr(pos_, end - pos_);
        if (const auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
        pd.name = trim(rest);
        pos_ = end;
        continue;
      }
      pd.crossings.push_back(crossing());
      skip_blank();
      if (peek() == ',') ++pos_;
    }
    check_closed(pd);
    return pd;
  }

 private:
  static std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_blank() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        ++pos_;
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    throw SyntaxError(ErrorKind::syntax_error, what, pos_, std::move(expected));
  }

  void expect(char c) {
    skip_blank();
    if (peek() != c) fail(std::string("expected '") + c + "'", {std::string("'") + c + "'"});
    ++pos_;
  }

  std::string label() {
    skip_blank();
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                         peek() == '\'')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a semi-arc label", {"label"});
    std::string out(text_.substr(start, pos_ - start));
    if (out == "R1" || out == "R2") {
      pos_ = start;
      fail("'" + out + "' is reserved for the singular operations", {"label"});
    }
    return out;
  }

  Crossing crossing() {
    Crossing c;
    switch (peek()) {
      case 'P': c.kind = CrossingKind::positive; break;
      case 'N': c.kind = CrossingKind::negative; break;
      case 'S': c.kind = CrossingKind::singular; break;
      default: fail("expected a crossing", {"P[", "N[", "S["});
    }
    ++pos_;
    expect('[');
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != 0) expect(',');
      c.ports[i] = label();
    }
    expect(']');
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

char letter(CrossingKind k) {
  switch (k) {
    case CrossingKind::positive: return 'P';
    case CrossingKind::negative: return 'N';
    case CrossingKind::singular: return 'S';
  }
  return '?';
}

}  // namespace

SingularPD parse_pd(std::string_view text) { return PdParser(text).parse(); }

std::string render_pd(const SingularPD& pd) {
  std::ostringstream os;
  if (!pd.name.empty()) os << "name: " << pd.name << '\n';
  for (const Crossing& c : pd.crossings) {
    os << letter(c.kind) << '[' << c.ports[0] << ',' << c.ports[1] << ',' << c.ports[2] << ','
       << c.ports[3] << "]\n";
  }
  return os.str();
}

SingPresentation pd_to_presentation(const SingularPD& pd) {
  check_closed(pd);
  std::vector<Relation> relations;
  relations.reserve(2 * pd.crossings.size());
  for (const Crossing& c : pd.crossings) {
    const Term a = Term::generator(c.ports[0]);
    const Term b = Term::generator(c.ports[1]);
    const Term out1 = Term::generator(c.ports[2]);
    const Term out2 = Term::generator(c.ports[3]);
    switch (c.kind) {
      case CrossingKind::positive:
        relations.push_back({out1, Term::star(a, b)});
        relations.push_back({out2, b});
        break;
      case CrossingKind::negative:
        relations.push_back({out1, Term::bar(a, b)});
        relations.push_back({out2, b});
        break;
      case CrossingKind::singular:
        relations.push_back({out1, Term::r1(a, b)});
        relations.push_back({out2, Term::r2(a, b)});
        break;
    }
  }
  return SingPresentation(pd.labels(), std::move(relations), pd.name);
}

}  // namespace sq
