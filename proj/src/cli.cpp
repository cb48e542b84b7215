#include "singquandle/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "singquandle/corpus.hpp"
#include "singquandle/diagram.hpp"
#include "singquandle/formula.hpp"
#include "singquandle/io.hpp"
#include "singquandle/polynomial.hpp"
#include "singquandle/presentation.hpp"

namespace sq::cli {

namespace {

enum class Format { human, machine };

constexpr std::string_view kCorpusPrefix = "corpus:";

bool is_corpus_ref(std::string_view ref) { return ref.substr(0, kCorpusPrefix.size()) == kCorpusPrefix; }

std::string_view corpus_id(std::string_view ref) { return ref.substr(kCorpusPrefix.size()); }

std::string lower_extension(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

SingquandleDocument load_sq_document(const std::string& ref) {
  if (is_corpus_ref(ref)) return corpus::load_singquandle_document(corpus_id(ref));
  return parse_singquandle_document(read_text_file(ref));
}

FiniteSingquandle load_sq(const std::string& ref) { return load_sq_document(ref).algebra; }

SingularPD load_pd_ref(const std::string& ref) {
  if (is_corpus_ref(ref)) return corpus::load_pd(corpus_id(ref));
  return parse_pd(read_text_file(ref));
}

// Links may be given as a presentation or as a PD code. Files are told apart
// by extension, falling back to looking for a `generators:` line.
SingPresentation load_link(const std::string& ref) {
  if (is_corpus_ref(ref)) return corpus::load_link(corpus_id(ref));
  const std::string text = read_text_file(ref);
  const std::string ext = lower_extension(ref);
  if (ext == ".pd") return pd_to_presentation(parse_pd(text));
  if (ext == ".pres" || text.find("generators:") != std::string::npos) {
    return parse_presentation(text);
  }
  return pd_to_presentation(parse_pd(text));
}

std::string join_labels(const FiniteSingquandle& q, const std::vector<ElementId>& xs,
                        std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += sep;
    out += q.label(xs[i]);
  }
  return out;
}

void print_report(std::ostream& out, const ValidationReport& report, Format format) {
  constexpr Axiom kAxioms[] = {Axiom::idempotency, Axiom::right_invertibility,
                               Axiom::self_distributivity, Axiom::singular_1,
                               Axiom::singular_2, Axiom::singular_3,
                               Axiom::singular_4, Axiom::singular_5};
  for (Axiom axiom : kAxioms) {
    std::vector<const Violation*> hits;
    for (const Violation& v : report.violations) {
      if (v.axiom == axiom) hits.push_back(&v);
    }
    if (format == Format::machine) {
      out << to_string(axiom) << '\t' << (hits.empty() ? "ok" : "violated") << '\t'
          << hits.size() << '\n';
      continue;
    }
    out << to_string(axiom) << ": " << (hits.empty() ? "ok" : "violated");
    if (!hits.empty()) out << "  [" << identity_of(axiom) << ']';
    out << '\n';
    for (const Violation* v : hits) {
      out << "  at (";
      for (std::size_t i = 0; i < v->witness.size(); ++i) {
        if (i != 0) out << ", ";
        out << v->witness[i].index;
      }
      out << ")\n";
    }
  }
  if (report.truncated) out << (format == Format::machine ? "truncated\n" : "(report truncated)\n");
}

int cmd_validate(const std::string& ref, Format format, std::ostream& out) {
  try {
    const FiniteSingquandle q = load_sq(ref);
    print_report(out, ValidationReport{}, format);
    if (format == Format::machine) {
      out << "valid\t" << q.order() << '\n';
    } else {
      out << "valid singquandle of order " << q.order() << '\n';
    }
    return exit_ok;
  } catch (const ValidationFailure& failure) {
    print_report(out, failure.report(), format);
    out << (format == Format::machine ? "invalid\t" : "invalid: ") << to_string(failure.kind())
        << '\n';
    return exit_validation;
  }
}

// Rows and columns in the given residue order, e.g. `1,2,3,0`.
ElementLabels residue_display_order(std::uint32_t n, const std::string& list) {
  ElementLabels labels = ElementLabels::residues(n);
  if (list.empty()) return labels;
  labels.display_order.clear();
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) {
    std::uint32_t v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size() || v >= n) {
      throw Error(ErrorKind::index_out_of_range, "display order entry '" + token + "'");
    }
    labels.display_order.push_back(ElementId{v});
  }
  return labels;
}

int cmd_gen_affine(std::uint64_t n, std::int64_t t, std::int64_t s, bool formula_form,
                   const std::string& display_order, const std::string& output,
                   std::ostream& out) {
  const SingquandleFormulas formulas = affine_formulas(n, t, s);
  const auto order = static_cast<std::uint32_t>(n);
  const FiniteSingquandle q =
      table_singquandle(order, formulas.star.tabulate(), formulas.r1.tabulate(),
                        formulas.r2.tabulate(), residue_display_order(order, display_order));
  const std::string text =
      formula_form ? write_singquandle_formulas(formulas) : write_singquandle_tables(q);
  if (output.empty() || output == "-") {
    out << text;
    return exit_ok;
  }
  std::ofstream file(output, std::ios::binary);
  file << text;
  if (!file) throw Error(ErrorKind::io_error, "cannot write '" + output + "'");
  return exit_ok;
}

ElementSet parse_subset(const FiniteSingquandle& q, const std::string& list) {
  ElementSet subset;
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t{}");
    const auto last = token.find_last_not_of(" \t{}");
    if (first == std::string::npos) continue;
    subset.insert(element_by_label(q, token.substr(first, last - first + 1)));
  }
  return subset;
}

int cmd_color(const std::string& link_ref, const std::string& sq_ref, bool list,
              const std::vector<std::string>& extra_terms, unsigned threads, Format format,
              std::ostream& out) {
  const SingPresentation pres = load_link(link_ref);
  const FiniteSingquandle q = load_sq(sq_ref);
  const std::vector<Homomorphism> homs = enumerate_homs(pres, q, EnumerationOptions{threads});
  if (!list) {
    out << homs.size() << '\n';
    return exit_ok;
  }

  std::vector<Term> columns;
  for (const std::string& text : extra_terms) {
    Term t = parse_term(text);
    for (const std::string& g : generators_of(t)) {
      if (!pres.generator_index(g)) {
        throw Error(ErrorKind::unknown_generator, "column term uses '" + g + "'");
      }
    }
    columns.push_back(std::move(t));
  }

  const std::string_view sep = format == Format::machine ? "\t" : " ";
  std::vector<std::string> header = pres.generators();
  for (const Term& t : columns) header.push_back(render_term(t));
  header.push_back("image");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i != 0) out << (format == Format::human && i + 1 == header.size() ? " | " : sep);
    out << header[i];
  }
  out << '\n';

  for (const Homomorphism& h : homs) {
    std::vector<ElementId> cells = h.images;
    const Assignment assignment = assignment_of(pres, h);
    for (const Term& t : columns) cells.push_back(eval(t, assignment, q));
    const ElementSet image = hom_image(pres, h, q);
    out << join_labels(q, cells, sep);
    if (!cells.empty()) out << (format == Format::human ? " | " : "\t");
    const std::vector<ElementId> members(image.begin(), image.end());
    if (format == Format::human) {
      out << '{' << join_labels(q, members, ",") << "}\n";
    } else {
      out << join_labels(q, members, ",") << '\n';
    }
  }
  if (format == Format::human) {
    out << "count: " << homs.size() << '\n';
  } else {
    out << "count\t" << homs.size() << '\n';
  }
  return exit_ok;
}

int cmd_iso(const std::string& a_ref, const std::string& b_ref, Format format,
            std::ostream& out) {
  const FiniteSingquandle a = load_sq(a_ref);
  const FiniteSingquandle b = load_sq(b_ref);
  const IsoResult result = are_isomorphic(a, b);
  if (!result) {
    if (format == Format::machine) {
      out << "not-isomorphic\t" << to_string(result.outcome) << '\n';
    } else {
      out << "not isomorphic (" << to_string(result.outcome) << ")\n";
    }
    return exit_ok;
  }
  out << "isomorphic\n";
  for (ElementId x : a.labels().display_order) {
    const ElementId y = result.witness[x.index];
    if (format == Format::machine) {
      out << a.label(x) << '\t' << b.label(y) << '\n';
    } else {
      out << "  " << a.label(x) << " -> " << b.label(y) << '\n';
    }
  }
  return exit_ok;
}

int cmd_corpus(std::ostream& out) {
  for (const corpus::CorpusEntry& e : corpus::entries()) {
    out << e.id << '\t' << corpus::to_string(e.kind) << '\n';
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite oriented singquandles and coloring invariants of singular links",
               "singquandle"};
  app.require_subcommand(1);
  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));

  std::string sq_ref, sq_ref2, link_ref, pd_ref, subset, output, display_order;
  std::uint64_t n = 0;
  std::int64_t t = 0, s = 0;
  bool list = false, formula_form = false;
  unsigned threads = 0;
  std::vector<std::string> extra_terms;

  const char* sq_help = "Singquandle file or corpus:<id>";
  const char* link_help = "Presentation or PD file, or corpus:<id>";

  auto* validate = app.add_subcommand("validate", "Check every axiom and print the report");
  validate->add_option("sq", sq_ref, sq_help)->required();

  auto* gen = app.add_subcommand("gen", "Generate a singquandle");
  gen->require_subcommand(1);
  auto* affine = gen->add_subcommand("affine", "Affine singquandle over Z_n");
  affine->add_option("--n", n, "Modulus")->required()->check(CLI::Range(1u, 1u << 16));
  affine->add_option("--t", t, "Star coefficient, a unit mod n")->required();
  affine->add_option("--s", s, "R1 coefficient")->required();
  affine->add_option("-o,--output", output, "Output file (default stdout)");
  affine->add_flag("--formula", formula_form, "Emit the formula form instead of tables");
  affine->add_option("--display-order", display_order,
                     "Row/column order as comma-separated residues, e.g. 1,2,3,0");

  auto* sqp_cmd = app.add_subcommand("sqp", "Singquandle polynomial");
  sqp_cmd->add_option("sq", sq_ref, sq_help)->required();

  auto* ssqp_cmd = app.add_subcommand("ssqp", "Subsingquandle polynomial of a subset");
  ssqp_cmd->add_option("sq", sq_ref, sq_help)->required();
  ssqp_cmd->add_option("--subset", subset, "Comma-separated element labels")->required();

  auto* color = app.add_subcommand("color", "Count colorings (homomorphisms)");
  color->add_option("link", link_ref, link_help)->required();
  color->add_option("sq", sq_ref, sq_help)->required();
  color->add_flag("--list", list, "List every coloring with its image subsingquandle");
  color->add_option("--term", extra_terms, "Extra column: a term evaluated per coloring");
  color->add_option("--threads", threads, "Worker threads (0 = automatic)");

  auto* phi = app.add_subcommand("phi", "Multiset of image subsingquandle polynomials");
  phi->add_option("link", link_ref, link_help)->required();
  phi->add_option("sq", sq_ref, sq_help)->required();

  auto* iso = app.add_subcommand("iso", "Decide isomorphism and print a witness");
  iso->add_option("sq1", sq_ref, sq_help)->required();
  iso->add_option("sq2", sq_ref2, sq_help)->required();

  auto* pd2rel = app.add_subcommand("pd2rel", "Compile a PD code to a presentation");
  pd2rel->add_option("pd", pd_ref, "PD file or corpus:<id>")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "List bundled corpus entries");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, error_out;
    const int code = app.exit(e, help_out, error_out);
    out << help_out.str();
    err << error_out.str();
    return code == 0 ? exit_ok : exit_usage;
  }

  const Format format = format_name == "machine" ? Format::machine : Format::human;
  try {
    if (*validate) return cmd_validate(sq_ref, format, out);
    if (*affine) return cmd_gen_affine(n, t, s, formula_form, display_order, output, out);
    if (*sqp_cmd) {
      const SqPolynomial p = sqp(load_sq(sq_ref));
      out << (format == Format::machine ? render_machine(p) : render(p)) << '\n';
      return exit_ok;
    }
    if (*ssqp_cmd) {
      const FiniteSingquandle q = load_sq(sq_ref);
      const SqPolynomial p = ssqp(q, parse_subset(q, subset));
      out << (format == Format::machine ? render_machine(p) : render(p)) << '\n';
      return exit_ok;
    }
    if (*color) return cmd_color(link_ref, sq_ref, list, extra_terms, threads, format, out);
    if (*phi) {
      const PhiInvariant value = phi_ssqp(load_link(link_ref), load_sq(sq_ref));
      if (format == Format::machine) {
        out << render_phi_machine(value);
      } else {
        out << render_phi(value) << '\n';
      }
      return exit_ok;
    }
    if (*iso) return cmd_iso(sq_ref, sq_ref2, format, out);
    if (*pd2rel) {
      out << render_presentation(pd_to_presentation(load_pd_ref(pd_ref)));
      return exit_ok;
    }
    if (*corpus_cmd) return cmd_corpus(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (category(e.kind())) {
      case ErrorCategory::parse: return exit_parse;
      case ErrorCategory::validation: return exit_validation;
      case ErrorCategory::usage: return exit_usage;
    }
  }
  return exit_usage;
}

}  // namespace sq::cli
