#include "singquandle/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <set>
#include <sstream>
#include <thread>

namespace sq {

SingPresentation::SingPresentation(std::vector<std::string> generators,
                                   std::vector<Relation> relations, std::string name)
    : generators_(std::move(generators)), relations_(std::move(relations)), name_(std::move(name)) {
  std::set<std::string, std::less<>> declared;
  for (const std::string& g : generators_) {
    if (!declared.insert(g).second) {
      throw Error(ErrorKind::duplicate_generator, "generator '" + g + "' declared twice");
    }
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    for (const Term* side : {&relations_[i].lhs, &relations_[i].rhs}) {
      for (const std::string& g : generators_of(*side)) {
        if (!declared.contains(g)) {
          throw Error(ErrorKind::unknown_generator,
                      "relation " + std::to_string(i + 1) + " uses undeclared generator '" + g +
                          "'");
        }
      }
    }
  }
}

std::optional<std::size_t> SingPresentation::generator_index(std::string_view name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

Assignment assignment_of(const SingPresentation& pres, const Homomorphism& hom) {
  Assignment out;
  const auto& gens = pres.generators();
  for (std::size_t i = 0; i < gens.size() && i < hom.images.size(); ++i) {
    out.emplace(gens[i], hom.images[i]);
  }
  return out;
}

namespace {

Operation operation_of(Term::Kind kind) {
  switch (kind) {
    case Term::Kind::star: return Operation::star;
    case Term::Kind::bar: return Operation::bar;
    case Term::Kind::r1: return Operation::r1;
    case Term::Kind::r2: return Operation::r2;
    case Term::Kind::generator: break;
  }
  throw std::logic_error("generator is not an operation");
}

}  // namespace

ElementId eval(const Term& term, const Assignment& assignment, const FiniteSingquandle& q) {
  if (term.kind() == Term::Kind::generator) {
    const auto it = assignment.find(term.name());
    if (it == assignment.end()) {
      throw Error(ErrorKind::unbound_generator, "no value for generator '" + term.name() + "'");
    }
    if (it->second.index >= q.order()) {
      throw Error(ErrorKind::index_out_of_range,
                  "generator '" + term.name() + "' is mapped outside the carrier");
    }
    return it->second;
  }
  const ElementId l = eval(term.left(), assignment, q);
  const ElementId r = eval(term.right(), assignment, q);
  return q.apply(operation_of(term.kind()), l, r);
}

bool satisfies(const SingPresentation& pres, const Homomorphism& hom, const FiniteSingquandle& q) {
  if (hom.images.size() != pres.generators().size()) return false;
  const Assignment a = assignment_of(pres, hom);
  return std::all_of(pres.relations().begin(), pres.relations().end(), [&](const Relation& r) {
    return eval(r.lhs, a, q) == eval(r.rhs, a, q);
  });
}

namespace {

// Postfix program over generator slots; cheaper than walking the tree in the
// inner loop of the search.
class Program {
 public:
  Program(const Term& t, const SingPresentation& pres) { emit(t, pres); }

  std::uint32_t run(const std::vector<std::uint32_t>& values, const FiniteSingquandle& q,
                    std::vector<std::uint32_t>& stack) const {
    stack.clear();
    for (const Instr& in : code_) {
      if (in.load) {
        stack.push_back(values[in.slot]);
        continue;
      }
      const std::uint32_t r = stack.back();
      stack.pop_back();
      stack.back() = q.table(in.op).at(stack.back(), r);
    }
    return stack.back();
  }

  const std::vector<std::uint32_t>& slots() const noexcept { return slots_; }
  std::optional<std::uint32_t> single_generator() const {
    if (code_.size() == 1) return code_.front().slot;
    return std::nullopt;
  }

 private:
  struct Instr {
    bool load;
    std::uint32_t slot;
    Operation op;
  };

  void emit(const Term& t, const SingPresentation& pres) {
    if (t.kind() == Term::Kind::generator) {
      const auto slot = static_cast<std::uint32_t>(*pres.generator_index(t.name()));
      code_.push_back(Instr{true, slot, Operation::star});
      if (std::find(slots_.begin(), slots_.end(), slot) == slots_.end()) slots_.push_back(slot);
      return;
    }
    emit(t.left(), pres);
    emit(t.right(), pres);
    code_.push_back(Instr{false, 0, operation_of(t.kind())});
  }

  std::vector<Instr> code_;
  std::vector<std::uint32_t> slots_;
};

struct CompiledRelation {
  Program lhs;
  Program rhs;
  std::vector<std::uint32_t> slots;
};

// One level of the search: which generator is bound, whether its value is
// forced by a relation `g = term(already bound)`, and which relations become
// fully bound (and so checkable) at this level.
struct Step {
  std::uint32_t slot = 0;
  const Program* forced_by = nullptr;
  std::vector<std::size_t> checks;
};

class SearchPlan {
 public:
  explicit SearchPlan(const SingPresentation& pres) {
    for (const Relation& r : pres.relations()) {
      CompiledRelation c{Program(r.lhs, pres), Program(r.rhs, pres), {}};
      c.slots = c.lhs.slots();
      for (std::uint32_t s : c.rhs.slots()) {
        if (std::find(c.slots.begin(), c.slots.end(), s) == c.slots.end()) c.slots.push_back(s);
      }
      relations_.push_back(std::move(c));
    }
    build(static_cast<std::uint32_t>(pres.generators().size()));
  }

  const std::vector<Step>& steps() const noexcept { return steps_; }
  const std::vector<CompiledRelation>& relations() const noexcept { return relations_; }

 private:
  bool all_bound(const Program& p, const std::vector<char>& bound) const {
    return std::all_of(p.slots().begin(), p.slots().end(),
                       [&](std::uint32_t s) { return bound[s] != 0; });
  }

  // First relation forcing an unbound generator, as (slot, program).
  std::optional<std::pair<std::uint32_t, const Program*>> find_forced(
      const std::vector<char>& bound) const {
    for (const CompiledRelation& r : relations_) {
      for (auto [side, other] : {std::pair{&r.lhs, &r.rhs}, std::pair{&r.rhs, &r.lhs}}) {
        const auto g = side->single_generator();
        if (g && !bound[*g] && all_bound(*other, bound)) return std::pair{*g, other};
      }
    }
    return std::nullopt;
  }

  std::size_t forced_closure_size(std::vector<char> bound) const {
    std::size_t count = 0;
    while (const auto f = find_forced(bound)) {
      bound[f->first] = 1;
      ++count;
    }
    return count;
  }

  void build(std::uint32_t generator_count) {
    std::vector<char> bound(generator_count, 0);
    std::vector<std::size_t> position(generator_count, 0);
    while (steps_.size() < generator_count) {
      Step step;
      if (const auto f = find_forced(bound)) {
        step.slot = f->first;
        step.forced_by = f->second;
      } else {
        // Free choice: the generator whose binding forces the most others.
        std::size_t best = 0;
        bool have = false;
        for (std::uint32_t g = 0; g < generator_count; ++g) {
          if (bound[g]) continue;
          std::vector<char> trial = bound;
          trial[g] = 1;
          const std::size_t gain = forced_closure_size(std::move(trial));
          if (!have || gain > best) {
            best = gain;
            step.slot = g;
            have = true;
          }
        }
      }
      bound[step.slot] = 1;
      position[step.slot] = steps_.size();
      steps_.push_back(std::move(step));
    }
    for (std::size_t r = 0; r < relations_.size(); ++r) {
      std::size_t ready = 0;
      for (std::uint32_t s : relations_[r].slots) ready = std::max(ready, position[s]);
      if (!steps_.empty()) steps_[ready].checks.push_back(r);
    }
  }

  std::vector<CompiledRelation> relations_;
  std::vector<Step> steps_;
};

class Searcher {
 public:
  Searcher(const SearchPlan& plan, const FiniteSingquandle& q, std::size_t generator_count)
      : plan_(plan), q_(q), values_(generator_count, 0) {}

  // Explores the subtree where the first step takes a value in `first_values`.
  std::vector<Homomorphism> run(const std::vector<std::uint32_t>& first_values) {
    found_.clear();
    const Step& first = plan_.steps().front();
    for (std::uint32_t v : first_values) {
      values_[first.slot] = v;
      if (checks_pass(first)) descend(1);
    }
    return std::move(found_);
  }

 private:
  bool checks_pass(const Step& step) {
    for (std::size_t r : step.checks) {
      const CompiledRelation& rel = plan_.relations()[r];
      if (rel.lhs.run(values_, q_, stack_) != rel.rhs.run(values_, q_, stack_)) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == plan_.steps().size()) {
      Homomorphism h;
      h.images.reserve(values_.size());
      for (std::uint32_t v : values_) h.images.push_back(ElementId{v});
      found_.push_back(std::move(h));
      return;
    }
    const Step& step = plan_.steps()[depth];
    if (step.forced_by != nullptr) {
      values_[step.slot] = step.forced_by->run(values_, q_, stack_);
      if (checks_pass(step)) descend(depth + 1);
      return;
    }
    for (std::uint32_t v = 0; v < q_.order(); ++v) {
      values_[step.slot] = v;
      if (checks_pass(step)) descend(depth + 1);
    }
  }

  const SearchPlan& plan_;
  const FiniteSingquandle& q_;
  std::vector<std::uint32_t> values_;
  std::vector<std::uint32_t> stack_;
  std::vector<Homomorphism> found_;
};

unsigned pick_threads(const SearchPlan& plan, const FiniteSingquandle& q, unsigned requested) {
  if (requested != 0) return std::min(requested, q.order());
  std::size_t free_steps = 0;
  for (const Step& s : plan.steps()) free_steps += s.forced_by == nullptr;
  // Roughly n^free leaves; small searches are not worth a thread.
  double leaves = 1;
  for (std::size_t i = 0; i < free_steps; ++i) leaves *= q.order();
  if (leaves < 1e5) return 1;
  return std::max(1u, std::min(std::thread::hardware_concurrency(), q.order()));
}

}  // namespace

std::vector<Homomorphism> enumerate_homs(const SingPresentation& pres, const FiniteSingquandle& q,
                                         EnumerationOptions options) {
  const std::size_t g = pres.generators().size();
  if (g == 0) return {Homomorphism{}};

  const SearchPlan plan(pres);
  const unsigned threads = pick_threads(plan, q, options.threads);
  std::vector<std::vector<std::uint32_t>> partitions(threads);
  for (std::uint32_t v = 0; v < q.order(); ++v) partitions[v % threads].push_back(v);

  std::vector<Homomorphism> out;
  if (threads == 1) {
    out = Searcher(plan, q, g).run(partitions.front());
  } else {
    std::vector<std::future<std::vector<Homomorphism>>> jobs;
    for (const auto& part : partitions) {
      jobs.push_back(std::async(std::launch::async, [&plan, &q, g, &part] {
        return Searcher(plan, q, g).run(part);
      }));
    }
    for (auto& job : jobs) {
      std::vector<Homomorphism> chunk = job.get();
      out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet hom_image(const SingPresentation& pres, const Homomorphism& hom,
                     const FiniteSingquandle& q) {
  if (hom.images.size() != pres.generators().size()) {
    throw Error(ErrorKind::unbound_generator, "homomorphism does not cover every generator");
  }
  if (hom.images.empty()) return {};
  const ElementSet image = closure(q, ElementSet(hom.images.begin(), hom.images.end()));
  if (!is_subsingquandle(q, image)) {
    throw std::logic_error("homomorphism image is not a subsingquandle");
  }
  return image;
}

PhiInvariant phi_ssqp(const SingPresentation& pres, const FiniteSingquandle& q) {
  std::vector<ElementSet> images;
  for (const Homomorphism& h : enumerate_homs(pres, q)) images.push_back(hom_image(pres, h, q));
  // The empty presentation has a single (empty) coloring whose image
  // contributes the zero polynomial.
  if (pres.generators().empty()) {
    PhiInvariant phi;
    phi.add(SqPolynomial{}, static_cast<long>(images.size()));
    return phi;
  }
  return phi_from_images(q, images);
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

Term parse_on_line(std::string_view text, std::size_t line, std::size_t offset) {
  try {
    return parse_term(text);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.kind(), "in term '" + trim(text) + "'", e.position() + offset,
                      e.expected(), line);
  }
}

}  // namespace

SingPresentation parse_presentation(std::string_view text) {
  std::string name;
  std::optional<std::vector<std::string>> generators;
  std::vector<Relation> relations;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++line_no;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.rfind("name:", 0) == 0) {
      name = trim(std::string_view(line).substr(5));
      continue;
    }
    if (line.rfind("generators:", 0) == 0) {
      if (generators) {
        throw SyntaxError(ErrorKind::syntax_error, "duplicate generators line", 0, {}, line_no);
      }
      generators.emplace();
      std::string list = line.substr(11);
      std::replace(list.begin(), list.end(), ',', ' ');
      std::istringstream in(list);
      for (std::string g; in >> g;) {
        if (!valid_identifier(g) || g == "R1" || g == "R2") {
          throw SyntaxError(ErrorKind::syntax_error, "invalid generator name '" + g + "'", 0,
                            {"identifier"}, line_no);
        }
        generators->push_back(g);
      }
      continue;
    }
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) {
      throw SyntaxError(ErrorKind::syntax_error, "expected a relation 'lhs = rhs'", 0,
                        {"name:", "generators:", "'='"}, line_no);
    }
    if (raw.find('=', eq + 1) != std::string_view::npos) {
      throw SyntaxError(ErrorKind::syntax_error, "more than one '=' in relation", raw.find('=', eq + 1),
                        {}, line_no);
    }
    relations.push_back(Relation{parse_on_line(raw.substr(0, eq), line_no, 0),
                                 parse_on_line(raw.substr(eq + 1), line_no, eq + 1)});
  }
  if (!generators) {
    throw SyntaxError(ErrorKind::syntax_error, "missing generators line", 0, {"generators:"},
                      line_no);
  }
  return SingPresentation(std::move(*generators), std::move(relations), std::move(name));
}

std::string render_presentation(const SingPresentation& pres) {
  std::ostringstream os;
  if (!pres.name().empty()) os << "name: " << pres.name() << '\n';
  os << "generators:";
  for (std::size_t i = 0; i < pres.generators().size(); ++i) {
    os << (i == 0 ? " " : ", ") << pres.generators()[i];
  }
  os << '\n';
  for (const Relation& r : pres.relations()) {
    os << render_term(r.lhs) << " = " << render_term(r.rhs) << '\n';
  }
  return os.str();
}

}  // namespace sq
