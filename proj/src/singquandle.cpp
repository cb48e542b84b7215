#include "singquandle/singquandle.hpp"

#include <algorithm>
#include <sstream>

namespace sq {

OperationTable::OperationTable(std::uint32_t order, std::vector<std::uint32_t> cells)
    : order_(order), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(order_) * order_) {
    throw Error(ErrorKind::malformed_table, "table has " + std::to_string(cells_.size()) +
                                                " cells, expected " +
                                                std::to_string(order_ * order_));
  }
}

std::vector<std::vector<std::uint32_t>> OperationTable::rows() const {
  std::vector<std::vector<std::uint32_t>> out(order_);
  for (std::uint32_t x = 0; x < order_; ++x) {
    out[x].assign(cells_.begin() + static_cast<std::ptrdiff_t>(x) * order_,
                  cells_.begin() + static_cast<std::ptrdiff_t>(x + 1) * order_);
  }
  return out;
}

std::string_view to_string(Operation op) noexcept {
  switch (op) {
    case Operation::star: return "*";
    case Operation::bar: return "/";
    case Operation::r1: return "R1";
    case Operation::r2: return "R2";
  }
  return "?";
}

std::string_view to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::idempotency: return "idempotency";
    case Axiom::right_invertibility: return "right-invertibility";
    case Axiom::self_distributivity: return "self-distributivity";
    case Axiom::singular_1: return "singular-1";
    case Axiom::singular_2: return "singular-2";
    case Axiom::singular_3: return "singular-3";
    case Axiom::singular_4: return "singular-4";
    case Axiom::singular_5: return "singular-5";
  }
  return "?";
}

std::string_view identity_of(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::idempotency: return "x*x = x";
    case Axiom::right_invertibility: return "x -> x*y is a bijection";
    case Axiom::self_distributivity: return "(x*y)*z = (x*z)*(y*z)";
    case Axiom::singular_1: return "R1(a/b,c)*b = R1(a,c*b)";
    case Axiom::singular_2: return "R2(a/b,c) = R2(a,c*b)/b";
    case Axiom::singular_3: return "(b/R1(a,c))*a = (b*R2(a,c))/c";
    case Axiom::singular_4: return "R2(a,b) = R1(b,a*b)";
    case Axiom::singular_5: return "R1(a,b)*R2(a,b) = R2(b,a*b)";
  }
  return "?";
}

bool is_quandle_axiom(Axiom axiom) noexcept {
  return axiom == Axiom::idempotency || axiom == Axiom::right_invertibility ||
         axiom == Axiom::self_distributivity;
}

bool ValidationReport::has_quandle_violation() const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return is_quandle_axiom(v.axiom); });
}

ElementLabels ElementLabels::residues(std::uint32_t order) {
  ElementLabels labels;
  labels.names.reserve(order);
  labels.display_order.reserve(order);
  for (std::uint32_t i = 0; i < order; ++i) {
    labels.names.push_back(std::to_string(i));
    labels.display_order.push_back(ElementId{i});
  }
  return labels;
}

namespace {

std::string describe(const ValidationReport& report) {
  std::ostringstream os;
  os << report.violations.size() << (report.truncated ? "+" : "") << " violation(s)";
  if (!report.violations.empty()) {
    const Violation& first = report.violations.front();
    os << "; first: " << to_string(first.axiom) << " [" << identity_of(first.axiom)
       << "] witness (";
    for (std::size_t i = 0; i < first.witness.size(); ++i) {
      if (i != 0) os << ",";
      os << first.witness[i].index;
    }
    os << ")";
  }
  return os.str();
}

OperationTable to_table(std::uint32_t order, const RawTable& raw, std::string_view name) {
  if (raw.size() != order) {
    throw Error(ErrorKind::malformed_table, std::string(name) + " has " +
                                                std::to_string(raw.size()) + " rows, expected " +
                                                std::to_string(order));
  }
  std::vector<std::uint32_t> cells;
  cells.reserve(static_cast<std::size_t>(order) * order);
  for (std::uint32_t x = 0; x < order; ++x) {
    if (raw[x].size() != order) {
      throw Error(ErrorKind::malformed_table,
                  std::string(name) + " row " + std::to_string(x) + " has " +
                      std::to_string(raw[x].size()) + " entries, expected " +
                      std::to_string(order));
    }
    for (std::uint32_t y = 0; y < order; ++y) {
      if (raw[x][y] >= order) {
        throw Error(ErrorKind::malformed_table,
                    std::string(name) + "[" + std::to_string(x) + "][" + std::to_string(y) +
                        "] = " + std::to_string(raw[x][y]) + " is out of range");
      }
      cells.push_back(raw[x][y]);
    }
  }
  return OperationTable(order, std::move(cells));
}

class ReportBuilder {
 public:
  bool full() const { return report_.truncated; }

  void add(Axiom axiom, std::initializer_list<std::uint32_t> witness) {
    if (report_.violations.size() >= ValidationReport::max_violations) {
      report_.truncated = true;
      return;
    }
    Violation v{axiom, {}};
    for (std::uint32_t w : witness) v.witness.push_back(ElementId{w});
    report_.violations.push_back(std::move(v));
  }

  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

// Returns the column index of the first non-bijective right translation, or
// order when every column is a permutation.
std::uint32_t first_non_bijective_column(const OperationTable& star) {
  const std::uint32_t n = star.order();
  std::vector<char> seen(n);
  for (std::uint32_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t z = star.at(x, y);
      if (seen[z]) return y;
      seen[z] = 1;
    }
  }
  return n;
}

ValidationReport validate_tables(const OperationTable& star, const OperationTable& r1,
                                 const OperationTable& r2) {
  const std::uint32_t n = star.order();
  ReportBuilder out;

  for (std::uint32_t x = 0; x < n; ++x) {
    if (star.at(x, x) != x) out.add(Axiom::idempotency, {x});
  }

  bool invertible = true;
  {
    std::vector<char> seen(n);
    for (std::uint32_t y = 0; y < n; ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::uint32_t x = 0; x < n; ++x) {
        const std::uint32_t z = star.at(x, y);
        if (seen[z]) {
          out.add(Axiom::right_invertibility, {y});
          invertible = false;
          break;
        }
        seen[z] = 1;
      }
    }
  }

  for (std::uint32_t a = 0; a < n && !out.full(); ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (star.at(star.at(a, b), c) != star.at(star.at(a, c), star.at(b, c))) {
          out.add(Axiom::self_distributivity, {a, b, c});
        }
      }
    }
  }

  // The first three singular identities involve bar, which only exists when
  // every right translation is invertible.
  if (invertible) {
    const OperationTable bar = derive_bar(star);
    for (std::uint32_t a = 0; a < n && !out.full(); ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        for (std::uint32_t c = 0; c < n; ++c) {
          if (star.at(r1.at(bar.at(a, b), c), b) != r1.at(a, star.at(c, b))) {
            out.add(Axiom::singular_1, {a, b, c});
          }
          if (r2.at(bar.at(a, b), c) != bar.at(r2.at(a, star.at(c, b)), b)) {
            out.add(Axiom::singular_2, {a, b, c});
          }
          if (star.at(bar.at(b, r1.at(a, c)), a) != bar.at(star.at(b, r2.at(a, c)), c)) {
            out.add(Axiom::singular_3, {a, b, c});
          }
        }
      }
    }
  }

  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (r2.at(a, b) != r1.at(b, star.at(a, b))) out.add(Axiom::singular_4, {a, b});
      if (star.at(r1.at(a, b), r2.at(a, b)) != r2.at(b, star.at(a, b))) {
        out.add(Axiom::singular_5, {a, b});
      }
    }
  }
  return out.take();
}

ElementLabels checked_labels(std::uint32_t order, ElementLabels labels) {
  if (labels.names.empty() && labels.display_order.empty()) return ElementLabels::residues(order);
  if (labels.names.size() != order) {
    throw Error(ErrorKind::malformed_table, "expected " + std::to_string(order) + " labels, got " +
                                                std::to_string(labels.names.size()));
  }
  std::set<std::string> distinct(labels.names.begin(), labels.names.end());
  if (distinct.size() != order) throw Error(ErrorKind::malformed_table, "labels are not distinct");
  if (labels.display_order.empty()) {
    for (std::uint32_t i = 0; i < order; ++i) labels.display_order.push_back(ElementId{i});
  }
  std::set<ElementId> shown(labels.display_order.begin(), labels.display_order.end());
  if (labels.display_order.size() != order || shown.size() != order ||
      shown.rbegin()->index >= order) {
    throw Error(ErrorKind::malformed_table, "display order is not a permutation of the carrier");
  }
  return labels;
}

}  // namespace

ValidationFailure::ValidationFailure(ErrorKind kind, ValidationReport report)
    : Error(kind, describe(report)), report_(std::move(report)) {}

const OperationTable& FiniteSingquandle::table(Operation op) const noexcept {
  switch (op) {
    case Operation::star: return star_;
    case Operation::bar: return bar_;
    case Operation::r1: return r1_;
    case Operation::r2: return r2_;
  }
  return star_;
}

ValidationReport validate(std::uint32_t order, const RawTable& star, const RawTable& r1,
                          const RawTable& r2) {
  if (order == 0) throw Error(ErrorKind::malformed_table, "order must be positive");
  return validate_tables(to_table(order, star, "star"), to_table(order, r1, "R1"),
                         to_table(order, r2, "R2"));
}

FiniteSingquandle table_singquandle(std::uint32_t order, const RawTable& star, const RawTable& r1,
                                    const RawTable& r2, ElementLabels labels) {
  if (order == 0) throw Error(ErrorKind::malformed_table, "order must be positive");
  FiniteSingquandle q;
  q.star_ = to_table(order, star, "star");
  q.r1_ = to_table(order, r1, "R1");
  q.r2_ = to_table(order, r2, "R2");
  q.labels_ = checked_labels(order, std::move(labels));

  ValidationReport report = validate_tables(q.star_, q.r1_, q.r2_);
  if (!report.ok()) {
    const ErrorKind kind = report.has_quandle_violation() ? ErrorKind::not_a_quandle
                                                          : ErrorKind::not_a_singquandle;
    throw ValidationFailure(kind, std::move(report));
  }
  q.bar_ = derive_bar(q.star_);
  return q;
}

OperationTable derive_bar(const OperationTable& star) {
  const std::uint32_t n = star.order();
  if (const std::uint32_t y = first_non_bijective_column(star); y != n) {
    throw Error(ErrorKind::not_right_invertible,
                "right translation by " + std::to_string(y) + " is not a bijection");
  }
  std::vector<std::uint32_t> cells(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      cells[static_cast<std::size_t>(star.at(x, y)) * n + y] = x;
    }
  }
  return OperationTable(n, std::move(cells));
}

ProfileVector profile(const FiniteSingquandle& q, ElementId x) {
  const std::uint32_t n = q.order();
  if (x.index >= n) {
    throw Error(ErrorKind::index_out_of_range,
                "element " + std::to_string(x.index) + " not in carrier of order " +
                    std::to_string(n));
  }
  const OperationTable& star = q.table(Operation::star);
  const OperationTable& r1 = q.table(Operation::r1);
  const OperationTable& r2 = q.table(Operation::r2);
  const std::uint32_t i = x.index;
  ProfileVector p;
  for (std::uint32_t y = 0; y < n; ++y) {
    p.r1 += star.at(i, y) == i;
    p.c1 += star.at(y, i) == y;
    p.r2 += r1.at(i, y) == i;
    p.c2 += r1.at(y, i) == y;
    p.r3 += r2.at(i, y) == i;
    p.c3 += r2.at(y, i) == y;
  }
  return p;
}

ElementSet closure(const FiniteSingquandle& q, const ElementSet& seed) {
  if (seed.empty()) throw Error(ErrorKind::empty_seed, "closure needs a nonempty seed");
  const std::uint32_t n = q.order();
  std::vector<char> member(n, 0);
  std::vector<std::uint32_t> elements;
  for (ElementId x : seed) {
    if (x.index >= n) {
      throw Error(ErrorKind::index_out_of_range, "seed element " + std::to_string(x.index) +
                                                     " not in carrier of order " +
                                                     std::to_string(n));
    }
    member[x.index] = 1;
    elements.push_back(x.index);
  }
  constexpr Operation ops[] = {Operation::star, Operation::r1, Operation::r2};
  // Worklist: every pair is combined exactly once, with `next` marking the
  // first element not yet paired against everything before it.
  for (std::size_t next = 0; next < elements.size(); ++next) {
    const std::uint32_t a = elements[next];
    for (std::size_t j = 0; j <= next; ++j) {
      const std::uint32_t b = elements[j];
      for (Operation op : ops) {
        const OperationTable& t = q.table(op);
        for (std::uint32_t z : {t.at(a, b), t.at(b, a)}) {
          if (!member[z]) {
            member[z] = 1;
            elements.push_back(z);
          }
        }
      }
    }
  }
  ElementSet out;
  for (std::uint32_t z : elements) out.insert(ElementId{z});
  return out;
}

bool is_subsingquandle(const FiniteSingquandle& q, const ElementSet& subset) {
  if (subset.empty()) return false;
  const std::uint32_t n = q.order();
  if (subset.rbegin()->index >= n) return false;
  for (Operation op : {Operation::star, Operation::r1, Operation::r2}) {
    const OperationTable& t = q.table(op);
    for (ElementId a : subset) {
      for (ElementId b : subset) {
        if (!subset.contains(t(a, b))) return false;
      }
    }
  }
  return true;
}

FiniteSingquandle relabel(const FiniteSingquandle& q, std::span<const ElementId> perm) {
  const std::uint32_t n = q.order();
  if (perm.size() != n) {
    throw Error(ErrorKind::not_a_bijection, "permutation has " + std::to_string(perm.size()) +
                                                " entries, expected " + std::to_string(n));
  }
  std::vector<char> hit(n, 0);
  for (ElementId p : perm) {
    if (p.index >= n || hit[p.index]) {
      throw Error(ErrorKind::not_a_bijection, "permutation is not a bijection of the carrier");
    }
    hit[p.index] = 1;
  }
  auto transport = [&](Operation op) {
    const OperationTable& t = q.table(op);
    RawTable out(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        out[perm[x].index][perm[y].index] = perm[t.at(x, y)].index;
      }
    }
    return out;
  };
  return table_singquandle(n, transport(Operation::star), transport(Operation::r1),
                           transport(Operation::r2));
}

bool is_isomorphism(const FiniteSingquandle& a, const FiniteSingquandle& b,
                    std::span<const ElementId> f) {
  const std::uint32_t n = a.order();
  if (b.order() != n || f.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (ElementId y : f) {
    if (y.index >= n || hit[y.index]) return false;
    hit[y.index] = 1;
  }
  for (Operation op : {Operation::star, Operation::r1, Operation::r2}) {
    const OperationTable& ta = a.table(op);
    const OperationTable& tb = b.table(op);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (f[ta.at(x, y)].index != tb.at(f[x].index, f[y].index)) return false;
      }
    }
  }
  return true;
}

}  // namespace sq
