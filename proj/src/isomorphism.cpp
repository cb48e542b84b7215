#include <algorithm>
#include <map>
#include <tuple>

#include "singquandle/polynomial.hpp"
#include "singquandle/singquandle.hpp"

namespace sq {

std::string_view to_string(IsoOutcome outcome) noexcept {
  switch (outcome) {
    case IsoOutcome::isomorphic: return "isomorphic";
    case IsoOutcome::sqp_mismatch: return "sqp-mismatch";
    case IsoOutcome::profile_mismatch: return "profile-mismatch";
    case IsoOutcome::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

constexpr Operation kGenerating[] = {Operation::star, Operation::r1, Operation::r2};

// Per-element invariant finer than the profile: the element's own profile
// together with the multiset, over all partners y, of the profiles reached
// through each operation in both argument positions.
using Signature = std::pair<ProfileVector, std::vector<std::array<ProfileVector, 7>>>;

std::vector<Signature> signatures(const FiniteSingquandle& q) {
  const std::uint32_t n = q.order();
  std::vector<ProfileVector> prof(n);
  for (std::uint32_t x = 0; x < n; ++x) prof[x] = profile(q, ElementId{x});
  std::vector<Signature> out(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    out[x].first = prof[x];
    auto& rows = out[x].second;
    rows.reserve(n);
    for (std::uint32_t y = 0; y < n; ++y) {
      std::array<ProfileVector, 7> row;
      row[0] = prof[y];
      std::size_t k = 1;
      for (Operation op : kGenerating) {
        const OperationTable& t = q.table(op);
        row[k++] = prof[t.at(x, y)];
        row[k++] = prof[t.at(y, x)];
      }
      rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
  }
  return out;
}

class Matcher {
 public:
  Matcher(const FiniteSingquandle& a, const FiniteSingquandle& b, std::vector<int> class_a,
          std::vector<int> class_b)
      : a_(a),
        b_(b),
        n_(a.order()),
        class_a_(std::move(class_a)),
        class_b_(std::move(class_b)),
        forward_(n_, -1),
        backward_(n_, -1) {
    std::map<int, std::uint32_t> class_size;
    for (int c : class_a_) ++class_size[c];
    for (std::uint32_t x = 0; x < n_; ++x) order_.push_back(x);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t x, std::uint32_t y) {
      return class_size[class_a_[x]] < class_size[class_a_[y]];
    });
  }

  bool search(std::size_t depth = 0) {
    while (depth < order_.size() && forward_[order_[depth]] >= 0) ++depth;
    if (depth == order_.size()) return true;
    const std::uint32_t x = order_[depth];
    for (std::uint32_t y = 0; y < n_; ++y) {
      if (backward_[y] >= 0 || class_b_[y] != class_a_[x]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, y) && search(depth + 1)) return true;
      undo(mark);
    }
    return false;
  }

  std::vector<ElementId> witness() const {
    std::vector<ElementId> out;
    for (int y : forward_) out.push_back(ElementId{static_cast<std::uint32_t>(y)});
    return out;
  }

 private:
  // Sets f(x) = y and everything that choice forces through the generating
  // operations. Returns false on the first contradiction.
  bool assign(std::uint32_t x, std::uint32_t y) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pending{{x, y}};
    while (!pending.empty()) {
      auto [s, t] = pending.back();
      pending.pop_back();
      if (forward_[s] == static_cast<int>(t)) continue;
      if (forward_[s] >= 0 || backward_[t] >= 0 || class_a_[s] != class_b_[t]) return false;
      forward_[s] = static_cast<int>(t);
      backward_[t] = static_cast<int>(s);
      trail_.push_back(s);
      for (std::uint32_t u : trail_) {
        const auto fu = static_cast<std::uint32_t>(forward_[u]);
        for (Operation op : kGenerating) {
          const OperationTable& ta = a_.table(op);
          const OperationTable& tb = b_.table(op);
          pending.emplace_back(ta.at(s, u), tb.at(t, fu));
          pending.emplace_back(ta.at(u, s), tb.at(fu, t));
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t s = trail_.back();
      trail_.pop_back();
      backward_[static_cast<std::size_t>(forward_[s])] = -1;
      forward_[s] = -1;
    }
  }

  const FiniteSingquandle& a_;
  const FiniteSingquandle& b_;
  std::uint32_t n_;
  std::vector<int> class_a_;
  std::vector<int> class_b_;
  std::vector<std::uint32_t> order_;
  std::vector<int> forward_;
  std::vector<int> backward_;
  std::vector<std::uint32_t> trail_;
};

}  // namespace

IsoResult are_isomorphic(const FiniteSingquandle& a, const FiniteSingquandle& b) {
  if (a.order() != b.order() || sqp(a) != sqp(b)) return {IsoOutcome::sqp_mismatch, {}};

  const std::vector<Signature> sig_a = signatures(a);
  const std::vector<Signature> sig_b = signatures(b);
  std::map<Signature, int> ids;
  std::map<int, int> balance;
  std::vector<int> class_a;
  std::vector<int> class_b;
  for (const Signature& s : sig_a) {
    const int id = ids.try_emplace(s, static_cast<int>(ids.size())).first->second;
    class_a.push_back(id);
    ++balance[id];
  }
  for (const Signature& s : sig_b) {
    const int id = ids.try_emplace(s, static_cast<int>(ids.size())).first->second;
    class_b.push_back(id);
    --balance[id];
  }
  for (const auto& [id, diff] : balance) {
    if (diff != 0) return {IsoOutcome::profile_mismatch, {}};
  }

  Matcher matcher(a, b, std::move(class_a), std::move(class_b));
  if (!matcher.search()) return {IsoOutcome::exhausted, {}};
  IsoResult result{IsoOutcome::isomorphic, matcher.witness()};
  if (!is_isomorphism(a, b, result.witness)) {
    throw std::logic_error("isomorphism search produced an invalid witness");
  }
  return result;
}

}  // namespace sq
