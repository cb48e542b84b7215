#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "singquandle/corpus.hpp"
#include "singquandle/formula.hpp"
#include "singquandle/io.hpp"
#include "singquandle/polynomial.hpp"

using namespace sq;

namespace {

ElementSet set_of(std::initializer_list<std::uint32_t> xs) {
  ElementSet s;
  for (std::uint32_t x : xs) s.insert(ElementId{x});
  return s;
}

RawTable constant_table(std::uint32_t n, bool left) {
  RawTable t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) t[x][y] = left ? x : y;
  return t;
}

}  // namespace

TEST_CASE("printed Z4 tables validate and match the affine construction") {
  const FiniteSingquandle printed = corpus::load_singquandle("X-Z4");
  CHECK(printed.order() == 4);
  CHECK(printed == affine_singquandle(4, 3, 2));
  const oracle::Algebra ref = oracle::affine(4, 3, 2);
  CHECK(oracle::tables_of(printed).star == ref.star);
  CHECK(oracle::tables_of(printed).r1 == ref.r1);
  CHECK(oracle::tables_of(printed).r2 == ref.r2);
  // R2 is the first projection.
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y) CHECK(printed.r2(ElementId{x}, ElementId{y}).index == x);
}

TEST_CASE("one-point algebra is a singquandle") {
  const RawTable t{{0}};
  const FiniteSingquandle q = table_singquandle(1, t, t, t);
  CHECK(q.order() == 1);
  CHECK(q.label(ElementId{0}) == "0");
}

TEST_CASE("changing a diagonal star entry breaks idempotency") {
  const FiniteSingquandle x = corpus::load_singquandle("X-Z4");
  RawTable star = x.table(Operation::star).rows();
  const RawTable r1 = x.table(Operation::r1).rows();
  const RawTable r2 = x.table(Operation::r2).rows();
  star[1][1] = 3;
  const ValidationReport report = validate(4, star, r1, r2);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const Violation& v : report.violations) {
    if (v.axiom == Axiom::idempotency) {
      found = true;
      REQUIRE(v.witness.size() == 1);
      CHECK(v.witness[0].index == 1);
    }
  }
  CHECK(found);
  try {
    table_singquandle(4, star, r1, r2);
    FAIL("expected NotAQuandle");
  } catch (const ValidationFailure& e) {
    CHECK(e.kind() == ErrorKind::not_a_quandle);
    CHECK(e.report().has_quandle_violation());
  }
}

TEST_CASE("malformed tables are rejected before validation") {
  const RawTable good{{0, 0}, {1, 1}};
  CHECK_THROWS_AS(table_singquandle(2, RawTable{{0, 0}}, good, good), Error);
  CHECK_THROWS_AS(table_singquandle(2, RawTable{{0, 2}, {1, 1}}, good, good), Error);
  try {
    validate(2, RawTable{{0, 5}, {1, 1}}, good, good);
    FAIL("expected MalformedTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::malformed_table);
  }
}

TEST_CASE("a broken singular identity is reported as NotASingquandle") {
  // Trivial quandle with R1 = R2 = second projection violates R2(a,b) = R1(b, a*b).
  const RawTable star = constant_table(3, true);
  const RawTable proj2 = constant_table(3, false);
  const ValidationReport report = validate(3, star, proj2, proj2);
  CHECK_FALSE(report.has_quandle_violation());
  CHECK_FALSE(oracle::is_singquandle({3, star, proj2, proj2}));
  bool eq4 = false;
  for (const Violation& v : report.violations) eq4 |= v.axiom == Axiom::singular_4;
  CHECK(eq4);
  try {
    table_singquandle(3, star, proj2, proj2);
    FAIL("expected NotASingquandle");
  } catch (const ValidationFailure& e) {
    CHECK(e.kind() == ErrorKind::not_a_singquandle);
  }
}

TEST_CASE("violation reports are capped") {
  const std::uint32_t n = 12;
  // Trivial quandle with shifted singular maps: hundreds of failing triples.
  RawTable star(n, std::vector<std::uint32_t>(n)), r1 = star, r2 = star;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      star[x][y] = x;
      r1[x][y] = (x + 1) % n;
      r2[x][y] = (x + 2) % n;
    }
  }
  const ValidationReport report = validate(n, star, r1, r2);
  CHECK(report.violations.size() == ValidationReport::max_violations);
  CHECK(report.truncated);
}

TEST_CASE("derive_bar inverts right translations") {
  SUBCASE("Z4 star 3x+2y is its own inverse") {
    const FiniteSingquandle x = affine_singquandle(4, 3, 2);
    CHECK(x.table(Operation::bar) == x.table(Operation::star));
  }
  SUBCASE("trivial quandle") {
    const OperationTable star(3, {0, 0, 0, 1, 1, 1, 2, 2, 2});
    CHECK(derive_bar(star) == star);
  }
  SUBCASE("Z8 star 5x+4y equals its bar") {
    const FiniteSingquandle q = corpus::load_singquandle("X-Z8-b");
    CHECK(q.table(Operation::bar) == q.table(Operation::star));
  }
  SUBCASE("non-invertible column") {
    const OperationTable star(2, {0, 0, 0, 1});
    try {
      derive_bar(star);
      FAIL("expected NotRightInvertible");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_right_invertible);
    }
  }
}

TEST_CASE("profiles") {
  const FiniteSingquandle x = corpus::load_singquandle("X-Z4");
  for (std::uint32_t i = 0; i < 4; ++i) {
    CHECK(profile(x, ElementId{i}).as_array() == std::array<std::uint32_t, 6>{2, 2, 1, 1, 4, 4});
  }
  const FiniteSingquandle y = corpus::load_singquandle("Y-Z4");
  CHECK(profile(y, element_by_label(y, "1")).as_array() ==
        std::array<std::uint32_t, 6>{2, 4, 0, 0, 1, 1});
  const FiniteSingquandle t = corpus::load_singquandle("trivial-3");
  for (std::uint32_t i = 0; i < 3; ++i) {
    CHECK(profile(t, ElementId{i}).as_array() == std::array<std::uint32_t, 6>{3, 3, 3, 3, 1, 1});
  }
  // Cross-check every corpus algebra against the naive count.
  for (const std::string& id : corpus::ids(corpus::EntryKind::singquandle)) {
    const FiniteSingquandle q = corpus::load_singquandle(id);
    const oracle::Algebra a = oracle::tables_of(q);
    for (std::uint32_t i = 0; i < q.order(); ++i) {
      CHECK(profile(q, ElementId{i}).as_array() == oracle::profile(a, i));
    }
  }
}

TEST_CASE("closure and subsingquandles") {
  const FiniteSingquandle z8 = corpus::load_singquandle("X-Z8-a");
  CHECK(closure(z8, set_of({2, 4})) == set_of({0, 2, 4, 6}));
  CHECK(closure(z8, set_of({1, 3})) == set_of({1, 3, 5, 7}));
  CHECK(closure(z8, set_of({2})) == set_of({2}));
  CHECK_FALSE(is_subsingquandle(z8, set_of({2, 4})));
  CHECK(is_subsingquandle(z8, set_of({0, 2, 4, 6})));
  CHECK_FALSE(is_subsingquandle(z8, {}));
  CHECK_FALSE(is_subsingquandle(z8, set_of({9})));

  const FiniteSingquandle x = corpus::load_singquandle("X-Z4");
  CHECK(is_subsingquandle(x, {element_by_label(x, "1"), element_by_label(x, "3")}));
  ElementSet all;
  for (std::uint32_t i = 0; i < 4; ++i) all.insert(ElementId{i});
  CHECK(is_subsingquandle(x, all));

  CHECK_THROWS_AS(closure(z8, {}), Error);
  CHECK_THROWS_AS(closure(z8, set_of({8})), Error);
}

TEST_CASE("relabel") {
  const FiniteSingquandle x = corpus::load_singquandle("X-Z4");
  std::vector<ElementId> id{{0}, {1}, {2}, {3}};
  CHECK(relabel(x, id) == x);

  std::vector<ElementId> swap{{2}, {1}, {0}, {3}};
  const FiniteSingquandle y = relabel(x, swap);
  const IsoResult r = are_isomorphic(x, y);
  REQUIRE(r);
  CHECK(is_isomorphism(x, y, r.witness));

  std::vector<ElementId> bad{{0}, {0}, {1}, {2}};
  CHECK_THROWS_AS(relabel(x, bad), Error);
  std::vector<ElementId> short_perm{{0}, {1}};
  CHECK_THROWS_AS(relabel(x, short_perm), Error);
}

TEST_CASE("isomorphism outcomes") {
  const FiniteSingquandle x = corpus::load_singquandle("X-Z4");
  const FiniteSingquandle y = corpus::load_singquandle("Y-Z4");
  const IsoResult xy = are_isomorphic(x, y);
  CHECK_FALSE(xy);
  CHECK(xy.outcome == IsoOutcome::sqp_mismatch);
  CHECK(xy.witness.empty());

  const IsoResult self = are_isomorphic(x, x);
  REQUIRE(self);
  CHECK(is_isomorphism(x, x, self.witness));

  // The trivial singquandle of order 4 differs from X in the r3 counts.
  const FiniteSingquandle t4 =
      formula_singquandle(BivariatePolyFormula::parse("x", 4), BivariatePolyFormula::parse("x", 4),
                          BivariatePolyFormula::parse("y", 4));
  CHECK(are_isomorphic(x, t4).outcome == IsoOutcome::sqp_mismatch);
  CHECK(are_isomorphic(x, corpus::load_singquandle("trivial-3")).outcome ==
        IsoOutcome::sqp_mismatch);

  // Same formula-defined and table-transcribed structure.
  CHECK(are_isomorphic(corpus::load_singquandle("X-Z8-a"),
                       corpus::load_singquandle("X-Z8-a-tables")));
  CHECK(are_isomorphic(corpus::load_singquandle("Y-Z4"),
                       corpus::load_singquandle("Y-Z4-formula")));
}

TEST_CASE("isomorphism search reaches the profile and exhaustive stages") {
  // Over Z_5 the affine structures with t=2 and t=3 have equal sqp; a brute
  // force over all 120 bijections decides each pair independently.
  std::vector<FiniteSingquandle> family;
  for (std::int64_t t = 1; t < 5; ++t)
    for (std::int64_t s = 0; s < 5; ++s) family.push_back(affine_singquandle(5, t, s));
  for (const FiniteSingquandle& a : family) {
    for (const FiniteSingquandle& b : family) {
      std::vector<ElementId> perm{{0}, {1}, {2}, {3}, {4}};
      bool any = false;
      do {
        any = any || is_isomorphism(a, b, perm);
      } while (!any && std::next_permutation(perm.begin(), perm.end()));
      const IsoResult r = are_isomorphic(a, b);
      CHECK(static_cast<bool>(r) == any);
      if (r) CHECK(is_isomorphism(a, b, r.witness));
    }
  }
}

TEST_CASE("axioms are recognised with an unusual R1 and trivial star") {
  // The order-2 trivial quandle with R1 = [[1,0],[0,0]] and R2(a,b) = R1(b,a*b).
  const RawTable star{{0, 0}, {1, 1}};
  const RawTable r1{{1, 0}, {0, 0}};
  RawTable r2(2, std::vector<std::uint32_t>(2));
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) r2[a][b] = r1[b][star[a][b]];
  CHECK(oracle::is_singquandle({2, star, r1, r2}));
  CHECK(validate(2, star, r1, r2).ok());
}
