#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "singquandle/corpus.hpp"
#include "singquandle/formula.hpp"
#include "singquandle/io.hpp"

using namespace sq;

TEST_CASE("formula parsing and evaluation") {
  const auto f = BivariatePolyFormula::parse("4*x^2 + 5*x + 4*y", 8);
  CHECK(f.to_string() == "4*x^2 + 5*x + 4*y");
  CHECK(f.evaluate(3, 1) == (4 * 9 + 15 + 4) % 8);
  CHECK(BivariatePolyFormula::parse(f.to_string(), 8) == f);

  // Juxtaposition, signs and reduction mod n.
  CHECK(BivariatePolyFormula::parse("3x - 2y + 4xy", 4) ==
        BivariatePolyFormula::parse("3*x + 2*y", 4));
  CHECK(BivariatePolyFormula::parse("x + x + x", 5) == BivariatePolyFormula::parse("3*x", 5));
  CHECK(BivariatePolyFormula::parse("6 + 5*x + 6*x*y", 8).evaluate(1, 1) == (6 + 5 + 6) % 8);
  CHECK(BivariatePolyFormula::parse("8*x", 8).to_string() == "0");
  CHECK(BivariatePolyFormula::parse("0", 3).tabulate() == RawTable(3, std::vector<std::uint32_t>(3, 0)));

  CHECK_THROWS_AS(BivariatePolyFormula::parse("x^5", 8), SyntaxError);
  CHECK_THROWS_AS(BivariatePolyFormula::parse("3*z", 8), SyntaxError);
  CHECK_THROWS_AS(BivariatePolyFormula::parse("3 +", 8), SyntaxError);
  try {
    BivariatePolyFormula::parse("x ++ y", 8);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.kind() == ErrorKind::malformed_formula);
  }
}

TEST_CASE("formula singquandles") {
  const auto x = BivariatePolyFormula::parse("x", 3);
  const auto y = BivariatePolyFormula::parse("y", 3);
  const FiniteSingquandle t3 = formula_singquandle(x, x, y);
  CHECK(oracle::is_singquandle(oracle::tables_of(t3)));

  try {
    formula_singquandle(x, x, BivariatePolyFormula::parse("y", 4));
    FAIL("expected ModulusMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::modulus_mismatch);
  }

  // The two transcriptions of the first Z8 structure coincide.
  CHECK(corpus::load_singquandle("X-Z8-a") == corpus::load_singquandle("X-Z8-a-tables"));
  CHECK(corpus::load_singquandle("Y-Z4") == corpus::load_singquandle("Y-Z4-formula"));
}

TEST_CASE("affine family") {
  CHECK(affine_singquandle(4, 3, 2) == corpus::load_singquandle("X-Z4"));
  try {
    affine_singquandle(4, 2, 1);
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_invertible);
  }
  // Exhaustive oracle over Z4: every unit t and every s gives a structure.
  int valid = 0;
  for (std::int64_t t = 0; t < 4; ++t) {
    for (std::int64_t s = 0; s < 4; ++s) {
      if (std::gcd(t, std::int64_t{4}) != 1) {
        CHECK_THROWS_AS(affine_singquandle(4, t, s), Error);
        continue;
      }
      const oracle::Algebra ref = oracle::affine(4, t, s);
      CHECK(oracle::is_singquandle(ref));
      const FiniteSingquandle q = affine_singquandle(4, t, s);
      CHECK(oracle::tables_of(q).star == ref.star);
      CHECK(oracle::tables_of(q).r1 == ref.r1);
      CHECK(oracle::tables_of(q).r2 == ref.r2);
      ++valid;
    }
  }
  CHECK(valid == 8);
  // Negative parameters reduce mod n.
  CHECK(affine_singquandle(5, -1, -2) == affine_singquandle(5, 4, 3));
}

TEST_CASE("table file format") {
  const std::string text =
      "# comment\n"
      "singquandle n=2\n"
      "labels: b a\n"
      "star:\n"
      "b b\n"
      "a a\n"
      "R1:\n"
      "b a\n"
      "b a\n"
      "R2:\n"
      "b b   # trailing comment\n"
      "a a\n";
  const FiniteSingquandle q = parse_singquandle(text);
  CHECK(q.order() == 2);
  CHECK(q.label(ElementId{0}) == "b");
  CHECK(element_by_label(q, "a").index == 1);
  CHECK(parse_singquandle(write_singquandle_tables(q)) == q);
  CHECK(write_singquandle_tables(q).find("labels: b a") != std::string::npos);

  const FiniteSingquandle x = corpus::load_singquandle("X-Z4");
  const std::string written = write_singquandle_tables(x);
  CHECK(written.find("labels: 1 2 3 0") != std::string::npos);
  const FiniteSingquandle back = parse_singquandle(written);
  CHECK(back == x);
  CHECK(back.labels().display_order == x.labels().display_order);

  CHECK(write_singquandle_tables(affine_singquandle(3, 2, 0)).find("labels") == std::string::npos);
}

TEST_CASE("table file errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_singquandle(text);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::io_error;
  };
  CHECK(kind_of("") == ErrorKind::syntax_error);
  CHECK(kind_of("quandle n=2\n") == ErrorKind::syntax_error);
  CHECK(kind_of("singquandle n=0\n") == ErrorKind::syntax_error);
  CHECK(kind_of("singquandle n=2\nstar:\n0 0\n1 1\nR1:\n0 0\n1 1\n") == ErrorKind::malformed_table);
  CHECK(kind_of("singquandle n=2\nstar:\n0 0\n1\nR1:\n0 0\n1 1\nR2:\n0 0\n1 1\n") ==
        ErrorKind::malformed_table);
  CHECK(kind_of("singquandle n=2\nstar:\n0 0\n1 7\nR1:\n0 0\n1 1\nR2:\n0 0\n1 1\n") ==
        ErrorKind::malformed_table);
  CHECK(kind_of("singquandle n=2\nlabels: a\nstar:\n") == ErrorKind::syntax_error);
  CHECK(kind_of("singquandle n=2\nstar:\n1 1\n0 0\nR1:\n0 0\n1 1\nR2:\n0 0\n1 1\n") ==
        ErrorKind::not_a_quandle);
  CHECK(kind_of("singquandle-formula n=4\nstar = x\nR1 = x\n") == ErrorKind::malformed_formula);
  CHECK(kind_of("singquandle-formula n=4\nstar = x\nR1 = x\nR3 = y\n") == ErrorKind::syntax_error);
  CHECK(kind_of("singquandle-formula n=4\nstar = 2*x + 3*y\nR1 = x\nR2 = y\n") ==
        ErrorKind::not_a_quandle);

  try {
    parse_singquandle("singquandle n=2\nstar:\nbogus line here\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("formula file format") {
  const SingquandleDocument doc = corpus::load_singquandle_document("X-Z8-a");
  REQUIRE(doc.formulas);
  CHECK(doc.formulas->r2.to_string() == "4*x^2 + 5*x + 4*y");
  const SingquandleDocument again = parse_singquandle_document(write_singquandle_formulas(*doc.formulas));
  CHECK(again.algebra == doc.algebra);
  CHECK(again.formulas->star == doc.formulas->star);
  CHECK_FALSE(corpus::load_singquandle_document("X-Z4").formulas);
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "singquandle-io-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "q.sq";
  {
    std::ofstream out(path);
    out << write_singquandle_tables(affine_singquandle(5, 2, 3));
  }
  CHECK(parse_singquandle(read_text_file(path)) == affine_singquandle(5, 2, 3));
  std::filesystem::remove_all(dir);
  try {
    read_text_file(dir / "missing.sq");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io_error);
  }
}
