#include <string>
#include <variant>

#include "doctest.h"
#include "fvir/algebroid.hpp"
#include "fvir/parser.hpp"

using namespace fvir;

namespace {

AlgebraSpec parse_algebra_text(const std::string& text) {
  auto spec = parse(text);
  REQUIRE(std::holds_alternative<AlgebraSpec>(spec));
  return std::get<AlgebraSpec>(spec);
}

AlgebroidSpec parse_algebroid_text(const std::string& text) {
  auto spec = parse(text);
  REQUIRE(std::holds_alternative<AlgebroidSpec>(spec));
  return std::get<AlgebroidSpec>(spec);
}

// line/col of the ParseError thrown by parse(text); (0,0) when none is thrown
std::pair<int, int> error_pos(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return {e.line, e.col};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("a one-line-per-fact algebra file") {
  auto spec = parse_algebra_text(
      "algebra kc\n"
      "basis e\n"
      "unit e\n"
      "mul e e = 1 e\n"
      "form e e = 5\n");
  CHECK(spec.name == "kc");
  CHECK(spec.labels == std::vector<std::string>{"e"});
  CHECK(spec.unit == Vec{Scalar(1)});
  CHECK(spec.mult[0][0] == Vec{Scalar(1)});
  CHECK(spec.form[0][0] == Scalar(5));
  auto f = to_algebra(spec);
  CHECK(validate(f).ok());
  CHECK(charge(f) == Scalar(5));
}

TEST_CASE("unspecified products and form entries default to zero") {
  auto spec = parse_algebra_text(
      "algebra dual\n"
      "basis e t\n"
      "unit e\n"
      "mul e e = 1 e\n"
      "mul e t = 1 t\n"
      "mul t e = 1 t\n"
      "form e t = 1\n"
      "form t e = 1\n");
  CHECK(is_zero(spec.mult[1][1]));  // t*t omitted
  CHECK(spec.form[0][0] == Scalar(0));
  CHECK(validate(to_algebra(spec)).ok());
}

TEST_CASE("comments, blank lines and loose whitespace are ignored") {
  auto spec = parse_algebra_text(
      "# header comment\n"
      "algebra   kc   # trailing comment\n"
      "\n"
      "   basis e\n"
      "unit    2/2   e\n"
      "mul e e = 1 e # the product\n"
      "#form e e = 9\n"
      "form e e = -1/2\n");
  CHECK(spec.unit == Vec{Scalar(1)});
  CHECK(spec.form[0][0] == Scalar(-1, 2));
}

TEST_CASE("unit lines accept sums with optional coefficients") {
  auto spec = parse_algebra_text(
      "algebra two\n"
      "basis a b\n"
      "unit 1/3 a + b + 2/3 a\n"
      "mul a a = 1 a\n"
      "mul b b = 1 b\n");
  CHECK(spec.unit == Vec{Scalar(1), Scalar(1)});
}

TEST_CASE("multi-term products with rational coefficients") {
  auto spec = parse_algebra_text(
      "algebra x\n"
      "basis a b\n"
      "unit a\n"
      "mul a b = 1/2 a + -3 b\n"
      "mul b a = 1/2 a + -3 b\n");
  CHECK(spec.mult[0][1] == Vec{Scalar(1, 2), Scalar(-3)});
  CHECK(spec.mult[0][1] == spec.mult[1][0]);
}

TEST_CASE("products are never symmetrized implicitly") {
  auto spec = parse_algebra_text(
      "algebra x\n"
      "basis e t\n"
      "unit e\n"
      "mul e e = 1 e\n"
      "mul e t = 1 t\n");  // mul t e omitted on purpose
  CHECK(is_zero(spec.mult[1][0]));
  auto rep = validate(to_algebra(spec));
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].identity == "commutativity");
}

TEST_CASE("error positions are precise") {
  // undeclared label on the mul line, at the column of the bad label
  CHECK(error_pos("algebra a\nbasis e\nunit e\nmul e e = 1 f\n") == std::pair{4, 13});
  // malformed rational
  CHECK(error_pos("algebra a\nbasis e\nunit e\nform e e = x\n") == std::pair{4, 12});
  // duplicate mul entry reported at the first label of the repeated pair
  CHECK(error_pos("algebra a\nbasis e\nunit e\nmul e e = 1 e\nmul e e = 2 e\n") ==
        std::pair{5, 5});
  // unknown directive at its own column
  CHECK(error_pos("algebra a\nbasis e\nunit e\n  frobnicate e\n") == std::pair{4, 3});
  // missing '=' reported where it should have been
  CHECK(error_pos("algebra a\nbasis e\nunit e\nmul e e 1 e\n") == std::pair{4, 9});
  // comment lines still advance the line counter
  CHECK(error_pos("algebra a\n# one\n# two\nbasis e\nunit e\nmul q e = 1 e\n") ==
        std::pair{6, 5});
}

TEST_CASE("structural errors") {
  CHECK(error_pos("").first == 1);
  CHECK(error_pos("basis e\n") == std::pair{1, 1});
  CHECK(error_pos("algebra\n") == std::pair{1, 8});
  CHECK(error_pos("algebra a extra\n") == std::pair{1, 11});
  // basis must precede everything else
  CHECK(error_pos("algebra a\nunit e\nbasis e\n") == std::pair{2, 1});
  // duplicate directives
  CHECK(error_pos("algebra a\nbasis e\nbasis e\n").first == 3);
  CHECK(error_pos("algebra a\nbasis e\nunit e\nunit e\n").first == 4);
  // duplicate basis label
  CHECK(error_pos("algebra a\nbasis e e\n") == std::pair{2, 9});
  // missing unit at end of input
  CHECK(error_pos("algebra a\nbasis e\nmul e e = 1 e\n").first == 3);
  // a bare directive with no arguments must not crash
  CHECK(error_pos("algebra a\nbasis e\nunit e\nmul\n").first == 4);
  CHECK(error_pos("algebra a\nbasis e\nunit e\nmul e\n").first == 4);
  CHECK(error_pos("algebra a\nbasis e\nunit e\nform e e = 1 junk\n").first == 4);
}

TEST_CASE("print and reparse every built-in algebra") {
  for (const char* expr :
       {"k_c(5)", "k_c(0)", "k_c(-1/2)", "dual_numbers(0)", "dual_numbers(3)",
        "group_algebra_z2", "truncated_poly(2)", "truncated_poly(3)",
        "direct_sum(k_c(1),k_c(2))", "direct_sum(dual_numbers(0),group_algebra_z2)"}) {
    CAPTURE(expr);
    auto f = *builtin(expr);
    AlgebraSpec spec = to_spec(f, "roundtrip");
    AlgebraSpec again = parse_algebra_text(print(spec));
    CHECK(again == spec);
  }
}

TEST_CASE("printed text is stable under a second print") {
  auto spec = to_spec(*builtin("dual_numbers(3)"), "d");
  CHECK(print(parse_algebra_text(print(spec))) == print(spec));
}

TEST_CASE("golden rendering of a small algebra") {
  CHECK(print(to_spec(*builtin("k_c(5)"), "kc")) ==
        "algebra kc\n"
        "basis e\n"
        "unit 1 e\n"
        "mul e e = 1 e\n"
        "form e e = 5\n");
}

TEST_CASE("algebroid files parse, build and validate") {
  const std::string text =
      "algebroid vir\n"
      "base k\n"
      "baseunit k\n"
      "basemul k k = 1 k\n"
      "basis e t\n"
      "op1 e e = 2 e\n"
      "op1 e t = 2 t\n"
      "op1 t e = 2 t\n"
      "op0t e e = 1 e\n"
      "op0t e t = 1 t\n"
      "op0t t e = 1 t\n"
      "form e e = 3\n"
      "form e t = 1\n"
      "form t e = 1\n";
  auto spec = parse_algebroid_text(text);
  CHECK(spec.name == "vir");
  CHECK(spec.base_labels == std::vector<std::string>{"k"});
  CHECK(spec.labels == std::vector<std::string>{"e", "t"});
  auto va = to_algebroid(spec);
  CHECK(check_axioms(va).ok());
  // this is exactly Vir(dual_numbers(3))
  CHECK(spec == to_spec(from_frobenius(*builtin("dual_numbers(3)")), "vir"));
}

TEST_CASE("algebroid terms address base and module labels") {
  const std::string text =
      "algebroid w\n"
      "base u v\n"
      "baseunit u\n"
      "basemul u u = 1 u\n"
      "basemul u v = 1 v\n"
      "basemul v u = 1 v\n"
      "basis x\n"
      "op1 x x = 2 v.x\n"
      "op0t x x = 1 v.x\n"
      "form x x = 1 v + 1/2 u\n";
  auto spec = parse_algebroid_text(text);
  CHECK(spec.op1[0][0][0] == AElem{Scalar(0), Scalar(2)});
  CHECK(spec.op0t[0][0][0] == AElem{Scalar(0), Scalar(1)});
  CHECK(spec.form[0][0] == AElem{Scalar(1, 2), Scalar(1)});
  // bare module label means coefficient times the base unit
  auto spec2 = parse_algebroid_text(
      "algebroid w\nbase u v\nbaseunit u\nbasemul u u = 1 u\n"
      "basis x\nop1 x x = 3 x\nform x x = 2\n");
  CHECK(spec2.op1[0][0][0] == AElem{Scalar(3), Scalar(0)});
  CHECK(spec2.form[0][0] == AElem{Scalar(2), Scalar(0)});
}

TEST_CASE("algebroid structural requirements") {
  CHECK(error_pos("algebroid w\nbasis x\n") == std::pair{2, 1});  // base first
  CHECK(error_pos("algebroid w\nbase k\nbasis x\n").first == 3);  // baseunit before basis
  CHECK(error_pos("algebroid w\nbase k\nbaseunit k\nop1 x x = 1 x\n").first == 4);
  CHECK(error_pos("algebroid w\nbase k\nbaseunit k\nbasis x\nop1 x x = 1 q.x\n").first == 5);
  CHECK(error_pos("algebroid w\nbase k\nbaseunit k\nbasis x\nop1 x x = 1 k.q\n").first == 5);
  // missing basis at end of input
  CHECK(error_pos("algebroid w\nbase k\nbaseunit k\n").first == 3);
}

TEST_CASE("print and reparse algebroids built from algebras") {
  for (const char* expr : {"k_c(5)", "dual_numbers(0)", "group_algebra_z2", "truncated_poly(3)"}) {
    CAPTURE(expr);
    auto va = from_frobenius(*builtin(expr));
    AlgebroidSpec spec = to_spec(va, "vir");
    AlgebroidSpec again = parse_algebroid_text(print(spec));
    CHECK(again == spec);
    CHECK(check_axioms(to_algebroid(again)).ok());
  }
}
