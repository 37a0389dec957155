#include <set>
#include <tuple>

#include "doctest.h"
#include "fvir/frobenius.hpp"

using namespace fvir;

namespace {

int count_identity(const ValidationReport& rep, const std::string& name) {
  int n = 0;
  for (const auto& v : rep.violations)
    if (v.identity == name) ++n;
  return n;
}

// Independent re-statement of the five axiom families, used to cross-check
// validate() and to certify that mutation escapes are genuinely valid algebras.
bool axioms_hold(const FrobeniusAlgebra& f) {
  const int d = f.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (f.mult[i][j] != f.mult[j][i]) return false;
      if (f.form[i][j] != f.form[j][i]) return false;
      for (int k = 0; k < d; ++k) {
        Vec lhs = multiply(f, f.mult[i][j], basis_vec(d, k));
        Vec rhs = multiply(f, basis_vec(d, i), f.mult[j][k]);
        if (lhs != rhs) return false;
        if (pairing(f, f.mult[i][j], basis_vec(d, k)) !=
            pairing(f, basis_vec(d, i), f.mult[j][k]))
          return false;
      }
    }
  for (int i = 0; i < d; ++i)
    if (multiply(f, f.unit, basis_vec(d, i)) != basis_vec(d, i)) return false;
  return true;
}

}  // namespace

TEST_CASE("one-dimensional algebra with scaled form") {
  auto f = k_c(Scalar(5));
  CHECK(validate(f).ok());
  CHECK(multiply(f, f.unit, f.unit) == f.unit);
  CHECK(pairing(f, f.unit, f.unit) == Scalar(5));
  CHECK(charge(f) == Scalar(5));
  CHECK(validate(f).form_rank == 1);
}

TEST_CASE("degenerate forms validate with rank reported") {
  auto f = k_c(Scalar(0));
  auto rep = validate(f);
  CHECK(rep.ok());
  CHECK(rep.form_rank == 0);
  CHECK(charge(f) == Scalar(0));

  auto g = k_c(Scalar(-1, 2));
  CHECK(validate(g).ok());
  CHECK(charge(g) == Scalar(-1, 2));
}

TEST_CASE("dual numbers: nilpotent generator, hyperbolic-ish form") {
  auto f = dual_numbers(Scalar(3));
  REQUIRE(validate(f).ok());
  const Vec t = basis_vec(2, 1);
  CHECK(is_zero(multiply(f, t, t)));
  CHECK(multiply(f, f.unit, t) == t);
  CHECK(pairing(f, t, t) == Scalar(0));
  CHECK(pairing(f, f.unit, t) == Scalar(1));
  CHECK(charge(f) == Scalar(3));
  CHECK(validate(f).form_rank == 2);
  // the form parameter is unconstrained
  CHECK(validate(dual_numbers(Scalar(0))).ok());
  CHECK(validate(dual_numbers(Scalar(-7, 3))).ok());
}

TEST_CASE("group algebra of Z/2") {
  auto f = group_algebra_z2();
  REQUIRE(validate(f).ok());
  const Vec g = basis_vec(2, 1);
  CHECK(multiply(f, g, g) == f.unit);
  CHECK(pairing(f, g, g) == Scalar(2));
  CHECK(pairing(f, f.unit, g) == Scalar(0));
  CHECK(charge(f) == Scalar(2));
}

TEST_CASE("truncated polynomial algebras") {
  for (int m = 1; m <= 4; ++m) {
    auto f = truncated_poly(m);
    auto rep = validate(f);
    CHECK(rep.ok());
    CHECK(rep.form_rank == m);
    CHECK(charge(f) == (m == 1 ? Scalar(1) : Scalar(0)));
  }
  auto f = truncated_poly(3);
  const Vec t = basis_vec(3, 1);
  CHECK(multiply(f, t, t) == basis_vec(3, 2));
  CHECK(is_zero(multiply(f, multiply(f, t, t), t)));
  CHECK(pairing(f, t, t) == Scalar(1));
  CHECK(pairing(f, f.unit, t) == Scalar(0));
  CHECK_THROWS_AS(truncated_poly(0), ShapeError);
}

TEST_CASE("direct sums validate and block correctly") {
  auto f = direct_sum(k_c(Scalar(1)), k_c(Scalar(2)));
  REQUIRE(validate(f).ok());
  CHECK(f.dim == 2);
  CHECK(f.labels == std::vector<std::string>{"p1_e", "p2_e"});
  // cross products vanish, units add, charges add
  CHECK(is_zero(multiply(f, basis_vec(2, 0), basis_vec(2, 1))));
  CHECK(f.unit == Vec{Scalar(1), Scalar(1)});
  CHECK(charge(f) == Scalar(3));

  auto g = direct_sum(dual_numbers(Scalar(0)), group_algebra_z2());
  REQUIRE(validate(g).ok());
  CHECK(g.dim == 4);
  CHECK(charge(g) == Scalar(2));
}

TEST_CASE("multiply is bilinear and unital on general vectors") {
  auto f = truncated_poly(3);
  const Vec x{Scalar(1), Scalar(2), Scalar(-1)};
  const Vec y{Scalar(0), Scalar(1, 2), Scalar(3)};
  const Vec z{Scalar(-1), Scalar(1), Scalar(0)};
  Vec yz = y;
  for (std::size_t i = 0; i < 3; ++i) yz[i] = y[i] + Scalar(7) * z[i];
  Vec lhs = multiply(f, x, yz);
  Vec rhs = multiply(f, x, y);
  add_scaled(rhs, Scalar(7), multiply(f, x, z));
  CHECK(lhs == rhs);
  CHECK(multiply(f, f.unit, x) == x);
  CHECK(multiply(f, x, f.unit) == x);
  // (1 + 2t - t^2)(t/2 + 3t^2) = t/2 + 3t^2 + t^2 = t/2 + 4t^2
  CHECK(multiply(f, x, y) == Vec{Scalar(0), Scalar(1, 2), Scalar(4)});
}

TEST_CASE("pairing matches the form and is symmetric") {
  auto f = dual_numbers(Scalar(3));
  const Vec x{Scalar(1), Scalar(2)};
  const Vec y{Scalar(-1), Scalar(5)};
  // (1,2) B (-1,5) with B = [[3,1],[1,0]]: -3 + 5 - 2 = 0... compute exactly
  CHECK(pairing(f, x, y) == Scalar(3) * 1 * -1 + Scalar(1) * 1 * 5 + Scalar(1) * 2 * -1);
  CHECK(pairing(f, x, y) == pairing(f, y, x));
}

TEST_CASE("shape errors") {
  auto f = k_c(Scalar(1));
  f.form.clear();
  CHECK_THROWS_AS(check_shape(f), ShapeError);
  auto g = dual_numbers(Scalar(0));
  g.labels = {"e", "e"};
  CHECK_THROWS_AS(check_shape(g), ShapeError);
  auto h = dual_numbers(Scalar(0));
  h.unit.pop_back();
  CHECK_THROWS_AS(check_shape(h), ShapeError);
  CHECK_THROWS_AS(multiply(k_c(Scalar(1)), Vec{}, Vec{Scalar(1)}), ShapeError);
}

TEST_CASE("validate lists every failing instance by identity") {
  auto f = dual_numbers(Scalar(0));
  f.mult[0][1] = Vec{Scalar(0), Scalar(0)};  // e*t := 0, t*e still t
  auto rep = validate(f);
  REQUIRE_FALSE(rep.ok());
  CHECK(count_identity(rep, "commutativity") == 1);
  CHECK(count_identity(rep, "unit") == 1);
  CHECK(count_identity(rep, "form-invariance") > 0);
  CHECK(rep.form_rank == 2);
  // the report's describe() names the identity and the witness indices
  auto text = rep.describe();
  CHECK(text.find("commutativity at (0,1)") != std::string::npos);
  CHECK(text.find("form rank: 2") != std::string::npos);
}

TEST_CASE("broken form symmetry is caught") {
  auto f = dual_numbers(Scalar(1));
  f.form[0][1] += 1;
  auto rep = validate(f);
  CHECK(count_identity(rep, "form-symmetry") == 1);
}

TEST_CASE("broken form invariance is caught") {
  auto f = dual_numbers(Scalar(0));
  f.form[1][1] = 1;  // forces <t*t,t> != <t,t*t> failures via <t,t> = 1
  auto rep = validate(f);
  CHECK(count_identity(rep, "form-symmetry") == 0);
  CHECK(count_identity(rep, "form-invariance") > 0);
}

TEST_CASE("broken associativity is caught") {
  FrobeniusAlgebra f = truncated_poly(3);
  f.mult[1][2][0] = 1;  // t * t^2 := e, breaks associativity but not commutativity
  f.mult[2][1][0] = 1;
  auto rep = validate(f);
  CHECK(count_identity(rep, "commutativity") == 0);
  CHECK(count_identity(rep, "associativity") > 0);
}

// Perturbing one structure constant almost always breaks an axiom, but not
// always: some +1 perturbations land on a different valid Frobenius algebra.
// The escape sets below were worked out by hand and are certified in-test by
// an independent implementation of the axioms.
TEST_CASE("structure constant perturbations: exact caught/escape sets") {
  using Escapes = std::set<std::tuple<int, int, int>>;
  struct Case {
    const char* name;
    FrobeniusAlgebra f;
    Escapes escapes;
  };
  const Case cases[] = {
      {"k_5", k_c(Scalar(5)), {}},
      {"dual_0", dual_numbers(Scalar(0)), {{1, 1, 0}}},
      {"dual_3", dual_numbers(Scalar(3)), {}},
      {"z2", group_algebra_z2(), {{1, 1, 1}}},
      {"trunc_3", truncated_poly(3), {{1, 1, 1}}},
      {"k1_plus_k2", direct_sum(k_c(Scalar(1)), k_c(Scalar(2))), {}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    REQUIRE(validate(c.f).ok());
    Escapes found;
    for (int i = 0; i < c.f.dim; ++i)
      for (int j = 0; j < c.f.dim; ++j)
        for (int k = 0; k < c.f.dim; ++k) {
          FrobeniusAlgebra m = c.f;
          m.mult[i][j][k] += 1;
          const bool ok = validate(m).ok();
          CHECK(ok == axioms_hold(m));
          if (ok) found.insert({i, j, k});
        }
    CHECK(found == c.escapes);
  }
}

TEST_CASE("builtin expression parser") {
  auto f = builtin("k_c(5)");
  REQUIRE(f.has_value());
  CHECK(charge(*f) == Scalar(5));
  CHECK(builtin("k_c(-1/2)").has_value());
  CHECK(builtin(" dual_numbers( 3 ) ").has_value());
  CHECK(builtin("group_algebra_z2").has_value());
  CHECK(builtin("group_algebra_z2()").has_value());
  CHECK(builtin("truncated_poly(4)").has_value());
  auto ds = builtin("direct_sum(k_c(1),direct_sum(dual_numbers(0),group_algebra_z2))");
  REQUIRE(ds.has_value());
  CHECK(ds->dim == 5);
  CHECK(validate(*ds).ok());

  CHECK_FALSE(builtin("k_c").has_value());
  CHECK_FALSE(builtin("k_c(").has_value());
  CHECK_FALSE(builtin("k_c(x)").has_value());
  CHECK_FALSE(builtin("k_c(1) trailing").has_value());
  CHECK_FALSE(builtin("truncated_poly(0)").has_value());
  CHECK_FALSE(builtin("truncated_poly(5/2)").has_value());
  CHECK_FALSE(builtin("nope(1)").has_value());
  CHECK_FALSE(builtin("direct_sum(k_c(1))").has_value());
  CHECK(builtin_names().size() == 5);
}
