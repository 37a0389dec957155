#include <set>
#include <string>

#include "doctest.h"
#include "fvir/algebroid.hpp"

using namespace fvir;

namespace {

long long count_for(const ValidationReport& rep, const std::string& name) {
  long long n = 0;
  for (const auto& v : rep.violations)
    if (v.identity == name) n += v.count;
  return n;
}

const Violation* find_violation(const ValidationReport& rep, const std::string& name) {
  for (const auto& v : rep.violations)
    if (v.identity == name) return &v;
  return nullptr;
}

// Cyclic sums used by the two redundant corollary checks below.
AElem cycle_form1(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y, const V2Elem& z) {
  AElem s(va.base.dim, Scalar(0));
  auto acc = [&](const V2Elem& a, const V2Elem& b, const V2Elem& c) {
    AElem t = form_apply(va, op1_apply(va, a, b), c);
    for (int p = 0; p < va.base.dim; ++p) s[p] += t[p];
  };
  acc(x, y, z);
  acc(y, z, x);
  acc(z, x, y);
  return s;
}

AElem cycle_form0t(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y, const V2Elem& z) {
  AElem s(va.base.dim, Scalar(0));
  auto acc = [&](const V2Elem& a, const V2Elem& b, const V2Elem& c) {
    AElem t = form_apply(va, op0t_apply(va, a, b), c);
    for (int p = 0; p < va.base.dim; ++p) s[p] += t[p];
  };
  acc(x, y, z);
  acc(y, z, x);
  acc(z, x, y);
  return s;
}

V2Elem cycle_op11(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y, const V2Elem& z) {
  V2Elem s = v2_zero(va);
  auto acc = [&](const V2Elem& a, const V2Elem& b, const V2Elem& c) {
    V2Elem t = op1_apply(va, a, op1_apply(va, b, c));
    for (int k = 0; k < va.rank; ++k)
      for (int p = 0; p < va.base.dim; ++p) s[k][p] += t[k][p];
  };
  acc(x, y, z);
  acc(y, z, x);
  acc(z, x, y);
  return s;
}

V2Elem cycle_op10t(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y, const V2Elem& z) {
  V2Elem s = v2_zero(va);
  auto acc = [&](const V2Elem& a, const V2Elem& b, const V2Elem& c) {
    V2Elem t = op1_apply(va, a, op0t_apply(va, b, c));
    for (int k = 0; k < va.rank; ++k)
      for (int p = 0; p < va.base.dim; ++p) s[k][p] += t[k][p];
  };
  acc(x, y, z);
  acc(y, z, x);
  acc(z, x, y);
  return s;
}

void scale_v2(V2Elem& x, const Scalar& c) {
  for (auto& a : x)
    for (auto& s : a) s *= c;
}

}  // namespace

TEST_CASE("Vir(F) satisfies all axioms for the standard algebras") {
  for (const char* expr : {"k_c(5)", "k_c(0)", "dual_numbers(0)", "dual_numbers(3)",
                           "group_algebra_z2", "truncated_poly(3)",
                           "direct_sum(k_c(1),k_c(2))"}) {
    CAPTURE(expr);
    auto f = builtin(expr);
    REQUIRE(f.has_value());
    auto va = from_frobenius(*f);
    CHECK(va.base.dim == 1);
    CHECK(va.rank == f->dim);
    auto rep = check_axioms(va);
    CHECK(rep.ok());
  }
}

TEST_CASE("from_frobenius installs (2 mult, mult, form)") {
  auto f = *builtin("dual_numbers(3)");
  auto va = from_frobenius(f);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        CHECK(va.op1[i][j][k][0] == 2 * f.mult[i][j][k]);
        CHECK(va.op0t[i][j][k][0] == f.mult[i][j][k]);
      }
      CHECK(va.form[i][j][0] == f.form[i][j]);
    }
}

TEST_CASE("from_frobenius rejects an invalid algebra") {
  auto f = *builtin("dual_numbers(0)");
  f.form[1][1] = 1;
  CHECK_THROWS_AS(from_frobenius(f), std::invalid_argument);
}

TEST_CASE("operations are A-bilinear on general elements") {
  auto va = from_frobenius(*builtin("truncated_poly(3)"));
  V2Elem x = v2_basis(va, 1), y = v2_basis(va, 2), z = v2_basis(va, 0);
  // x + 3z against y
  V2Elem u = x;
  for (int k = 0; k < va.rank; ++k)
    for (int p = 0; p < va.base.dim; ++p) u[k][p] += Scalar(3) * z[k][p];
  V2Elem lhs = op1_apply(va, u, y);
  V2Elem rhs = op1_apply(va, x, y);
  V2Elem zy = op1_apply(va, z, y);
  scale_v2(zy, Scalar(3));
  for (int k = 0; k < va.rank; ++k)
    for (int p = 0; p < va.base.dim; ++p) rhs[k][p] += zy[k][p];
  CHECK(lhs == rhs);
  // op1 is twice op0t for envelopes of commutative algebras
  V2Elem a = op1_apply(va, x, y);
  V2Elem b = op0t_apply(va, x, y);
  scale_v2(b, Scalar(2));
  CHECK(a == b);
}

TEST_CASE("cyclic corollaries follow from the six identities") {
  for (const char* expr : {"k_c(5)", "dual_numbers(3)", "group_algebra_z2", "truncated_poly(3)"}) {
    CAPTURE(expr);
    auto va = from_frobenius(*builtin(expr));
    for (int i = 0; i < va.rank; ++i)
      for (int j = 0; j < va.rank; ++j)
        for (int k = 0; k < va.rank; ++k) {
          V2Elem x = v2_basis(va, i), y = v2_basis(va, j), z = v2_basis(va, k);
          // Cycle <x.1 y, z> = 2 Cycle <x.0~ y, z>
          AElem lhs = cycle_form1(va, x, y, z);
          AElem rhs = cycle_form0t(va, x, y, z);
          for (auto& s : rhs) s *= 2;
          CHECK(lhs == rhs);
          // 2 Cycle x.1 (y.0~ z) = Cycle x.1 (y.1 z)
          V2Elem l2 = cycle_op10t(va, x, y, z);
          scale_v2(l2, Scalar(2));
          CHECK(l2 == cycle_op11(va, x, y, z));
        }
  }
}

TEST_CASE("a general base algebra is supported in the axiom checker") {
  // V2 of rank 1 over A = dual numbers: v.1 v = 2 t.v, v.0~ v = t.v, <v,v> = t.
  // This satisfies eq1..eq6 because t^2 = 0 kills every composite term.
  VirasoroAlgebroid va;
  va.base.dim = 2;
  va.base.labels = {"e", "t"};
  va.base.mult = MultTensor(2, Matrix(2, Vec(2, Scalar(0))));
  va.base.mult[0][0][0] = 1;
  va.base.mult[0][1][1] = 1;
  va.base.mult[1][0][1] = 1;
  va.base.unit = {Scalar(1), Scalar(0)};
  va.rank = 1;
  va.labels = {"v"};
  AElem t{Scalar(0), Scalar(1)};
  AElem two_t{Scalar(0), Scalar(2)};
  va.op1 = {{{two_t}}};
  va.op0t = {{{t}}};
  va.form = {{t}};
  auto rep = check_axioms(va);
  CHECK(rep.ok());
}

TEST_CASE("axiom checker pinpoints a broken identity with first witness and count") {
  auto f = *builtin("dual_numbers(0)");
  auto va = from_frobenius(f);
  // zero out op0t entirely: eq2 fails wherever y.1 x is nonzero
  for (auto& row : va.op0t)
    for (auto& cell : row) cell = v2_zero(va);
  auto rep = check_axioms(va);
  REQUIRE_FALSE(rep.ok());
  const auto* v = find_violation(rep, "eq2");
  REQUIRE(v != nullptr);
  CHECK(v->where == std::vector<long long>{0, 0});
  CHECK(count_for(rep, "eq2") == 3);  // (e,e), (e,t), (t,e); t.1 t = 0 escapes
}

TEST_CASE("base algebra failures are reported with base- prefixes") {
  auto va = from_frobenius(*builtin("dual_numbers(0)"));
  va.base.mult[0][0][0] = 2;  // unit law fails in the base
  auto rep = check_axioms(va);
  REQUIRE_FALSE(rep.ok());
  CHECK(find_violation(rep, "base-unit") != nullptr);
}

TEST_CASE("op1 asymmetry is its own violation") {
  auto va = from_frobenius(*builtin("dual_numbers(0)"));
  va.op1[0][1][1][0] += 1;
  auto rep = check_axioms(va);
  CHECK(find_violation(rep, "op1-symmetry") != nullptr);
}

TEST_CASE("every single-entry perturbation of Vir(F) trips some identity") {
  // the mutation grid behind the falsifiability requirement: 8 + 8 + 2 = 18
  int mutations = 0;
  for (const char* expr : {"dual_numbers(0)", "group_algebra_z2"}) {
    auto base = from_frobenius(*builtin(expr));
    for (int i = 0; i < base.rank; ++i)
      for (int j = 0; j < base.rank; ++j)
        for (int k = 0; k < base.rank; ++k) {
          auto va = base;
          va.op0t[i][j][k][0] += 1;
          CAPTURE(expr);
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          CHECK_FALSE(check_axioms(va).ok());
          ++mutations;
        }
  }
  auto va1 = from_frobenius(*builtin("k_c(5)"));
  va1.op0t[0][0][0][0] += 1;
  CHECK_FALSE(check_axioms(va1).ok());
  ++mutations;
  auto va2 = from_frobenius(*builtin("k_c(5)"));
  va2.op1[0][0][0][0] += 1;
  CHECK_FALSE(check_axioms(va2).ok());
  ++mutations;
  CHECK(mutations == 18);
}

TEST_CASE("v2_str renders base coefficients against module labels") {
  auto va = from_frobenius(*builtin("dual_numbers(0)"));
  V2Elem x = v2_basis(va, 0);
  x[1][0] = Scalar(-1, 2);
  auto s = v2_str(va, x);
  CHECK(s.find("e") != std::string::npos);
  CHECK(s.find("-1/2") != std::string::npos);
}
