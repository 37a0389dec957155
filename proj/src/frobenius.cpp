#include "fvir/frobenius.hpp"

#include "fvir/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fvir {

void check_shape(const CommutativeAlgebra& a) {
  const std::size_t d = static_cast<std::size_t>(a.dim);
  if (a.dim <= 0) throw ShapeError("algebra dimension must be positive");
  if (a.labels.size() != d) throw ShapeError("label count does not match dimension");
  std::set<std::string> seen(a.labels.begin(), a.labels.end());
  if (seen.size() != d) throw ShapeError("basis labels must be distinct");
  if (a.mult.size() != d) throw ShapeError("structure tensor has wrong shape");
  for (const auto& plane : a.mult) {
    if (plane.size() != d) throw ShapeError("structure tensor has wrong shape");
    for (const auto& row : plane)
      if (row.size() != d) throw ShapeError("structure tensor has wrong shape");
  }
  if (a.unit.size() != d) throw ShapeError("unit vector has wrong size");
}

void check_shape(const FrobeniusAlgebra& f) {
  check_shape(static_cast<const CommutativeAlgebra&>(f));
  const std::size_t d = static_cast<std::size_t>(f.dim);
  if (f.form.size() != d) throw ShapeError("form matrix has wrong shape");
  for (const auto& row : f.form)
    if (row.size() != d) throw ShapeError("form matrix has wrong shape");
}

Vec multiply(const CommutativeAlgebra& a, const Vec& x, const Vec& y) {
  const std::size_t d = static_cast<std::size_t>(a.dim);
  if (x.size() != d || y.size() != d) throw ShapeError("multiply: operand size mismatch");
  Vec z(d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) z[k] += f * a.mult[i][j][k];
    }
  }
  return z;
}

Scalar pairing(const FrobeniusAlgebra& f, const Vec& x, const Vec& y) {
  const std::size_t d = static_cast<std::size_t>(f.dim);
  if (x.size() != d || y.size() != d) throw ShapeError("pairing: operand size mismatch");
  Scalar s(0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s += x[i] * f.form[i][j] * y[j];
  return s;
}

Scalar charge(const FrobeniusAlgebra& f) { return pairing(f, f.unit, f.unit); }

Vec basis_vec(int dim, int i) {
  Vec v(static_cast<std::size_t>(dim), Scalar(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

int label_index(const CommutativeAlgebra& a, std::string_view label) {
  for (int i = 0; i < a.dim; ++i)
    if (a.labels[static_cast<std::size_t>(i)] == label) return i;
  return -1;
}

ValidationReport validate_base(const CommutativeAlgebra& a) {
  check_shape(a);
  const int d = a.dim;
  ValidationReport rep;
  auto vs = [&](const Vec& v) { return vec_str(v, a.labels); };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const auto& xy = a.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& yx = a.mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (xy != yx)
        rep.violations.push_back({"commutativity", {i, j}, vs(xy), vs(yx)});
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec lhs = multiply(a, a.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                           basis_vec(d, k));
        Vec rhs = multiply(a, basis_vec(d, i),
                           a.mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
        if (lhs != rhs) rep.violations.push_back({"associativity", {i, j, k}, vs(lhs), vs(rhs)});
      }
  for (int i = 0; i < d; ++i) {
    Vec ux = multiply(a, a.unit, basis_vec(d, i));
    if (ux != basis_vec(d, i))
      rep.violations.push_back({"unit", {i}, vs(ux), vs(basis_vec(d, i))});
  }
  return rep;
}

ValidationReport validate(const FrobeniusAlgebra& f) {
  check_shape(f);
  ValidationReport rep = validate_base(f);
  const int d = f.dim;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Scalar& bij = f.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const Scalar& bji = f.form[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (bij != bji)
        rep.violations.push_back({"form-symmetry", {i, j}, scalar_str(bij), scalar_str(bji)});
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Scalar lhs = pairing(f, f.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             basis_vec(d, k));
        Scalar rhs = pairing(f, basis_vec(d, i),
                             f.mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
        if (lhs != rhs)
          rep.violations.push_back(
              {"form-invariance", {i, j, k}, scalar_str(lhs), scalar_str(rhs)});
      }
  rep.form_rank = rank(f.form);
  return rep;
}

namespace {

MultTensor zero_tensor(int d) {
  return MultTensor(static_cast<std::size_t>(d),
                    Matrix(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d), Scalar(0))));
}

Matrix zero_matrix(int d) {
  return Matrix(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d), Scalar(0)));
}

}  // namespace

FrobeniusAlgebra k_c(const Scalar& c) {
  FrobeniusAlgebra f;
  f.dim = 1;
  f.labels = {"e"};
  f.mult = zero_tensor(1);
  f.mult[0][0][0] = 1;
  f.unit = {Scalar(1)};
  f.form = {{c}};
  return f;
}

FrobeniusAlgebra dual_numbers(const Scalar& a) {
  FrobeniusAlgebra f;
  f.dim = 2;
  f.labels = {"e", "t"};
  f.mult = zero_tensor(2);
  f.mult[0][0][0] = 1;
  f.mult[0][1][1] = 1;
  f.mult[1][0][1] = 1;
  f.unit = {Scalar(1), Scalar(0)};
  f.form = {{a, Scalar(1)}, {Scalar(1), Scalar(0)}};
  return f;
}

FrobeniusAlgebra truncated_poly(int m) {
  if (m < 1) throw ShapeError("truncated_poly: order must be at least 1");
  FrobeniusAlgebra f;
  f.dim = m;
  f.labels.push_back("e");
  if (m > 1) f.labels.push_back("t");
  for (int i = 2; i < m; ++i) f.labels.push_back("t" + std::to_string(i));
  f.mult = zero_tensor(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i + j < m) f.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                           [static_cast<std::size_t>(i + j)] = 1;
  f.unit = basis_vec(m, 0);
  f.form = zero_matrix(m);
  for (int i = 0; i < m; ++i)
    f.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - 1 - i)] = 1;
  return f;
}

FrobeniusAlgebra group_algebra_z2() {
  FrobeniusAlgebra f;
  f.dim = 2;
  f.labels = {"e", "g"};
  f.mult = zero_tensor(2);
  f.mult[0][0][0] = 1;
  f.mult[0][1][1] = 1;
  f.mult[1][0][1] = 1;
  f.mult[1][1][0] = 1;
  f.unit = {Scalar(1), Scalar(0)};
  f.form = {{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(2)}};
  return f;
}

FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& f1, const FrobeniusAlgebra& f2) {
  check_shape(f1);
  check_shape(f2);
  FrobeniusAlgebra f;
  f.dim = f1.dim + f2.dim;
  for (const auto& l : f1.labels) f.labels.push_back("p1_" + l);
  for (const auto& l : f2.labels) f.labels.push_back("p2_" + l);
  f.mult = zero_tensor(f.dim);
  f.form = zero_matrix(f.dim);
  const std::size_t d1 = static_cast<std::size_t>(f1.dim);
  const std::size_t d2 = static_cast<std::size_t>(f2.dim);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) {
      for (std::size_t k = 0; k < d1; ++k) f.mult[i][j][k] = f1.mult[i][j][k];
      f.form[i][j] = f1.form[i][j];
    }
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j) {
      for (std::size_t k = 0; k < d2; ++k) f.mult[d1 + i][d1 + j][d1 + k] = f2.mult[i][j][k];
      f.form[d1 + i][d1 + j] = f2.form[i][j];
    }
  f.unit.assign(static_cast<std::size_t>(f.dim), Scalar(0));
  for (std::size_t i = 0; i < d1; ++i) f.unit[i] = f1.unit[i];
  for (std::size_t i = 0; i < d2; ++i) f.unit[d1 + i] = f2.unit[i];
  return f;
}

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::optional<std::string> name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) return std::nullopt;
    return std::string(text.substr(start, pos - start));
  }

  std::optional<Scalar> scalar_arg() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')') ++pos;
    std::string_view tok = text.substr(start, pos - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.remove_suffix(1);
    return parse_scalar(tok);
  }

  std::optional<FrobeniusAlgebra> expr() {
    auto n = name();
    if (!n) return std::nullopt;
    if (*n == "group_algebra_z2") {
      if (eat('(') && !eat(')')) return std::nullopt;
      return group_algebra_z2();
    }
    if (!eat('(')) return std::nullopt;
    if (*n == "k_c" || *n == "dual_numbers" || *n == "truncated_poly") {
      auto s = scalar_arg();
      if (!s || !eat(')')) return std::nullopt;
      if (*n == "k_c") return k_c(*s);
      if (*n == "dual_numbers") return dual_numbers(*s);
      if (denominator(*s) != 1 || *s < 1) return std::nullopt;
      return truncated_poly(static_cast<int>(numerator(*s)));
    }
    if (*n == "direct_sum") {
      auto a = expr();
      if (!a || !eat(',')) return std::nullopt;
      auto b = expr();
      if (!b || !eat(')')) return std::nullopt;
      return direct_sum(*a, *b);
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<FrobeniusAlgebra> builtin(std::string_view expr_text) {
  ExprParser p{expr_text};
  auto f = p.expr();
  if (!f) return std::nullopt;
  p.skip_ws();
  if (p.pos != expr_text.size()) return std::nullopt;
  return f;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "k_c", "dual_numbers", "truncated_poly", "group_algebra_z2", "direct_sum"};
  return names;
}

}  // namespace fvir
