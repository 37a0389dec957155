#include "fvir/algebroid.hpp"

#include <set>
#include <stdexcept>

namespace fvir {

void check_shape(const VirasoroAlgebroid& va) {
  check_shape(va.base);
  const std::size_t r = static_cast<std::size_t>(va.rank);
  const std::size_t d = static_cast<std::size_t>(va.base.dim);
  if (va.rank <= 0) throw ShapeError("algebroid rank must be positive");
  if (va.labels.size() != r) throw ShapeError("algebroid label count does not match rank");
  std::set<std::string> seen(va.labels.begin(), va.labels.end());
  if (seen.size() != r) throw ShapeError("algebroid labels must be distinct");
  auto check_tensor = [&](const std::vector<std::vector<V2Elem>>& t, const char* what) {
    if (t.size() != r) throw ShapeError(std::string(what) + " tensor has wrong shape");
    for (const auto& row : t) {
      if (row.size() != r) throw ShapeError(std::string(what) + " tensor has wrong shape");
      for (const auto& elem : row) {
        if (elem.size() != r) throw ShapeError(std::string(what) + " tensor has wrong shape");
        for (const auto& coeff : elem)
          if (coeff.size() != d) throw ShapeError(std::string(what) + " tensor has wrong shape");
      }
    }
  };
  check_tensor(va.op1, "op1");
  check_tensor(va.op0t, "op0t");
  if (va.form.size() != r) throw ShapeError("form tensor has wrong shape");
  for (const auto& row : va.form) {
    if (row.size() != r) throw ShapeError("form tensor has wrong shape");
    for (const auto& a : row)
      if (a.size() != d) throw ShapeError("form tensor has wrong shape");
  }
}

V2Elem v2_basis(const VirasoroAlgebroid& va, int i) {
  V2Elem x(static_cast<std::size_t>(va.rank),
           AElem(static_cast<std::size_t>(va.base.dim), Scalar(0)));
  x[static_cast<std::size_t>(i)] = va.base.unit;
  return x;
}

V2Elem v2_zero(const VirasoroAlgebroid& va) {
  return V2Elem(static_cast<std::size_t>(va.rank),
                AElem(static_cast<std::size_t>(va.base.dim), Scalar(0)));
}

namespace {

V2Elem bilinear_apply(const VirasoroAlgebroid& va, const std::vector<std::vector<V2Elem>>& t,
                      const V2Elem& x, const V2Elem& y) {
  const std::size_t r = static_cast<std::size_t>(va.rank);
  V2Elem out = v2_zero(va);
  for (std::size_t i = 0; i < r; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (is_zero(y[j])) continue;
      const AElem c = multiply(va.base, x[i], y[j]);
      if (is_zero(c)) continue;
      for (std::size_t k = 0; k < r; ++k) {
        if (is_zero(t[i][j][k])) continue;
        const AElem term = multiply(va.base, c, t[i][j][k]);
        for (std::size_t p = 0; p < term.size(); ++p) out[k][p] += term[p];
      }
    }
  }
  return out;
}

V2Elem v2_sub(V2Elem a, const V2Elem& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t p = 0; p < a[k].size(); ++p) a[k][p] -= b[k][p];
  return a;
}

V2Elem v2_add(V2Elem a, const V2Elem& b, const Scalar& s = Scalar(1)) {
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t p = 0; p < a[k].size(); ++p) a[k][p] += s * b[k][p];
  return a;
}

bool v2_is_zero(const V2Elem& a) {
  for (const auto& c : a)
    if (!is_zero(c)) return false;
  return true;
}

}  // namespace

V2Elem op1_apply(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y) {
  return bilinear_apply(va, va.op1, x, y);
}

V2Elem op0t_apply(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y) {
  return bilinear_apply(va, va.op0t, x, y);
}

AElem form_apply(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y) {
  const std::size_t r = static_cast<std::size_t>(va.rank);
  AElem out(static_cast<std::size_t>(va.base.dim), Scalar(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (is_zero(y[j])) continue;
      const AElem c = multiply(va.base, x[i], y[j]);
      if (is_zero(c)) continue;
      const AElem term = multiply(va.base, c, va.form[i][j]);
      for (std::size_t p = 0; p < term.size(); ++p) out[p] += term[p];
    }
  }
  return out;
}

std::string v2_str(const VirasoroAlgebroid& va, const V2Elem& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (is_zero(x[k])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + vec_str(x[k], va.base.labels) + ") " + va.labels[k];
  }
  return out.empty() ? "0" : out;
}

ValidationReport check_axioms(const VirasoroAlgebroid& va) {
  check_shape(va);
  ValidationReport rep;
  {
    ValidationReport base_rep = validate_base(va.base);
    for (auto& v : base_rep.violations) {
      v.identity = "base-" + v.identity;
      rep.violations.push_back(std::move(v));
    }
  }
  const int r = va.rank;
  auto emit = [&](const std::string& identity, std::vector<long long> where,
                  const std::string& lhs, const std::string& rhs) {
    for (auto& v : rep.violations)
      if (v.identity == identity) {
        ++v.count;
        return;
      }
    rep.violations.push_back({identity, std::move(where), lhs, rhs, 1});
  };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const auto& ij = va.op1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& ji = va.op1[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (ij != ji)
        emit("op1-symmetry", {i, j}, v2_str(va, ij), v2_str(va, ji));
    }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const auto& ij = va.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& ji = va.form[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (ij != ji)
        emit("form-symmetry", {i, j}, vec_str(ij, va.base.labels), vec_str(ji, va.base.labels));
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const V2Elem x = v2_basis(va, i), y = v2_basis(va, j);
      V2Elem lhs = op0t_apply(va, x, y);
      V2Elem rhs = v2_add(v2_sub(v2_zero(va), op0t_apply(va, y, x)), op1_apply(va, y, x));
      if (lhs != rhs) emit("eq2", {i, j}, v2_str(va, lhs), v2_str(va, rhs));
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        const V2Elem x = v2_basis(va, i), y = v2_basis(va, j), z = v2_basis(va, k);
        const V2Elem x0z = op0t_apply(va, x, z);
        {
          V2Elem lhs = op1_apply(va, op1_apply(va, x, y), z);
          V2Elem rhs = op1_apply(va, x, op1_apply(va, y, z));
          rhs = v2_sub(rhs, op1_apply(va, y, op1_apply(va, x, z)));
          rhs = v2_add(rhs, op1_apply(va, x0z, y), Scalar(2));
          if (lhs != rhs) emit("eq1", {i, j, k}, v2_str(va, lhs), v2_str(va, rhs));
        }
        {
          V2Elem lhs = op0t_apply(va, op0t_apply(va, x, y), z);
          V2Elem rhs = v2_sub(v2_zero(va), op0t_apply(va, x, op1_apply(va, y, z)));
          rhs = v2_sub(rhs, op0t_apply(va, x0z, y));
          rhs = v2_add(rhs, op1_apply(va, x0z, y), Scalar(2));
          if (lhs != rhs) emit("eq3", {i, j, k}, v2_str(va, lhs), v2_str(va, rhs));
        }
        {
          V2Elem lhs = op1_apply(va, op0t_apply(va, x, y), z);
          V2Elem rhs = op1_apply(va, x0z, y);
          if (lhs != rhs) emit("eq4", {i, j, k}, v2_str(va, lhs), v2_str(va, rhs));
        }
        {
          AElem lhs = form_apply(va, op0t_apply(va, x, y), z);
          AElem rhs = form_apply(va, x0z, y);
          if (lhs != rhs)
            emit("eq5", {i, j, k}, vec_str(lhs, va.base.labels), vec_str(rhs, va.base.labels));
        }
        {
          AElem lhs = form_apply(va, op1_apply(va, x, y), z);
          AElem rhs = form_apply(va, x0z, y);
          for (auto& s : rhs) s *= 4;
          const AElem sub = form_apply(va, y, op1_apply(va, x, z));
          for (std::size_t p = 0; p < rhs.size(); ++p) rhs[p] -= sub[p];
          if (lhs != rhs)
            emit("eq6", {i, j, k}, vec_str(lhs, va.base.labels), vec_str(rhs, va.base.labels));
        }
      }
  return rep;
}

VirasoroAlgebroid from_frobenius(const FrobeniusAlgebra& f) {
  if (!validate(f).ok())
    throw std::invalid_argument("from_frobenius: input fails the Frobenius axioms");
  VirasoroAlgebroid va;
  va.base.dim = 1;
  va.base.labels = {"k"};
  va.base.mult = {{{Scalar(1)}}};
  va.base.unit = {Scalar(1)};
  va.rank = f.dim;
  va.labels = f.labels;
  const std::size_t d = static_cast<std::size_t>(f.dim);
  va.op1.assign(d, std::vector<V2Elem>(d, V2Elem(d, AElem(1, Scalar(0)))));
  va.op0t.assign(d, std::vector<V2Elem>(d, V2Elem(d, AElem(1, Scalar(0)))));
  va.form.assign(d, std::vector<AElem>(d, AElem(1, Scalar(0))));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        va.op1[i][j][k][0] = 2 * f.mult[i][j][k];
        va.op0t[i][j][k][0] = f.mult[i][j][k];
      }
      va.form[i][j][0] = f.form[i][j];
    }
  return va;
}

}  // namespace fvir
