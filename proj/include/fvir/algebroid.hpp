#pragma once

#include "fvir/frobenius.hpp"
#include "fvir/report.hpp"
#include "fvir/scalar.hpp"

#include <string>
#include <vector>

namespace fvir {

/// Element of the base algebra A, in coordinates.
using AElem = Vec;
/// Element of the free A-module V2: one A-coefficient per V2 basis vector.
using V2Elem = std::vector<AElem>;

/// A module V2 of finite rank over a commutative algebra A, carrying three
/// A-bilinear operations: a symmetric product _(1), a product _(0~), and an
/// A-valued symmetric pairing. Tensor entries are A-elements.
struct VirasoroAlgebroid {
  CommutativeAlgebra base;
  int rank = 0;
  std::vector<std::string> labels;
  // op1[i][j][k], op0t[i][j][k]: A-coefficient of v_k in v_i op v_j.
  std::vector<std::vector<V2Elem>> op1, op0t;
  // form[i][j]: A-element <v_i, v_j>.
  std::vector<std::vector<AElem>> form;
};

void check_shape(const VirasoroAlgebroid& va);

V2Elem v2_basis(const VirasoroAlgebroid& va, int i);
V2Elem v2_zero(const VirasoroAlgebroid& va);

V2Elem op1_apply(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y);
V2Elem op0t_apply(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y);
AElem form_apply(const VirasoroAlgebroid& va, const V2Elem& x, const V2Elem& y);

std::string v2_str(const VirasoroAlgebroid& va, const V2Elem& x);

/// Checks the base algebra axioms (prefixed base-*), symmetry of op1 and of
/// the form, and the six defining identities eq1..eq6:
///   eq1  (x.1 y).1 z = x.1 (y.1 z) - y.1 (x.1 z) + 2 (x.0~ z).1 y
///   eq2  x.0~ y = -(y.0~ x) + y.1 x
///   eq3  (x.0~ y).0~ z = -(x.0~ (y.1 z)) - (x.0~ z).0~ y + 2 (x.0~ z).1 y
///   eq4  (x.0~ y).1 z = (x.0~ z).1 y
///   eq5  <x.0~ y, z> = <x.0~ z, y>
///   eq6  <x.1 y, z> = 4 <x.0~ z, y> - <y, x.1 z>
/// Evaluated on all basis triples; per identity the first failing witness is
/// recorded together with the total failure count.
ValidationReport check_axioms(const VirasoroAlgebroid& va);

/// Vir(F): base = Q, rank = dim F, op1 = 2 mult, op0t = mult, form = b.
/// Rejects F with validate(F) nonempty.
VirasoroAlgebroid from_frobenius(const FrobeniusAlgebra& f);

}  // namespace fvir
