#pragma once

#include "fvir/report.hpp"
#include "fvir/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fvir {

/// mult[i][j][k] is the coefficient of basis k in (basis i) * (basis j).
using MultTensor = std::vector<Matrix>;

struct CommutativeAlgebra {
  int dim = 0;
  std::vector<std::string> labels;
  MultTensor mult;
  Vec unit;
};

/// Finite-dimensional commutative algebra over Q with a chosen symmetric
/// invariant bilinear form. Validity is checked by validate(), not assumed.
struct FrobeniusAlgebra : CommutativeAlgebra {
  Matrix form;
};

/// Throws ShapeError when tensor sizes disagree with dim or labels repeat.
void check_shape(const CommutativeAlgebra& a);
void check_shape(const FrobeniusAlgebra& f);

Vec multiply(const CommutativeAlgebra& a, const Vec& x, const Vec& y);
Scalar pairing(const FrobeniusAlgebra& f, const Vec& x, const Vec& y);

/// <unit, unit>; the central charge of the mode algebra is twice this value.
Scalar charge(const FrobeniusAlgebra& f);

Vec basis_vec(int dim, int i);
int label_index(const CommutativeAlgebra& a, std::string_view label);

/// Checks commutativity, associativity and the unit law on basis elements.
ValidationReport validate_base(const CommutativeAlgebra& a);

/// validate_base plus form symmetry and form invariance <xy,z> = <x,yz>.
/// Every failing instance is listed; form_rank is always filled in.
ValidationReport validate(const FrobeniusAlgebra& f);

FrobeniusAlgebra k_c(const Scalar& c);
FrobeniusAlgebra dual_numbers(const Scalar& a);
FrobeniusAlgebra truncated_poly(int m);
FrobeniusAlgebra group_algebra_z2();
FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& f1, const FrobeniusAlgebra& f2);

/// Parses a builtin expression: k_c(5), dual_numbers(-1/2), truncated_poly(3),
/// group_algebra_z2, direct_sum(k_c(1),k_c(2)). Nesting is allowed.
/// Returns nullopt on malformed input or unknown name.
std::optional<FrobeniusAlgebra> builtin(std::string_view expr);

/// Names accepted by builtin(), for diagnostics.
const std::vector<std::string>& builtin_names();

}  // namespace fvir
