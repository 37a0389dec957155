#pragma once

#include "fvir/frobenius.hpp"
#include "fvir/report.hpp"
#include "fvir/scalar.hpp"

#include <map>
#include <string>

namespace fvir {

/// Generator L_m (x basis index idx) of the mode Lie algebra.
struct ModeKey {
  int m = 0;
  int idx = 0;
  friend bool operator==(const ModeKey&, const ModeKey&) = default;
  friend bool operator<(const ModeKey& a, const ModeKey& b) {
    return a.m != b.m ? a.m < b.m : a.idx < b.idx;
  }
};

/// Finite linear combination of generators plus a central term K.
/// No zero coefficients are stored.
struct ModeVector {
  std::map<ModeKey, Scalar> terms;
  Scalar central = Scalar(0);

  void add(int m, int idx, const Scalar& c);
  bool is_zero() const { return terms.empty() && central == 0; }
  friend bool operator==(const ModeVector&, const ModeVector&) = default;
};

ModeVector mv_sum(const ModeVector& a, const ModeVector& b, const Scalar& bs = Scalar(1));
std::string mode_str(const ModeVector& v, const std::vector<std::string>& labels);

/// [L_m x, L_n y] = (m-n) L_{m+n} (xy) + delta_{m+n,0} (m^3-m)/6 <x,y> K.
ModeVector bracket(const FrobeniusAlgebra& f, int m, const Vec& x, int n, const Vec& y);

/// Bilinear extension of the bracket with K central: [L_m x, w].
ModeVector bracket(const FrobeniusAlgebra& f, int m, const Vec& x, const ModeVector& w);

/// Antisymmetry on all generator pairs and Jacobi on all generator triples
/// with modes in [mode_min, mode_max]. Witness tuples are (m,i,n,j[,p,k]).
ValidationReport check_lie(const FrobeniusAlgebra& f, int mode_min, int mode_max);

}  // namespace fvir
