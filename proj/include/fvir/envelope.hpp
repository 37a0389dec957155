#pragma once

#include "fvir/frobenius.hpp"
#include "fvir/report.hpp"
#include "fvir/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace fvir {

/// One creation factor L_{-level} (x basis index idx), level >= 2.
struct PBWFactor {
  int level = 0;
  int idx = 0;
  friend bool operator==(const PBWFactor&, const PBWFactor&) = default;
};

/// Canonical factor order: higher level first, then smaller algebra index.
inline bool factor_less(const PBWFactor& a, const PBWFactor& b) {
  return a.level != b.level ? a.level > b.level : a.idx < b.idx;
}

/// Factors sorted under factor_less; empty sequence is the vacuum.
using PBWMonomial = std::vector<PBWFactor>;

bool monomial_less(const PBWMonomial& a, const PBWMonomial& b);

struct MonomialLess {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const { return monomial_less(a, b); }
};

int degree_of(const PBWMonomial& mono);
bool is_sorted_monomial(const PBWMonomial& mono);
std::string monomial_str(const PBWMonomial& mono, const std::vector<std::string>& labels);

/// Homogeneous element of the vacuum module: a finite combination of
/// monomials of one degree. Zero states of any recorded degree compare equal.
struct State {
  int degree = 0;
  std::map<PBWMonomial, Scalar, MonomialLess> coeffs;

  void add(const PBWMonomial& mono, const Scalar& c);
  void add_state(const State& o, const Scalar& s = Scalar(1));
  State& scale(const Scalar& s);
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const State& a, const State& b) {
    return a.coeffs == b.coeffs && (a.degree == b.degree || a.coeffs.empty());
  }
};

std::string state_str(const State& v, const std::vector<std::string>& labels);

/// All monomials of the given degree over d algebra indices, in monomial_less
/// order. Degree 1 yields the empty list.
std::vector<PBWMonomial> pbw_basis(int d, int degree);

/// Closed-form count: sum over partitions of `degree` with parts >= 2 of the
/// product over part sizes k of C(d + m_k - 1, m_k), m_k the multiplicity.
/// Must agree with pbw_basis; the agreement is checked, not assumed.
long long graded_dim(int d, int degree);

/// The vacuum module of the mode algebra of F, built degree by degree up to
/// the cutoff. Mode action is by straightening into PBW order; general vertex
/// operations u_(n)v are reconstructed from mode actions.
///
/// The cutoff bounds requested result degrees of the public operations, which
/// throw CutoffError beyond it. A result of negative degree is exactly zero
/// and is returned as the zero state. Internal arithmetic is exact and
/// unbounded; nothing is ever silently truncated.
class Envelope {
 public:
  explicit Envelope(FrobeniusAlgebra f, int cutoff = 8);

  const FrobeniusAlgebra& algebra() const { return m_f; }
  int cutoff() const { return m_cutoff; }

  const std::vector<PBWMonomial>& basis(int degree) const;
  long long dim(int degree) const;

  State vacuum() const;
  State zero(int degree = 0) const;

  /// L_m (x) applied to v; annihilation for m >= -1 on the vacuum, K acts as 1.
  State apply_mode(int m, const Vec& x, const State& v) const;

  /// The translation operator: apply_mode(-1, unit, v).
  State translate(const State& v) const;

  /// x as the degree-2 state L_{-2}(x)|0>.
  State embed(const Vec& x) const;

  /// General vertex operation u_(n)v; deg = deg u + deg v - n - 1.
  State field_action(const State& u, int n, const State& v) const;

  /// Coordinates of a state in basis(v.degree) order.
  Vec coords(const State& v) const;

  /// Matrix of translate from basis(degree) to basis(degree+1),
  /// rows indexed by the target basis.
  Matrix translate_matrix(int degree) const;

  struct RecoveredOps {
    Vec op1;
    Vec op0t;
    Scalar form;
  };

  /// Reads the three algebroid operations back off the envelope:
  /// x_(1)y in degree 2, the translate-preimage of x_(0)y, and the vacuum
  /// coefficient of x_(3)y. Throws SolveError when the translate system
  /// for the preimage is not uniquely solvable.
  RecoveredOps recovered_ops(const Vec& x, const Vec& y) const;

 private:
  FrobeniusAlgebra m_f;
  int m_cutoff;
  mutable std::vector<std::vector<PBWMonomial>> m_basis_cache;
  mutable std::vector<bool> m_basis_ready;

  struct GenKey {
    int m;
    int idx;
    PBWMonomial mono;
  };
  struct GenKeyLess {
    bool operator()(const GenKey& a, const GenKey& b) const;
  };
  mutable std::map<GenKey, State, GenKeyLess> m_memo;

  State apply_gen(int m, int idx, const PBWMonomial& mono) const;
  State apply_gen_state(int m, int idx, const State& v) const;
  State mono_field(const PBWMonomial& mono, int n, const State& v) const;
  State field_unchecked(const State& u, int n, const State& v) const;
};

/// A linear solve required by the construction has no unique solution;
/// reported as a structural failure, distinct from identity violations.
struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fvir
