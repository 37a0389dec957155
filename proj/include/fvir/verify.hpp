#pragma once

#include "fvir/frobenius.hpp"
#include "fvir/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fvir {

/// Outcome of one verification check. Deterministic for fixed inputs:
/// sampling, where used, is seeded.
struct CheckReport {
  std::string name;
  bool pass = true;
  long long checked = 0;
  long long failed = 0;
  /// First failing witness with both sides' values, or informational notes.
  std::string detail;
};

struct VerifyOptions {
  /// Degree bound for envelope-side checks.
  int degree = 8;
  /// Mode window for the Lie-algebra check.
  int lie_mode_min = -3;
  int lie_mode_max = 3;
  /// Mode window for the commutator-formula check.
  int comm_mode_min = -4;
  int comm_mode_max = 4;
  /// State-degree bound for the commutator-formula check.
  int comm_degree = 6;
  /// Above this algebra dimension the commutator check samples tuples
  /// instead of exhausting them.
  int exhaustive_dim = 2;
  int sample_count = 200;
  unsigned sample_seed = 20240517;
};

/// dim(F, 0..degree) by the closed-form count.
std::vector<long long> character(const FrobeniusAlgebra& f, int degree);

/// Frobenius axioms of F itself.
CheckReport check_frobenius(const FrobeniusAlgebra& f);

/// The six algebroid identities for Vir(F).
CheckReport check_algebroid_axioms(const FrobeniusAlgebra& f);

/// Mode-bracket antisymmetry and Jacobi over a mode window.
CheckReport check_lie_bracket(const FrobeniusAlgebra& f, int mode_min, int mode_max);

/// Closed-form dims against basis enumeration, degrees 0..degree.
/// `expected` overrides the closed form (used to exercise failure paths).
CheckReport check_graded_dimensions(const FrobeniusAlgebra& f, int degree,
                                    const std::vector<long long>* expected = nullptr);

/// The four operator facts for the unit e: e_(0)e = translate(e),
/// e_(1)e = 2e, e_(2)e = 0, e_(3)e = <e,e>|0>. The detail line always states
/// the pairing value <e,e> and the Virasoro-convention central charge
/// 2<e,e>; the normalization difference is reported, never resolved away.
CheckReport check_ope_coefficients(const FrobeniusAlgebra& f);

/// The Virasoro-vector property of e up to the degree bound: e_(0) agrees
/// with the translation operator on every basis state, e_(1) acts on degree j
/// as j times the identity, e_(2)e = 0 and e_(3)e = <e,e>|0>.
CheckReport check_virasoro_vector(const FrobeniusAlgebra& f, int degree);

/// recovered_ops against (2 mult, mult, form) on all basis pairs.
CheckReport check_algebroid_recovery(const FrobeniusAlgebra& f);

/// [a_(m), b_(n)] v = sum_j C(m,j) (a_(j)b)_(m+n-j) v for generator states
/// a, b over basis states v. Exhaustive for dim <= opts.exhaustive_dim,
/// seeded samples otherwise.
CheckReport check_commutator_formula(const FrobeniusAlgebra& f, const VerifyOptions& opts = {});

/// a_(n)b = (-1)^{n+1} sum_j (-1)^j /j! translate^j (b_(n+j) a) for generator
/// pairs and n in [0,3].
CheckReport check_skew_symmetry(const FrobeniusAlgebra& f);

/// The full suite in a fixed order. When F fails its own axioms the
/// remaining checks are skipped (their prerequisites are meaningless).
std::vector<CheckReport> run_all(const FrobeniusAlgebra& f, const VerifyOptions& opts = {});

bool all_pass(const std::vector<CheckReport>& reports);

/// "name: pass" lines with indented witness details on failure.
std::string render_human(const std::vector<CheckReport>& reports);

/// One tab-separated record per executed check: name, status, counts, detail.
std::string render_machine(const std::vector<CheckReport>& reports);

}  // namespace fvir
