#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fvir {

/// Structural problem: the data does not even have the right shape
/// (ragged tensor, label/dimension mismatch, bad index). Distinct from an
/// axiom violation, which is a well-formed algebra failing an identity.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A requested result degree exceeds the envelope cutoff.
struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One failed identity instance. `where` is the index tuple of the first
/// witness in lexicographic scan order; `count` is the total number of
/// failing instances of this identity.
struct Violation {
  std::string identity;
  std::vector<long long> where;
  std::string lhs;
  std::string rhs;
  long long count = 1;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Rank of the bilinear form when one was checked, -1 otherwise.
  /// Degeneracy is reported here, not as a violation.
  int form_rank = -1;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

}  // namespace fvir
