#pragma once

#include "fvir/scalar.hpp"

namespace fvir {

int rank(Matrix a);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  Vec solution;  // valid iff status == unique
};

/// Solves a x = b exactly over Q. a is rows x cols, b has size rows.
SolveResult solve(Matrix a, Vec b);

}  // namespace fvir
