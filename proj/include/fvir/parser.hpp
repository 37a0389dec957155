#pragma once

#include "fvir/algebroid.hpp"
#include "fvir/frobenius.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fvir {

struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& msg);
};

/// Parsed algebra definition file. Tensors are dense; entries not written in
/// the file are zero.
struct AlgebraSpec {
  std::string name;
  std::vector<std::string> labels;
  MultTensor mult;
  Vec unit;
  Matrix form;
  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

struct AlgebroidSpec {
  std::string name;
  std::vector<std::string> base_labels;
  MultTensor base_mult;
  Vec base_unit;
  std::vector<std::string> labels;
  std::vector<std::vector<V2Elem>> op1, op0t;
  std::vector<std::vector<AElem>> form;
  friend bool operator==(const AlgebroidSpec&, const AlgebroidSpec&) = default;
};

using ParsedSpec = std::variant<AlgebraSpec, AlgebroidSpec>;

/// Line-oriented grammar; see README for the full description.
///
///   algebra <name>              algebroid <name>
///   basis a b ...               base k ...
///   unit <term> [+ <term>...]   baseunit <term> [+ ...]
///   mul a b = <c> x [+ ...]     basemul k k = <c> k [+ ...]
///   form a b = <rational>       basis v w ...
///                               op1 v w = <c> [k.]v [+ ...]
///                               op0t v w = <c> [k.]v [+ ...]
///                               form v w = <c> [k] [+ ...]
///
/// '#' starts a comment. Rationals are p or p/q. Throws ParseError with
/// line and column on any lexical or semantic problem.
ParsedSpec parse(std::string_view text);

FrobeniusAlgebra to_algebra(const AlgebraSpec& spec);
VirasoroAlgebroid to_algebroid(const AlgebroidSpec& spec);

AlgebraSpec to_spec(const FrobeniusAlgebra& f, std::string name);
AlgebroidSpec to_spec(const VirasoroAlgebroid& va, std::string name);

std::string print(const AlgebraSpec& spec);
std::string print(const AlgebroidSpec& spec);

}  // namespace fvir
