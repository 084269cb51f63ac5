/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exactreal/ndrelation.hpp"
#include "exactreal/probrel.hpp"
#include "exactreal/real_expr.hpp"

// Machine-spec language:
//
//   spec   := expr | rel | prob
//   expr   := (rat INT INT) | (var NAT) | (neg expr) | (chi-pos expr)
//           | (add expr expr) | (sub expr expr) | (mul expr expr)
//           | (min expr expr) | (max expr expr)
//   rel    := (tail expr+) | (finite expr+)
//   prob   := (prob (mass INT INT expr)+)
//
// ';' starts a comment running to end of line. Relation and prob branches
// take a single argument, so they may only mention (var 0).

namespace exactreal::cli {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_head, arity, bad_mass };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

struct ExprSpec {
  RealExpr expr;
  std::size_t arity;

  friend bool operator==(const ExprSpec&, const ExprSpec&) = default;
};

struct RelSpec {
  enum class Shape { tail, finite };
  Shape shape;
  std::vector<RealExpr> branches;  ///< for tail, the last entry is the tail branch

  friend bool operator==(const RelSpec&, const RelSpec&) = default;
};

struct MassBranch {
  Rational mass;
  RealExpr expr;

  friend bool operator==(const MassBranch&, const MassBranch&) = default;
};

struct ProbSpec {
  std::vector<MassBranch> branches;

  friend bool operator==(const ProbSpec&, const ProbSpec&) = default;
};

using SpecAst = std::variant<ExprSpec, RelSpec, ProbSpec>;

SpecAst parse_spec(std::string_view text);
std::string print_spec(const SpecAst& spec);
std::string print_expr(const RealExpr& e);

FMachine build_machine(const ExprSpec& spec);
RealEnumRel build_relation(const RelSpec& spec);
/// Throws MassSumInvalid when masses do not sum to 1.
DiscreteProbAlgorithm build_prob(const ProbSpec& spec);

}  // namespace exactreal::cli
