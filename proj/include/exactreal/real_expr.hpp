/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "exactreal/fmachine.hpp"
#include "exactreal/rational.hpp"

namespace exactreal {

/// Arithmetic expression over argument variables, built into F-machines by
/// expr_to_machine. Immutable; subtrees are shared.
class RealExpr {
 public:
  enum class Kind { constant, var, add, sub, mul, neg, min, max, chi_pos };

  static RealExpr constant(Rational c);
  static RealExpr var(std::size_t index);
  static RealExpr add(RealExpr a, RealExpr b);
  static RealExpr sub(RealExpr a, RealExpr b);
  static RealExpr mul(RealExpr a, RealExpr b);
  static RealExpr min(RealExpr a, RealExpr b);
  static RealExpr max(RealExpr a, RealExpr b);
  static RealExpr neg(RealExpr a);
  static RealExpr chi_pos(RealExpr a);

  Kind kind() const;
  /// Valid for Kind::constant.
  const Rational& value() const;
  /// Valid for Kind::var.
  std::size_t index() const;
  std::size_t num_children() const;
  const RealExpr& child(std::size_t k) const;

  /// Smallest arity at which every variable is bound (at least 1).
  std::size_t min_arity() const;
  std::size_t depth() const;

  friend bool operator==(const RealExpr& a, const RealExpr& b);

 private:
  struct Node;
  explicit RealExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static RealExpr binary(Kind k, RealExpr a, RealExpr b);
  static RealExpr unary(Kind k, RealExpr a);

  std::shared_ptr<const Node> node_;
};

struct RealExpr::Node {
  Kind kind;
  Rational value;
  std::size_t index = 0;
  std::optional<RealExpr> lhs;
  std::optional<RealExpr> rhs;
};

inline RealExpr::Kind RealExpr::kind() const { return node_->kind; }
inline const Rational& RealExpr::value() const { return node_->value; }
inline std::size_t RealExpr::index() const { return node_->index; }

/// Translates compositionally through lift_arith, constant, compose and
/// chi_pos. Throws std::invalid_argument when a variable index is >= arity.
FMachine expr_to_machine(const RealExpr& e, std::size_t arity);

}  // namespace exactreal
