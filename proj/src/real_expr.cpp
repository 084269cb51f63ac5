/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/real_expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exactreal {

RealExpr RealExpr::constant(Rational c) {
  return RealExpr(std::make_shared<const Node>(Node{Kind::constant, std::move(c), 0, {}, {}}));
}

RealExpr RealExpr::var(std::size_t index) {
  return RealExpr(std::make_shared<const Node>(Node{Kind::var, Rational(0), index, {}, {}}));
}

RealExpr RealExpr::binary(Kind k, RealExpr a, RealExpr b) {
  return RealExpr(std::make_shared<const Node>(Node{k, Rational(0), 0, std::move(a), std::move(b)}));
}

RealExpr RealExpr::unary(Kind k, RealExpr a) {
  return RealExpr(std::make_shared<const Node>(Node{k, Rational(0), 0, std::move(a), {}}));
}

RealExpr RealExpr::add(RealExpr a, RealExpr b) { return binary(Kind::add, std::move(a), std::move(b)); }
RealExpr RealExpr::sub(RealExpr a, RealExpr b) { return binary(Kind::sub, std::move(a), std::move(b)); }
RealExpr RealExpr::mul(RealExpr a, RealExpr b) { return binary(Kind::mul, std::move(a), std::move(b)); }
RealExpr RealExpr::min(RealExpr a, RealExpr b) { return binary(Kind::min, std::move(a), std::move(b)); }
RealExpr RealExpr::max(RealExpr a, RealExpr b) { return binary(Kind::max, std::move(a), std::move(b)); }
RealExpr RealExpr::neg(RealExpr a) { return unary(Kind::neg, std::move(a)); }
RealExpr RealExpr::chi_pos(RealExpr a) { return unary(Kind::chi_pos, std::move(a)); }

std::size_t RealExpr::num_children() const { return node_->rhs ? 2 : (node_->lhs ? 1 : 0); }

const RealExpr& RealExpr::child(std::size_t k) const {
  if (k >= num_children()) throw std::out_of_range("expression child index out of range");
  return k == 0 ? *node_->lhs : *node_->rhs;
}

std::size_t RealExpr::min_arity() const {
  if (kind() == Kind::var) return index() + 1;
  std::size_t a = 1;
  for (std::size_t k = 0; k < num_children(); ++k) a = std::max(a, child(k).min_arity());
  return a;
}

std::size_t RealExpr::depth() const {
  std::size_t d = 0;
  for (std::size_t k = 0; k < num_children(); ++k) d = std::max(d, child(k).depth());
  return d + 1;
}

bool operator==(const RealExpr& a, const RealExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.num_children() != b.num_children()) return false;
  switch (a.kind()) {
    case RealExpr::Kind::constant:
      return a.value() == b.value();
    case RealExpr::Kind::var:
      return a.index() == b.index();
    default:
      break;
  }
  for (std::size_t k = 0; k < a.num_children(); ++k)
    if (!(a.child(k) == b.child(k))) return false;
  return true;
}

namespace {

Arith arith_of(RealExpr::Kind k) {
  switch (k) {
    case RealExpr::Kind::add: return Arith::add;
    case RealExpr::Kind::sub: return Arith::sub;
    case RealExpr::Kind::mul: return Arith::mul;
    case RealExpr::Kind::min: return Arith::min;
    case RealExpr::Kind::max: return Arith::max;
    case RealExpr::Kind::neg: return Arith::neg;
    default: throw std::logic_error("not an arithmetic node");
  }
}

}  // namespace

FMachine expr_to_machine(const RealExpr& e, std::size_t arity) {
  if (arity == 0) throw std::invalid_argument("expression arity must be positive");
  switch (e.kind()) {
    case RealExpr::Kind::constant:
      return constant(e.value(), arity);
    case RealExpr::Kind::var:
      if (e.index() >= arity)
        throw std::invalid_argument("unbound variable " + std::to_string(e.index()) + " at arity " +
                                    std::to_string(arity));
      return projection(arity, e.index());
    case RealExpr::Kind::chi_pos:
      return compose(chi_pos(), {expr_to_machine(e.child(0), arity)});
    default:
      break;
  }
  std::vector<FMachine> inners;
  for (std::size_t k = 0; k < e.num_children(); ++k) inners.push_back(expr_to_machine(e.child(k), arity));
  return compose(lift_arith(arith_of(e.kind())), std::move(inners));
}

}  // namespace exactreal
