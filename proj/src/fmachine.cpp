/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/fmachine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exactreal {

Query::Query(std::vector<QueryComponent> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("query must have at least one component");
  for (const auto& c : components_)
    if (c.eta.sign() <= 0) throw std::invalid_argument("query eta must be positive, got " + c.eta.str());
}

Query::Query(Rational q, Rational eta) : Query(std::vector<QueryComponent>{{std::move(q), std::move(eta)}}) {}

const Rational& Query::min_eta() const {
  return std::min_element(components_.begin(), components_.end(),
                          [](const auto& a, const auto& b) { return a.eta < b.eta; })
      ->eta;
}

FMachine::FMachine(std::size_t arity, Transition transition, std::vector<DomainBound> domain) {
  if (arity == 0) throw std::invalid_argument("machine arity must be positive");
  if (!transition) throw std::invalid_argument("machine needs a transition");
  if (!domain.empty() && domain.size() != arity)
    throw std::invalid_argument("declared domain must have one bound per argument");
  state_ = std::make_shared<const State>(State{arity, std::move(transition), std::move(domain)});
}

bool FMachine::in_domain(std::span<const Rational> x) const {
  if (state_->domain.empty()) return true;
  for (std::size_t k = 0; k < x.size() && k < state_->domain.size(); ++k)
    if (!state_->domain[k].contains(x[k])) return false;
  return true;
}

Answer FMachine::apply(const Query& query) const {
  if (query.arity() != state_->arity)
    throw std::invalid_argument("query arity " + std::to_string(query.arity()) + " does not match machine arity " +
                                std::to_string(state_->arity));
  return state_->transition(query);
}

Fuel::Fuel(std::uint64_t steps) : steps_(steps) {
  if (steps == 0) throw std::invalid_argument("fuel must be at least one step");
}

Rational schedule_eta(std::uint64_t n) { return Rational::pow2(-static_cast<long>(n)); }

namespace {

void check_args(const FMachine& m, std::size_t n_args) {
  if (n_args != m.arity())
    throw std::invalid_argument("expected " + std::to_string(m.arity()) + " arguments, got " +
                                std::to_string(n_args));
}

Query query_at(std::span<const RealOracle> args, const Rational& eta, const Rational& radius) {
  std::vector<QueryComponent> comps;
  comps.reserve(args.size());
  for (const auto& x : args) comps.push_back({x.query(eta), radius});
  return Query(std::move(comps));
}

}  // namespace

RefineOutcome refine(const FMachine& m, std::span<const RealOracle> args, const Rational& target, Fuel fuel) {
  check_args(m, args.size());
  if (target.sign() <= 0) throw std::invalid_argument("refinement target must be positive");
  bool all_infinite = true;
  for (std::uint64_t n = 0; n < fuel.steps(); ++n) {
    Rational eta = schedule_eta(n);
    std::optional<Query> query;
    try {
      query = query_at(args, eta, eta);
    } catch (const DivergenceError&) {
      return NoConvergence{n, all_infinite};
    }
    Answer a = m.apply(*query);
    if (a.eps.is_finite()) {
      all_infinite = false;
      if (a.eps <= target) return Converged{std::move(a.r), a.eps.value(), n};
    }
  }
  return NoConvergence{fuel.steps(), all_infinite};
}

DomainOutcome domain_neighborhood(const FMachine& m, std::span<const RealOracle> args, Fuel fuel) {
  check_args(m, args.size());
  for (std::uint64_t n = 0; n < fuel.steps(); ++n) {
    Rational eta = schedule_eta(n);
    Rational radius = eta * Rational(2);
    std::optional<Query> query;
    try {
      query = query_at(args, eta, radius);
    } catch (const DivergenceError&) {
      return NoConvergence{n, true};
    }
    if (m.apply(*query).eps.is_finite()) {
      Neighborhood out;
      for (const auto& c : *query) out.push_back(interval_of(c.q, c.eta));
      return out;
    }
  }
  return NoConvergence{fuel.steps(), true};
}

FMachine chi_pos() {
  return FMachine(1, [](const Query& query) {
    const auto& [q, eta] = query[0];
    if (q - eta > Rational(0)) return Answer{Rational(1), ExtAccuracy::finite(eta)};
    return Answer::no_information(Rational(1));
  });
}

FMachine projection(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::invalid_argument("projection index out of range");
  return FMachine(arity, [index](const Query& query) {
    return Answer{query[index].q, ExtAccuracy::finite(query[index].eta)};
  });
}

FMachine identity() { return projection(1, 0); }

FMachine constant(Rational c, std::size_t arity) {
  return FMachine(arity, [c = std::move(c)](const Query& query) {
    return Answer{c, ExtAccuracy::finite(query.min_eta())};
  });
}

namespace {

Answer from_interval(const Rational& lo, const Rational& hi) {
  Rational half = (hi - lo) / Rational(2);
  return Answer{lo + half, ExtAccuracy::finite(half)};
}

}  // namespace

FMachine lift_arith(Arith op) {
  switch (op) {
    case Arith::add:
      return FMachine(2, [](const Query& qy) {
        return Answer{qy[0].q + qy[1].q, ExtAccuracy::finite(qy[0].eta + qy[1].eta)};
      });
    case Arith::sub:
      return FMachine(2, [](const Query& qy) {
        return Answer{qy[0].q - qy[1].q, ExtAccuracy::finite(qy[0].eta + qy[1].eta)};
      });
    case Arith::neg:
      return FMachine(1, [](const Query& qy) { return Answer{-qy[0].q, ExtAccuracy::finite(qy[0].eta)}; });
    case Arith::mul:
      // |xy - q1 q2| <= |q1| eta2 + |q2| eta1 + eta1 eta2, attained at a corner.
      return FMachine(2, [](const Query& qy) {
        const auto& [q1, e1] = qy[0];
        const auto& [q2, e2] = qy[1];
        return Answer{q1 * q2, ExtAccuracy::finite(q1.abs() * e2 + q2.abs() * e1 + e1 * e2)};
      });
    case Arith::min:
      return FMachine(2, [](const Query& qy) {
        return from_interval(std::min(qy[0].q - qy[0].eta, qy[1].q - qy[1].eta),
                             std::min(qy[0].q + qy[0].eta, qy[1].q + qy[1].eta));
      });
    case Arith::max:
      return FMachine(2, [](const Query& qy) {
        return from_interval(std::max(qy[0].q - qy[0].eta, qy[1].q - qy[1].eta),
                             std::max(qy[0].q + qy[0].eta, qy[1].q + qy[1].eta));
      });
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

FMachine compose(const FMachine& outer, std::vector<FMachine> inners) {
  if (inners.empty() || inners.size() != outer.arity())
    throw std::invalid_argument("compose: outer arity " + std::to_string(outer.arity()) + " but " +
                                std::to_string(inners.size()) + " inner machines");
  std::size_t arity = inners.front().arity();
  for (const auto& m : inners)
    if (m.arity() != arity) throw std::invalid_argument("compose: inner machines disagree on arity");
  return FMachine(arity, [outer, inners = std::move(inners)](const Query& query) {
    std::vector<QueryComponent> comps;
    comps.reserve(inners.size());
    for (const auto& m : inners) {
      Answer a = m.apply(query);
      if (a.eps.is_infinite()) return Answer::no_information();
      comps.push_back({std::move(a.r), a.eps.value()});
    }
    return outer.apply(Query(std::move(comps)));
  });
}

FMachine gl_to_f(GLMachine gl, unsigned grid_floor_exp) {
  if (!gl.modulus || !gl.approx) throw std::invalid_argument("gl_to_f: incomplete GL machine");
  return FMachine(1, [gl = std::move(gl), grid_floor_exp](const Query& query) {
    const auto& [q, eta] = query[0];
    std::optional<Rational> best;
    for (unsigned k = 0; k <= grid_floor_exp; ++k) {
      Rational eps = Rational::pow2(-static_cast<long>(k));
      if (gl.modulus(eps) >= eta) best = eps;  // grid is descending; keep the last hit
    }
    if (!best) return Answer::no_information(gl.approx(q, Rational(1)));
    return Answer{gl.approx(q, *best), ExtAccuracy::finite(*best)};
  });
}

}  // namespace exactreal
