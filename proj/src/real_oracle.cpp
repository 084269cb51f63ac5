/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/real_oracle.hpp"

#include <string>

#include "exactreal/fmachine.hpp"

namespace exactreal {

DivergenceError::DivergenceError(std::uint64_t steps_taken, bool all_infinite)
    : std::runtime_error("no convergence after " + std::to_string(steps_taken) + " refinement steps"),
      steps_taken_(steps_taken),
      all_infinite_(all_infinite) {}

RealOracle::RealOracle(Approximator approx) {
  if (!approx) throw std::invalid_argument("oracle needs an approximator");
  approx_ = std::make_shared<const Approximator>(std::move(approx));
}

Rational RealOracle::query(const Rational& eta) const {
  if (eta.sign() <= 0) throw std::invalid_argument("oracle accuracy must be positive, got " + eta.str());
  return (*approx_)(eta);
}

RealOracle from_rational(Rational q) {
  return RealOracle([q = std::move(q)](const Rational&) { return q; });
}

RealOracle apply_machine(const FMachine& m, std::vector<RealOracle> args, Fuel fuel) {
  if (args.size() != m.arity())
    throw std::invalid_argument("apply_machine: expected " + std::to_string(m.arity()) + " arguments");
  return RealOracle([m, args = std::move(args), fuel](const Rational& eta) {
    auto outcome = refine(m, args, eta, fuel);
    if (auto* c = std::get_if<Converged>(&outcome)) return c->r;
    const auto& nc = std::get<NoConvergence>(outcome);
    throw DivergenceError(nc.steps_taken, nc.all_infinite);
  });
}

}  // namespace exactreal
