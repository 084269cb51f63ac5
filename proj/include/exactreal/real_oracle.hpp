/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "exactreal/rational.hpp"

namespace exactreal {

class FMachine;
class Fuel;

/// Raised when a partial oracle is asked for an approximation it cannot
/// produce within its fuel.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::uint64_t steps_taken, bool all_infinite);

  std::uint64_t steps_taken() const { return steps_taken_; }
  bool all_infinite() const { return all_infinite_; }

 private:
  std::uint64_t steps_taken_;
  bool all_infinite_;
};

/// A real number presented by its approximations: query(eta) returns a
/// rational q with |x - q| <= eta.
class RealOracle {
 public:
  using Approximator = std::function<Rational(const Rational& eta)>;

  explicit RealOracle(Approximator approx);

  /// Throws std::invalid_argument unless eta > 0; partial oracles may
  /// throw DivergenceError.
  Rational query(const Rational& eta) const;
  Rational operator()(const Rational& eta) const { return query(eta); }

 private:
  std::shared_ptr<const Approximator> approx_;
};

RealOracle from_rational(Rational q);

/// The real f(x1..xn) as a partial oracle: each request runs refinement of
/// `m` to the requested accuracy.
RealOracle apply_machine(const FMachine& m, std::vector<RealOracle> args, Fuel fuel);

}  // namespace exactreal
