/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "exactreal/rational.hpp"
#include "exactreal/real_oracle.hpp"

namespace exactreal {

/// One argument's slice of a query: an approximation q known to be within
/// eta of the argument.
struct QueryComponent {
  Rational q;
  Rational eta;

  friend bool operator==(const QueryComponent&, const QueryComponent&) = default;
};

class Query {
 public:
  /// Throws std::invalid_argument on an empty list or a non-positive eta.
  explicit Query(std::vector<QueryComponent> components);
  Query(Rational q, Rational eta);

  std::size_t arity() const { return components_.size(); }
  const QueryComponent& operator[](std::size_t k) const { return components_[k]; }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  /// Smallest eta over the components.
  const Rational& min_eta() const;

  friend bool operator==(const Query&, const Query&) = default;

 private:
  std::vector<QueryComponent> components_;
};

struct Answer {
  Rational r;
  ExtAccuracy eps;

  static Answer no_information(Rational r = Rational(0)) { return {std::move(r), ExtAccuracy::infinity()}; }

  friend bool operator==(const Answer&, const Answer&) = default;
};

/// Per-argument domain restriction; a missing endpoint is unbounded.
struct DomainBound {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool contains(const Rational& x) const { return (!lo || *lo <= x) && (!hi || x <= *hi); }
};

/// A total, pure map from interval queries to answers. A finite answer
/// (r, eps) to (q, eta) promises |f(x) - r| <= eps for every x in the
/// declared domain with |x - q| <= eta; eps = inf promises nothing.
class FMachine {
 public:
  using Transition = std::function<Answer(const Query&)>;

  FMachine(std::size_t arity, Transition transition, std::vector<DomainBound> domain = {});

  std::size_t arity() const { return state_->arity; }
  const std::vector<DomainBound>& declared_domain() const { return state_->domain; }
  bool in_domain(std::span<const Rational> x) const;

  /// Throws std::invalid_argument when the query arity does not match.
  Answer apply(const Query& query) const;
  Answer operator()(const Query& query) const { return apply(query); }

 private:
  struct State {
    std::size_t arity;
    Transition transition;
    std::vector<DomainBound> domain;
  };
  std::shared_ptr<const State> state_;
};

inline Answer apply(const FMachine& m, const Query& query) { return m.apply(query); }

/// Budget of refinement steps.
class Fuel {
 public:
  /// Throws std::invalid_argument when steps == 0.
  explicit Fuel(std::uint64_t steps);
  std::uint64_t steps() const { return steps_; }
  Fuel times(std::uint64_t k) const { return Fuel(steps_ * k); }

 private:
  std::uint64_t steps_;
};

struct Converged {
  Rational r;
  Rational eps;
  std::uint64_t step;  ///< schedule index n at which eps <= target first held
};

struct NoConvergence {
  std::uint64_t steps_taken;
  bool all_infinite;
};

using RefineOutcome = std::variant<Converged, NoConvergence>;

/// eta_n = 2^-n.
Rational schedule_eta(std::uint64_t n);

/// Drives `m` with q_n = args(eta_n), eta_n = 2^-n, n = 0, 1, ...; stops at
/// the first finite eps <= target, or after fuel steps. A divergent argument
/// oracle ends the run as NoConvergence.
RefineOutcome refine(const FMachine& m, std::span<const RealOracle> args, const Rational& target, Fuel fuel);

// Catalog.

FMachine chi_pos();
FMachine identity();
FMachine projection(std::size_t arity, std::size_t index);

enum class Arith { add, sub, mul, neg, min, max };

/// Binary ops have arity 2, neg has arity 1.
FMachine lift_arith(Arith op);
/// Constant c of the given arity; answers eps = smallest query eta.
FMachine constant(Rational c, std::size_t arity = 1);

/// Feeds each inner answer (r_k, eps_k) to the outer machine as (q_k, eta_k).
/// Any infinite inner answer makes the composite answer (0, inf).
FMachine compose(const FMachine& outer, std::vector<FMachine> inners);

/// Modulus-style presentation: |x - q| <= modulus(eps) implies
/// |f(x) - approx(q, eps)| <= eps.
struct GLMachine {
  std::function<Rational(const Rational& eps)> modulus;
  std::function<Rational(const Rational& q, const Rational& eps)> approx;
};

/// Adapts a modulus-style machine by searching eps = 2^k, k = 0..-grid_floor_exp,
/// for the smallest eps with modulus(eps) >= eta.
FMachine gl_to_f(GLMachine gl, unsigned grid_floor_exp);

using Neighborhood = std::vector<Interval>;
using DomainOutcome = std::variant<Neighborhood, NoConvergence>;

/// Runs the doubled-radius schedule (q_n, 2 eta_n). At the first finite
/// answer returns [q_m - 2 eta_m, q_m + 2 eta_m] per argument, an interval
/// on which the machine is defined everywhere.
DomainOutcome domain_neighborhood(const FMachine& m, std::span<const RealOracle> args, Fuel fuel);

}  // namespace exactreal
