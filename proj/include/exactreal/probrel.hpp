/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exactreal/fmachine.hpp"

namespace exactreal {

struct ProbBranch {
  FMachine machine;  ///< arity 1: the branch's outcome as a function of x
  Rational mass;
};

class MassSumInvalid : public std::invalid_argument {
 public:
  explicit MassSumInvalid(const Rational& sum);
  const Rational& sum() const { return sum_; }

 private:
  Rational sum_;
};

/// Finitely many branches with exact masses summing to 1.
class DiscreteProbAlgorithm {
 public:
  const std::vector<ProbBranch>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }

 private:
  friend DiscreteProbAlgorithm make_prob(std::vector<ProbBranch> branches);
  explicit DiscreteProbAlgorithm(std::vector<ProbBranch> b) : branches_(std::move(b)) {}
  std::vector<ProbBranch> branches_;
};

/// Throws MassSumInvalid when the masses do not sum to exactly 1, and
/// std::invalid_argument for an empty list, a mass outside [0, 1], or a
/// machine of arity other than 1.
DiscreteProbAlgorithm make_prob(std::vector<ProbBranch> branches);

/// The outcome function h and the distribution p on the branch indices.
struct Decomposition {
  std::vector<FMachine> h;
  std::vector<Rational> p;
};

Decomposition decompose(const DiscreteProbAlgorithm& alg);
DiscreteProbAlgorithm recompose(const Decomposition& d);

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9, z = (z ^ (z >> 27)) * 0x94D049BB133111EB,
/// z ^ (z >> 31). uniform() is next() / 2^64.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}
  /// Independent stream for parallel draws: seeded by mixing (seed, stream).
  static Sampler stream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next();
  /// Uniform dyadic rational in [0, 1) with denominator 2^64.
  Rational uniform();

 private:
  std::uint64_t state_;
};

/// The unique i with C_{i-1} <= u < C_i, C the cumulative masses.
/// Throws std::invalid_argument unless 0 <= u < 1.
std::size_t select_index(const DiscreteProbAlgorithm& alg, const Rational& u);

struct Sample {
  std::size_t index;
  Rational r;
};

/// Draws a branch and refines it at x. Throws DivergenceError when the
/// chosen branch does not converge within fuel.
Sample sample(const DiscreteProbAlgorithm& alg, const RealOracle& x, Sampler& sampler, const Rational& accuracy,
              Fuel fuel);

/// Certified lower bound on P(result = y) plus the mass that could not be
/// classified at this accuracy.
struct MassReport {
  Rational lower;
  Rational unknown;

  friend bool operator==(const MassReport&, const MassReport&) = default;
};

/// Per branch, refines h(x, i) and y to accuracy/4 (distance d): d <= accuracy/2
/// certifies a hit, d > 3 accuracy/2 certifies a miss, anything else (or a
/// divergent branch) is unknown.
MassReport outcome_mass(const DiscreteProbAlgorithm& alg, const RealOracle& x, const RealOracle& y,
                        const Rational& accuracy, Fuel fuel);

struct FrequencyReport {
  std::vector<std::uint64_t> counts;  ///< per branch index
  std::vector<Rational> outcomes;     ///< in draw order
};

FrequencyReport empirical_frequency(const DiscreteProbAlgorithm& alg, const RealOracle& x, std::uint64_t n,
                                    Sampler& sampler, const Rational& accuracy, Fuel fuel);

class ValidationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CdfValidation {
  std::vector<Rational> xs;
  std::vector<Rational> ys;  ///< checked pairwise in ascending order
  Rational accuracy;
  Fuel fuel;

  static CdfValidation defaults();
};

/// g(x, y) read as P(result <= y | input x).
class RepartitionMachine {
 public:
  const FMachine& machine() const { return g_; }
  RefineOutcome probability_at_most(const RealOracle& x, const RealOracle& y, const Rational& accuracy,
                                    Fuel fuel) const;

 private:
  friend RepartitionMachine cdf_algorithm(const FMachine& g, const CdfValidation& v);
  explicit RepartitionMachine(FMachine g) : g_(std::move(g)) {}
  FMachine g_;
};

/// Checks by sampling that refined values are compatible with [0, 1] and
/// nondecreasing in y; throws ValidationFailed on a certified violation or a
/// sample point that does not converge.
RepartitionMachine cdf_algorithm(const FMachine& g, const CdfValidation& v = CdfValidation::defaults());

}  // namespace exactreal
