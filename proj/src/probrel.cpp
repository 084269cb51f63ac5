/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/probrel.hpp"

#include <algorithm>
#include <string>

namespace exactreal {

MassSumInvalid::MassSumInvalid(const Rational& sum)
    : std::invalid_argument("branch masses sum to " + sum.str() + ", expected 1"), sum_(sum) {}

DiscreteProbAlgorithm make_prob(std::vector<ProbBranch> branches) {
  if (branches.empty()) throw std::invalid_argument("probabilistic algorithm needs at least one branch");
  Rational sum;
  for (const auto& b : branches) {
    if (b.mass < Rational(0) || b.mass > Rational(1))
      throw std::invalid_argument("branch mass outside [0, 1]: " + b.mass.str());
    if (b.machine.arity() != 1) throw std::invalid_argument("branch machines must have arity 1");
    sum += b.mass;
  }
  if (sum != Rational(1)) throw MassSumInvalid(sum);
  return DiscreteProbAlgorithm(std::move(branches));
}

Decomposition decompose(const DiscreteProbAlgorithm& alg) {
  Decomposition d;
  for (const auto& b : alg.branches()) {
    d.h.push_back(b.machine);
    d.p.push_back(b.mass);
  }
  return d;
}

DiscreteProbAlgorithm recompose(const Decomposition& d) {
  if (d.h.size() != d.p.size()) throw std::invalid_argument("recompose: h and p differ in length");
  std::vector<ProbBranch> branches;
  for (std::size_t i = 0; i < d.h.size(); ++i) branches.push_back({d.h[i], d.p[i]});
  return make_prob(std::move(branches));
}

std::uint64_t Sampler::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Sampler Sampler::stream(std::uint64_t seed, std::uint64_t stream_index) {
  Sampler mix(seed ^ (stream_index * 0xD1B54A32D192ED03ULL));
  return Sampler(mix.next());
}

Rational Sampler::uniform() {
  mpz_class n;
  std::uint64_t v = next();
  mpz_import(n.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return Rational(n, mpz_class(1) << 64);
}

std::size_t select_index(const DiscreteProbAlgorithm& alg, const Rational& u) {
  if (u < Rational(0) || u >= Rational(1)) throw std::invalid_argument("select_index: u must lie in [0, 1)");
  Rational cumulative;
  const auto& bs = alg.branches();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    cumulative += bs[i].mass;
    if (u < cumulative) return i;
  }
  throw std::logic_error("select_index: masses do not cover [0, 1)");
}

Sample sample(const DiscreteProbAlgorithm& alg, const RealOracle& x, Sampler& sampler, const Rational& accuracy,
              Fuel fuel) {
  std::size_t i = select_index(alg, sampler.uniform());
  std::vector<RealOracle> args{x};
  auto outcome = refine(alg.branches()[i].machine, args, accuracy, fuel);
  if (auto* c = std::get_if<Converged>(&outcome)) return {i, std::move(c->r)};
  const auto& nc = std::get<NoConvergence>(outcome);
  throw DivergenceError(nc.steps_taken, nc.all_infinite);
}

MassReport outcome_mass(const DiscreteProbAlgorithm& alg, const RealOracle& x, const RealOracle& y,
                        const Rational& accuracy, Fuel fuel) {
  if (accuracy.sign() <= 0) throw std::invalid_argument("outcome_mass accuracy must be positive");
  Rational quarter = accuracy / Rational(4);
  Rational hit = accuracy / Rational(2);
  Rational miss = accuracy * rat(3, 2);
  MassReport rep;
  std::optional<Rational> qy;
  try {
    qy = y.query(quarter);
  } catch (const DivergenceError&) {
  }
  std::vector<RealOracle> args{x};
  for (const auto& b : alg.branches()) {
    auto outcome = refine(b.machine, args, quarter, fuel);
    auto* c = std::get_if<Converged>(&outcome);
    if (!c || !qy) {
      rep.unknown += b.mass;
      continue;
    }
    Rational d = (c->r - *qy).abs();
    if (d <= hit)
      rep.lower += b.mass;
    else if (d <= miss)
      rep.unknown += b.mass;
  }
  return rep;
}

FrequencyReport empirical_frequency(const DiscreteProbAlgorithm& alg, const RealOracle& x, std::uint64_t n,
                                    Sampler& sampler, const Rational& accuracy, Fuel fuel) {
  if (n == 0) throw std::invalid_argument("empirical_frequency needs n >= 1");
  FrequencyReport rep;
  rep.counts.assign(alg.size(), 0);
  rep.outcomes.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    auto s = sample(alg, x, sampler, accuracy, fuel);
    ++rep.counts[s.index];
    rep.outcomes.push_back(std::move(s.r));
  }
  return rep;
}

CdfValidation CdfValidation::defaults() {
  CdfValidation v{{}, {}, Rational::pow2(-8), Fuel(64)};
  for (int k = -4; k <= 4; ++k) v.xs.push_back(rat(k, 2));
  for (int k = -12; k <= 12; ++k) v.ys.push_back(rat(k, 4));
  return v;
}

RefineOutcome RepartitionMachine::probability_at_most(const RealOracle& x, const RealOracle& y,
                                                      const Rational& accuracy, Fuel fuel) const {
  std::vector<RealOracle> args{x, y};
  return refine(g_, args, accuracy, fuel);
}

RepartitionMachine cdf_algorithm(const FMachine& g, const CdfValidation& v) {
  if (g.arity() != 2) throw std::invalid_argument("repartition machine must have arity 2");
  RepartitionMachine cdf(g);
  std::vector<Rational> ys = v.ys;
  std::sort(ys.begin(), ys.end());
  for (const auto& x : v.xs) {
    std::optional<Converged> prev;
    Rational prev_y;
    for (const auto& y : ys) {
      auto outcome = cdf.probability_at_most(from_rational(x), from_rational(y), v.accuracy, v.fuel);
      auto* c = std::get_if<Converged>(&outcome);
      if (!c)
        throw ValidationFailed("repartition machine does not converge at x=" + x.str() + " y=" + y.str());
      if (c->r + c->eps < Rational(0) || c->r - c->eps > Rational(1))
        throw ValidationFailed("value " + c->r.str() + " outside [0, 1] at x=" + x.str() + " y=" + y.str());
      if (prev && prev->r - prev->eps > c->r + c->eps)
        throw ValidationFailed("decreasing between y=" + prev_y.str() + " and y=" + y.str() + " at x=" + x.str());
      prev = *c;
      prev_y = y;
    }
  }
  return cdf;
}

}  // namespace exactreal
