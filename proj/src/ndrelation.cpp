/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/ndrelation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exactreal {

IndexSet IndexSet::finite(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("finite index set must be nonempty");
  return IndexSet(n);
}

std::optional<std::uint64_t> IndexSet::clip(std::uint64_t i) const {
  if (!size_) return i;
  return std::min(i, *size_ - 1);
}

RealEnumRel::RealEnumRel(IndexSet omega, Family family) : omega_(omega) {
  if (!family) throw std::invalid_argument("relation needs a family");
  family_ = std::make_shared<const Family>(std::move(family));
}

std::optional<Answer> RealEnumRel::answer(const Query& query, std::uint64_t index) const {
  if (query.arity() != 1) throw std::invalid_argument("relation slices take one argument");
  if (!omega_.contains(index)) return std::nullopt;
  return (*family_)(query, index);
}

RealEnumRel make_tail_rel(const std::vector<RealExpr>& head, const RealExpr& tail) {
  std::vector<FMachine> slices;
  for (const auto& e : head) slices.push_back(expr_to_machine(e, 1));
  FMachine tail_m = expr_to_machine(tail, 1);
  return RealEnumRel(IndexSet::naturals(),
                     [slices = std::move(slices), tail_m](const Query& q, std::uint64_t i) -> std::optional<Answer> {
                       return i < slices.size() ? slices[i].apply(q) : tail_m.apply(q);
                     });
}

RealEnumRel make_finite_rel(const std::vector<RealExpr>& branches) {
  std::vector<FMachine> slices;
  for (const auto& e : branches) slices.push_back(expr_to_machine(e, 1));
  auto n = slices.size();
  return RealEnumRel(IndexSet::finite(n),
                     [slices = std::move(slices)](const Query& q, std::uint64_t i) -> std::optional<Answer> {
                       return slices[i].apply(q);
                     });
}

RealEnumRel from_function(const FMachine& m) {
  if (m.arity() != 1) throw std::invalid_argument("from_function needs an arity-1 machine");
  return RealEnumRel(IndexSet::naturals(),
                     [m](const Query& q, std::uint64_t) -> std::optional<Answer> { return m.apply(q); });
}

FMachine project(const RealEnumRel& rel, std::uint64_t i0) {
  if (!rel.omega().contains(i0)) throw std::invalid_argument("project: index " + std::to_string(i0) + " outside omega");
  if (!rel.answer(Query(Rational(0), Rational(1)), i0))
    throw std::invalid_argument("project: index " + std::to_string(i0) + " is not in use");
  return FMachine(1, [rel, i0](const Query& q) {
    auto a = rel.answer(q, i0);
    return a ? *a : Answer::no_information();
  });
}

WitnessOutcome witness(const RealEnumRel& rel, const RealOracle& x, std::uint64_t i, const Rational& accuracy,
                       Fuel fuel) {
  if (accuracy.sign() <= 0) throw std::invalid_argument("witness accuracy must be positive");
  if (!rel.omega().contains(i)) return IndexFailed{};
  bool all_infinite = true;
  for (std::uint64_t n = 0; n < fuel.steps(); ++n) {
    Rational eta = schedule_eta(n);
    Rational q;
    try {
      q = x.query(eta);
    } catch (const DivergenceError&) {
      return NoConvergence{n, all_infinite};
    }
    auto a = rel.answer(Query(std::move(q), eta), i);
    if (!a) return IndexFailed{};
    if (a->eps.is_finite()) {
      all_infinite = false;
      if (a->eps <= accuracy) return Witness{i, std::move(a->r), a->eps.value()};
    }
  }
  return NoConvergence{fuel.steps(), all_infinite};
}

WitnessList enumerate(const RealEnumRel& rel, const RealOracle& x, const Rational& accuracy,
                      std::uint64_t max_index, Fuel fuel) {
  WitnessList out;
  auto last = rel.omega().clip(max_index);
  if (!last) return out;
  for (std::uint64_t i = 0; i <= *last; ++i) {
    auto w = witness(rel, x, i, accuracy, fuel);
    if (auto* found = std::get_if<Witness>(&w))
      out.entries.push_back(std::move(*found));
    else
      out.skipped.push_back(i);
  }
  return out;
}

std::vector<Rational> cluster_witnesses(const std::vector<Witness>& entries, const Rational& radius) {
  std::vector<Rational> values;
  for (const auto& w : entries) values.push_back(w.r);
  std::sort(values.begin(), values.end());
  std::vector<Rational> reps;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (k == 0 || values[k] - values[k - 1] > radius) reps.push_back(values[k]);
  return reps;
}

MemberOutcome member_semi(const RealEnumRel& rel, const RealOracle& x, const RealOracle& y,
                          const Rational& accuracy, std::uint64_t max_index, Fuel fuel) {
  if (accuracy.sign() <= 0) throw std::invalid_argument("membership accuracy must be positive");
  Rational quarter = accuracy / Rational(4);
  Rational half = accuracy / Rational(2);
  std::uint64_t searched = 0;
  auto last = rel.omega().clip(max_index);
  if (!last) return Exhausted{0};
  std::optional<Rational> qy;
  for (std::uint64_t i = 0; i <= *last; ++i) {
    ++searched;
    auto w = witness(rel, x, i, quarter, fuel);
    auto* found = std::get_if<Witness>(&w);
    if (!found) continue;
    if (!qy) {
      try {
        qy = y.query(quarter);
      } catch (const DivergenceError&) {
        return Exhausted{searched};
      }
    }
    if ((found->r - *qy).abs() <= half) return Found{i};
  }
  return Exhausted{searched};
}

}  // namespace exactreal
