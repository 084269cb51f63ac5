/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "exactreal/fmachine.hpp"
#include "exactreal/real_expr.hpp"

namespace exactreal {

/// Omega: {0, ..., n-1} or all naturals.
class IndexSet {
 public:
  static IndexSet finite(std::uint64_t n);
  static IndexSet naturals() { return IndexSet(std::nullopt); }

  bool is_finite() const { return size_.has_value(); }
  std::uint64_t size() const { return size_.value(); }
  bool contains(std::uint64_t i) const { return !size_ || i < *size_; }
  /// Largest valid index <= i, or nullopt when none.
  std::optional<std::uint64_t> clip(std::uint64_t i) const;

 private:
  explicit IndexSet(std::optional<std::uint64_t> n) : size_(n) {}
  std::optional<std::uint64_t> size_;
};

/// Effectively enumerable relation: x R y iff y = f(x, i) for some index i.
/// Each index slice is an arity-1 machine; a slice may answer FAIL
/// (empty optional), meaning the index is not in use.
class RealEnumRel {
 public:
  using Family = std::function<std::optional<Answer>(const Query& query, std::uint64_t index)>;

  RealEnumRel(IndexSet omega, Family family);

  const IndexSet& omega() const { return omega_; }
  /// FAIL for indices outside omega.
  std::optional<Answer> answer(const Query& query, std::uint64_t index) const;

 private:
  IndexSet omega_;
  std::shared_ptr<const Family> family_;
};

/// Omega = naturals: index i < head.size() uses head[i], larger indices use tail.
RealEnumRel make_tail_rel(const std::vector<RealExpr>& head, const RealExpr& tail);
/// Omega = {0..k}: index i uses branches[i].
RealEnumRel make_finite_rel(const std::vector<RealExpr>& branches);

/// Every index answers as m.
RealEnumRel from_function(const FMachine& m);
/// The i0-th slice as a standalone machine. Throws std::invalid_argument if
/// i0 is outside omega or the slice answers FAIL. Later FAIL answers become
/// no-information answers.
FMachine project(const RealEnumRel& rel, std::uint64_t i0);

struct Witness {
  std::uint64_t index;
  Rational r;
  Rational eps;
};

struct IndexFailed {};

using WitnessOutcome = std::variant<Witness, IndexFailed, NoConvergence>;

/// Refines slice i at x until eps <= accuracy.
WitnessOutcome witness(const RealEnumRel& rel, const RealOracle& x, std::uint64_t i, const Rational& accuracy,
                       Fuel fuel);

struct WitnessList {
  std::vector<Witness> entries;
  std::vector<std::uint64_t> skipped;
};

/// Witnesses for indices 0..max_index (clipped to omega).
WitnessList enumerate(const RealEnumRel& rel, const RealOracle& x, const Rational& accuracy,
                      std::uint64_t max_index, Fuel fuel);

/// Groups witnesses whose sorted values are chained by gaps <= radius.
/// Returns one representative (smallest member) per cluster, ascending.
std::vector<Rational> cluster_witnesses(const std::vector<Witness>& entries, const Rational& radius);

struct Found {
  std::uint64_t index;
};
struct Exhausted {
  std::uint64_t searched;  ///< number of indices inspected
};

/// Exhausted is silence, not a refutation.
using MemberOutcome = std::variant<Found, Exhausted>;

/// Sequential search over indices 0..max_index: Found(i) when slice i at x
/// and y, both approximated to accuracy/4, are within accuracy/2 of each
/// other, which certifies |f(x, i) - y| <= accuracy.
MemberOutcome member_semi(const RealEnumRel& rel, const RealOracle& x, const RealOracle& y,
                          const Rational& accuracy, std::uint64_t max_index, Fuel fuel);

}  // namespace exactreal
