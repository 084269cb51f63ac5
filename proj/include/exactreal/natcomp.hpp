/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exactreal::nat {

using Natural = std::uint64_t;

/// Cantor pairing (a+b)(a+b+1)/2 + b. Throws std::overflow_error when the
/// result does not fit in 64 bits.
Natural pair(Natural a, Natural b);
std::pair<Natural, Natural> unpair(Natural n);

struct Halt {
  Natural value;
  std::uint64_t steps;  ///< fuel actually consumed; halting at fuel f means steps <= f

  friend bool operator==(const Halt&, const Halt&) = default;
};

/// StillRunning is the empty optional.
using RunResult = std::optional<Halt>;

/// Step-indexed evaluation of a partial function of two naturals.
/// Implementations must be monotone in fuel.
using FueledProgram = std::function<RunResult(Natural x, Natural y, std::uint64_t fuel)>;

struct DecidableNatRel {
  std::string name;
  std::function<bool(Natural x, Natural y)> char_fn;
};

/// Partial characteristic function: halts with 1 exactly on members.
struct SemiDecidableNatRel {
  std::string name;
  FueledProgram program;

  RunResult run(Natural x, Natural y, std::uint64_t fuel) const { return program(x, y, fuel); }
};

/// An enumeration answer; the empty optional is FAIL, distinct from every natural.
using Enumerated = std::optional<Natural>;
inline constexpr std::nullopt_t Fail = std::nullopt;

/// y is related to x iff enumerate(x, j) == y for some j.
struct EnumerableNatRel {
  std::string name;
  std::function<Enumerated(Natural x, Natural j)> enumerate;
};

/// Halts with 1 where char_fn is 1, after one step; runs forever elsewhere.
SemiDecidableNatRel dec_to_semi(const DecidableNatRel& r);

/// enumerate(x, pair(y, i)) = y when the program halts on (x, y) within i steps, FAIL otherwise.
EnumerableNatRel semi_to_enum(const SemiDecidableNatRel& s);

/// As semi_to_enum, but answers witness(x) instead of FAIL. The caller
/// guarantees witness(x) is related to x.
EnumerableNatRel semi_to_enum_nonempty(const SemiDecidableNatRel& s, std::function<Natural(Natural)> witness);

/// Sequential search: at fuel f, inspects enumerate(x, 0..f) for y.
SemiDecidableNatRel enum_to_semi(const EnumerableNatRel& e);

struct EquivalenceReport {
  std::uint64_t total = 0;
  std::uint64_t agreements = 0;
  std::uint64_t missed_positives = 0;  ///< members not accepted within fuel
  std::uint64_t false_accepts = 0;     ///< non-members accepted: always a hard failure
  std::uint64_t max_positive_fuel = 0;

  bool full_agreement() const { return agreements == total && false_accepts == 0; }
};

/// Round trip decidable -> semi-decidable -> enumerable -> semi-decidable,
/// compared with char_fn on every (x, y) with x, y <= bound.
EquivalenceReport equivalence_report(const DecidableNatRel& r, Natural bound, std::uint64_t fuel);

/// Built-in relations: "equality", "divisibility" (x divides y), "geq" (y >= x).
std::optional<DecidableNatRel> catalog_relation(std::string_view name);
std::vector<std::string> catalog_relation_names();

}  // namespace exactreal::nat
