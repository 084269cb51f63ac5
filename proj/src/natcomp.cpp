/* SPDX-License-Identifier: Apache-2.0 */

#include "exactreal/natcomp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace exactreal::nat {

Natural pair(Natural a, Natural b) {
  using u128 = unsigned __int128;
  u128 s = static_cast<u128>(a) + b;
  u128 v = s * (s + 1) / 2 + b;
  if (v > std::numeric_limits<Natural>::max()) throw std::overflow_error("pair: result exceeds 64 bits");
  return static_cast<Natural>(v);
}

std::pair<Natural, Natural> unpair(Natural n) {
  using u128 = unsigned __int128;
  // Diagonal index w: largest w with w(w+1)/2 <= n. Start from the float
  // estimate and correct it exactly.
  auto tri = [](u128 w) { return w * (w + 1) / 2; };
  u128 w = static_cast<u128>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  while (tri(w) > n) --w;
  while (tri(w + 1) <= n) ++w;
  Natural b = static_cast<Natural>(n - tri(w));
  Natural a = static_cast<Natural>(w - b);
  return {a, b};
}

SemiDecidableNatRel dec_to_semi(const DecidableNatRel& r) {
  return {r.name, [f = r.char_fn](Natural x, Natural y, std::uint64_t fuel) -> RunResult {
            if (fuel >= 1 && f(x, y)) return Halt{1, 1};
            return std::nullopt;
          }};
}

EnumerableNatRel semi_to_enum(const SemiDecidableNatRel& s) {
  return {s.name, [p = s.program](Natural x, Natural j) -> Enumerated {
            auto [y, i] = unpair(j);
            auto res = p(x, y, i);
            if (res && res->value == 1) return y;
            return Fail;
          }};
}

EnumerableNatRel semi_to_enum_nonempty(const SemiDecidableNatRel& s, std::function<Natural(Natural)> witness) {
  return {s.name, [p = s.program, d = std::move(witness)](Natural x, Natural j) -> Enumerated {
            auto [y, i] = unpair(j);
            auto res = p(x, y, i);
            if (res && res->value == 1) return y;
            return d(x);
          }};
}

SemiDecidableNatRel enum_to_semi(const EnumerableNatRel& e) {
  return {e.name, [f = e.enumerate](Natural x, Natural y, std::uint64_t fuel) -> RunResult {
            for (std::uint64_t j = 0;; ++j) {
              if (f(x, j) == y) return Halt{1, j};
              if (j == fuel) return std::nullopt;
            }
          }};
}

EquivalenceReport equivalence_report(const DecidableNatRel& r, Natural bound, std::uint64_t fuel) {
  auto enumerated = semi_to_enum(dec_to_semi(r));
  auto roundtrip = enum_to_semi(enumerated);
  EquivalenceReport rep;
  for (Natural x = 0; x <= bound; ++x) {
    // enum_to_semi on (x, y) at this fuel halts at the first j <= fuel with
    // enumerate(x, j) == y. One pass over j answers every y at once.
    std::vector<std::optional<std::uint64_t>> first_hit(bound + 1);
    for (std::uint64_t j = 0; j <= fuel; ++j) {
      auto v = enumerated.enumerate(x, j);
      if (v && *v <= bound && !first_hit[*v]) first_hit[*v] = j;
    }
    for (Natural y = 0; y <= bound; ++y) {
      ++rep.total;
      bool member = r.char_fn(x, y);
      bool accepted = first_hit[y].has_value();
      if (accepted) {
        // Cross-check the shared scan against the search itself; it stops at the hit.
        auto res = roundtrip.run(x, y, fuel);
        if (!res || res->value != 1 || res->steps != *first_hit[y])
          throw std::logic_error("equivalence_report: shared scan disagrees with enum_to_semi");
      }
      if (member == accepted) ++rep.agreements;
      if (member && !accepted) ++rep.missed_positives;
      if (!member && accepted) ++rep.false_accepts;
      if (member && accepted && *first_hit[y] > rep.max_positive_fuel) rep.max_positive_fuel = *first_hit[y];
    }
  }
  return rep;
}

std::optional<DecidableNatRel> catalog_relation(std::string_view name) {
  if (name == "equality") return DecidableNatRel{"equality", [](Natural x, Natural y) { return x == y; }};
  if (name == "divisibility")
    return DecidableNatRel{"divisibility", [](Natural x, Natural y) { return x == 0 ? y == 0 : y % x == 0; }};
  if (name == "geq") return DecidableNatRel{"geq", [](Natural x, Natural y) { return y >= x; }};
  return std::nullopt;
}

std::vector<std::string> catalog_relation_names() { return {"equality", "divisibility", "geq"}; }

}  // namespace exactreal::nat
