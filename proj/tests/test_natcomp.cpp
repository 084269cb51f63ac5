/* SPDX-License-Identifier: Apache-2.0 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "exactreal/natcomp.hpp"

using namespace exactreal::nat;

namespace {

DecidableNatRel rel(const char* name) { return catalog_relation(name).value(); }

/// Inverse of the pairing by search over the defining formula.
std::pair<Natural, Natural> unpair_by_search(Natural n) {
  for (Natural s = 0;; ++s)
    for (Natural b = 0; b <= s; ++b)
      if (s * (s + 1) / 2 + b == n) return {s - b, b};
}

bool halts_with_one(const RunResult& r) { return r && r->value == 1; }

}  // namespace

TEST_CASE("Cantor pairing") {
  CHECK(pair(0, 0) == 0);
  CHECK(pair(1, 2) == 8);
  CHECK(unpair(8) == std::pair<Natural, Natural>{1, 2});
  CHECK(unpair_by_search(8) == std::pair<Natural, Natural>{1, 2});
  CHECK_THROWS_AS(pair(1ULL << 33, 1ULL << 33), std::overflow_error);
  // large values near the float-estimate boundary
  for (Natural w : {Natural(4294967295), Natural(6074000999)}) {
    auto n = static_cast<Natural>(static_cast<unsigned __int128>(w) * (w + 1) / 2);
    CHECK(unpair(n) == std::pair<Natural, Natural>{w, 0});
    CHECK(unpair(n - 1) == std::pair<Natural, Natural>{0, w - 1});
  }
}

TEST_CASE("property: pair and unpair are mutually inverse") {
  for (Natural n = 0; n < 100000; ++n) {
    auto [a, b] = unpair(n);
    REQUIRE(pair(a, b) == n);
  }
  for (Natural a = 0; a < 300; ++a)
    for (Natural b = 0; b < 300; ++b) REQUIRE(unpair(pair(a, b)) == std::pair{a, b});
  for (Natural n : {Natural(0), Natural(1), Natural(2), Natural(57), Natural(1000)})
    CHECK(unpair(n) == unpair_by_search(n));
}

TEST_CASE("dec_to_semi") {
  auto eq = dec_to_semi(rel("equality"));
  CHECK(halts_with_one(eq.run(3, 3, 1)));
  CHECK(!eq.run(3, 4, 1000000).has_value());
  CHECK(!eq.run(3, 3, 0).has_value());
  auto div = dec_to_semi(rel("divisibility"));
  CHECK(halts_with_one(div.run(2, 6, 5)));
  CHECK(!div.run(4, 6, 5).has_value());
  CHECK(halts_with_one(div.run(0, 0, 1)));
  CHECK(!div.run(0, 3, 1).has_value());
}

TEST_CASE("semi_to_enum") {
  auto div = semi_to_enum(dec_to_semi(rel("divisibility")));
  std::set<Natural> values;
  for (Natural j = 0; j < 100000; ++j)
    if (auto y = div.enumerate(2, j)) values.insert(*y);
  CHECK(!values.empty());
  for (Natural y : values) CHECK(y % 2 == 0);
  CHECK(values.count(0) == 1);
  CHECK(values.count(10) == 1);

  CHECK(div.enumerate(2, pair(5, 1000000)) == Fail);
  CHECK(div.enumerate(2, pair(6, 1)) == Enumerated(6));
  CHECK(div.enumerate(2, pair(6, 0)) == Fail);

  DecidableNatRel empty{"empty", [](Natural, Natural) { return false; }};
  auto none = semi_to_enum(dec_to_semi(empty));
  for (Natural x = 0; x < 5; ++x)
    for (Natural j = 0; j < 2000; ++j) CHECK(none.enumerate(x, j) == Fail);
}

TEST_CASE("semi_to_enum_nonempty") {
  auto div = semi_to_enum_nonempty(dec_to_semi(rel("divisibility")), [](Natural) { return 0; });
  std::set<Natural> range;
  for (Natural j = 0; j < 10000; ++j) {
    auto y = div.enumerate(3, j);
    REQUIRE(y.has_value());
    range.insert(*y);
  }
  CHECK(range.count(0) == 1);
  for (Natural y : range) CHECK(y % 3 == 0);

  auto eq = semi_to_enum_nonempty(dec_to_semi(rel("equality")), [](Natural x) { return x; });
  std::set<Natural> singleton;
  for (Natural j = 0; j < 10000; ++j) singleton.insert(eq.enumerate(7, j).value());
  CHECK(singleton == std::set<Natural>{7});

  auto geq = semi_to_enum_nonempty(dec_to_semi(rel("geq")), [](Natural x) { return x; });
  for (Natural j = 0; j < 10000; ++j) CHECK(geq.enumerate(4, j).value() >= 4);
}

TEST_CASE("witness contract d(x) in R_x, checked by sampling") {
  struct Case {
    const char* name;
    std::function<Natural(Natural)> d;
  };
  for (const auto& c : {Case{"divisibility", [](Natural) { return Natural(0); }},
                        Case{"equality", [](Natural x) { return x; }}, Case{"geq", [](Natural x) { return x; }}}) {
    auto s = dec_to_semi(rel(c.name));
    for (Natural x = 0; x < 200; ++x) CHECK(halts_with_one(s.run(x, c.d(x), 1)));
  }
}

TEST_CASE("enum_to_semi") {
  EnumerableNatRel id{"identity", [](Natural x, Natural) -> Enumerated { return x; }};
  auto s = enum_to_semi(id);
  CHECK(halts_with_one(s.run(5, 5, 0)));
  CHECK(!s.run(5, 6, 1000).has_value());

  auto div = enum_to_semi(semi_to_enum(dec_to_semi(rel("divisibility"))));
  auto hit = div.run(2, 4, 1000000);
  REQUIRE(halts_with_one(hit));
  CHECK(hit->steps == pair(4, 1));
  CHECK(!div.run(2, 5, 1000000).has_value());
}

TEST_CASE("property: fuel monotonicity of constructed programs") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Natural> small(0, 30);
  std::uniform_int_distribution<std::uint64_t> fuel(0, 3000);
  for (const auto& name : catalog_relation_names()) {
    auto d = dec_to_semi(rel(name.c_str()));
    auto rt = enum_to_semi(semi_to_enum(d));
    for (int k = 0; k < 200; ++k) {
      Natural x = small(rng), y = small(rng);
      std::uint64_t f1 = fuel(rng), f2 = f1 + fuel(rng);
      for (const auto* p : {&d, &rt}) {
        auto a = p->run(x, y, f1);
        auto b = p->run(x, y, f2);
        if (a) CHECK(b == a);
        if (a) CHECK(a->steps <= f1);
      }
    }
  }
}

TEST_CASE("property: round trip never accepts a rejected pair") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<Natural> small(0, 60);
  for (const auto& name : catalog_relation_names()) {
    auto r = rel(name.c_str());
    auto rt = enum_to_semi(semi_to_enum(dec_to_semi(r)));
    for (int k = 0; k < 100; ++k) {
      Natural x = small(rng), y = small(rng);
      if (r.char_fn(x, y)) continue;
      CHECK(!rt.run(x, y, 20000).has_value());
    }
  }
}

TEST_CASE("equivalence_report") {
  for (const auto& name : catalog_relation_names()) {
    auto rep = equivalence_report(rel(name.c_str()), 12, 100000);
    INFO(name);
    CHECK(rep.total == 169);
    CHECK(rep.full_agreement());
    CHECK(rep.false_accepts == 0);
    CHECK(rep.max_positive_fuel > 0);
    // completeness at the recorded fuel
    auto at_recorded = equivalence_report(rel(name.c_str()), 12, rep.max_positive_fuel);
    CHECK(at_recorded.missed_positives == 0);
  }
  // insufficient fuel misses positives but never accepts negatives
  auto starved = equivalence_report(rel("geq"), 12, 3);
  CHECK(starved.missed_positives > 0);
  CHECK(starved.false_accepts == 0);
  CHECK(!catalog_relation("nope").has_value());
}
