#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qsemi/analysis.hpp"
#include "qsemi/reduction.hpp"

using namespace qsemi;
using fx::error_of;

namespace {
  OperationTable binary(std::size_t k, std::vector<int> const& entries) {
    return make_table(k, 2, entries);
  }

  // A12 membership read directly off its definition.
  bool in_a12(OperationTable const& g) {
    auto const e = oracle::neutral(g);
    if (e.size() != 1 || !oracle::associative(g)) {
      return false;
    }
    std::size_t const k = g.carrier_size();
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        Element const v = g.value(x * k + y);
        if (x == y ? v != x && v != e[0] : v != x && v != y) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("compose_binary folds from the right") {
  CHECK(compose_binary(max_table(3, 2), 3) == max_table(3, 3));
  CHECK(compose_binary(sum_mod2(2), 3) == sum_mod2(3));
  CHECK(compose_binary(projection(2, 2, 2), 4) == projection(2, 4, 4));
  CHECK(compose_binary(sum_mod2(2), 2) == sum_mod2(2));
  CHECK(error_of([] { compose_binary(sum_mod2(3), 4); }) == ErrorKind::arity_mismatch);
}

TEST_CASE("compose_binary matches the reference fold on every binary table on [2] and [3]") {
  for (std::size_t k = 2; k <= 3; ++k) {
    oracle::for_each_tuple(k, k * k, [&](oracle::Tuple const& values) {
      auto const g = OperationTable::from_values(k, 2, values);
      for (std::size_t m = 2; m <= (k == 2 ? 5 : 3); ++m) {
        REQUIRE(oracle::reduces_to(g, compose_binary(g, m)));
      }
    });
  }
}

TEST_CASE("compose_ternary") {
  CHECK(compose_ternary(sum_mod2(3), 5) == sum_mod2(5));
  CHECK(compose_ternary(max_table(3, 3), 3) == max_table(3, 3));
  CHECK(compose_ternary(max_table(2, 3), 7) == max_table(2, 7));
  CHECK(error_of([] { compose_ternary(sum_mod2(3), 4); })
        == ErrorKind::even_target_arity);
  CHECK(error_of([] { compose_ternary(sum_mod2(2), 3); })
        == ErrorKind::arity_mismatch);
}

TEST_CASE("compose_ternary replaces the last window") {
  // Non-associative H: the recursion is fixed, so H_2(x1..x5) =
  // H(x1, x2, H(x3, x4, x5)).
  auto const h  = make_table(2, 3, std::vector<int>{2, 1, 1, 1, 1, 2, 2, 1});
  auto const h5 = compose_ternary(h, 5);
  oracle::for_each_tuple(2, 5, [&](oracle::Tuple const& x) {
    auto const inner = oracle::apply(h, {x[2], x[3], x[4]});
    REQUIRE(oracle::apply(h5, x) == oracle::apply(h, {x[0], x[1], inner}));
  });
}

TEST_CASE("reduction_from_neutral") {
  CHECK(reduction_from_neutral(sum_mod2(3), 0) == sum_mod2(2));
  CHECK(reduction_from_neutral(sum_mod2(3), 1) == binary(2, {2, 1, 1, 2}));
  CHECK(reduction_from_neutral(max_table(3, 3), 0) == max_table(3, 2));
  CHECK(error_of([] { reduction_from_neutral(max_table(3, 3), 2); })
        == ErrorKind::not_a_neutral_element);
}

TEST_CASE("candidate_reduction") {
  CHECK(candidate_reduction(max_table(3, 3)) == max_table(3, 2));
  CHECK(candidate_reduction(projection(2, 3, 1)) == projection(2, 2, 1));
  auto const g = candidate_reduction(sum_mod2(3));
  CHECK(g == projection(2, 2, 1));
  CHECK(compose_binary(g, 3) != sum_mod2(3));
}

TEST_CASE("ternary_reduction") {
  CHECK(ternary_reduction(sum_mod2(5)) == sum_mod2(3));
  CHECK(ternary_reduction(max_table(3, 5)) == max_table(3, 3));
  CHECK(ternary_reduction(sum_mod2(5), Element(1)) == sum_mod2(3));
  CHECK(error_of([] { ternary_reduction(max_table(2, 4)); })
        == ErrorKind::even_target_arity);
  CHECK(error_of([] { ternary_reduction(max_table(2, 2)); })
        == ErrorKind::arity_mismatch);
  CHECK(error_of([] { ternary_reduction(max_table(2, 3), Element(1)); })
        == ErrorKind::not_a_neutral_element);
}

TEST_CASE("all_binary_reductions") {
  auto const sum = all_binary_reductions(sum_mod2(3));
  CHECK(sum.complete);
  CHECK(sum.neutral_elements == std::vector<Element>{0, 1});
  REQUIRE(sum.reductions.size() == 2);
  CHECK(sum.reductions[0].table == sum_mod2(2));
  CHECK(sum.reductions[1].table == binary(2, {2, 1, 1, 2}));
  CHECK(sum.reductions[1].origin == ReductionOrigin::from_neutral);
  CHECK(sum.reductions[1].neutral == Element(1));

  auto const max = all_binary_reductions(max_table(3, 3));
  REQUIRE(max.reductions.size() == 1);
  CHECK(max.reductions[0].table == max_table(3, 2));

  auto const pi = all_binary_reductions(projection(3, 3, 1));
  CHECK(pi.neutral_elements.empty());
  REQUIRE(pi.reductions.size() == 1);
  CHECK(pi.reductions[0].origin == ReductionOrigin::idempotent_candidate);
  CHECK(pi.reductions[0].table == projection(3, 2, 1));

  CHECK(error_of([] { all_binary_reductions(diff3()); })
        == ErrorKind::not_associative_quasitrivial);
  CHECK(error_of([] { all_binary_reductions(sum_mod2(2)); })
        == ErrorKind::not_associative_quasitrivial);
}

TEST_CASE("classify_binary") {
  auto const sum = classify_binary(sum_mod2(2));
  CHECK(sum.tag == BinaryTag::a12_minus_q12);
  CHECK(sum.neutral == Element(0));
  CHECK(sum.exceptional_pair == std::pair<Element, Element>{1, 0});

  auto const max = classify_binary(max_table(3, 2));
  CHECK(max.tag == BinaryTag::q12);
  CHECK(max.neutral == Element(0));
  CHECK_FALSE(max.exceptional_pair);

  CHECK(classify_binary(projection(3, 2, 1)).tag
        == BinaryTag::quasitrivial_no_neutral);
  CHECK(classify_binary(binary(2, {2, 1, 1, 1})).tag == BinaryTag::other);
  CHECK(fx::error_of([] { classify_binary(diff3()); }) == ErrorKind::arity_mismatch);
}

TEST_CASE("classify_binary agrees with the definitions on every binary table, k <= 3") {
  std::size_t a12_minus_q12 = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    oracle::for_each_tuple(k, k * k, [&](oracle::Tuple const& values) {
      auto const g      = OperationTable::from_values(k, 2, values);
      auto const c      = classify_binary(g);
      bool const qt     = oracle::quasitrivial(g);
      bool const assoc  = oracle::associative(g);
      auto const e      = oracle::neutral(g);
      bool const member = in_a12(g);
      if (assoc && qt && e.size() == 1) {
        REQUIRE(c.tag == BinaryTag::q12);
        REQUIRE(c.neutral == e[0]);
      } else if (member) {
        REQUIRE(c.tag == BinaryTag::a12_minus_q12);
        ++a12_minus_q12;
        // The pair characterisation names the same two elements.
        auto const pair = a12_exceptional_pair(g);
        REQUIRE(pair);
        REQUIRE(c.exceptional_pair);
        auto [x, y] = *c.exceptional_pair;
        REQUIRE(std::min(x, y) == pair->first);
        REQUIRE(std::max(x, y) == pair->second);
        REQUIRE(g.value(x * k + x) == y);
        REQUIRE(y == e[0]);
        // e has more than one preimage, unlike in Q12.
        REQUIRE(std::count(g.values().begin(), g.values().end(), e[0]) > 1);
      } else if (assoc && qt && e.empty()) {
        REQUIRE(c.tag == BinaryTag::quasitrivial_no_neutral);
      } else {
        REQUIRE(c.tag == BinaryTag::other);
        REQUIRE_FALSE(a12_exceptional_pair(g));
      }
    });
  }
  // a12 - q12 = k(k-1) q2(k-2): 0, 2, 6 for k = 1, 2, 3.
  CHECK(a12_minus_q12 == 8);
}

TEST_CASE("reduction invariants over every associative quasitrivial table, k <= 3, n in {2, 3}") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = 2; n <= 3; ++n) {
      for (auto const& f : fx::all_associative_quasitrivial(k, n)) {
        auto const set = all_binary_reductions(f);
        auto const e   = neutral_elements(f);
        CHECK(set.complete);
        CHECK(set.reductions.size() == std::max<std::size_t>(1, e.size()));
        CHECK(e.size() <= (n % 2 == 0 ? 1u : 2u));

        std::set<std::vector<Element>> distinct;
        for (auto const& r : set.reductions) {
          CHECK(oracle::reduces_to(r.table, f));
          CHECK(oracle::associative(r.table));
          distinct.emplace(r.table.values().begin(), r.table.values().end());
        }
        CHECK(distinct.size() == set.reductions.size());

        bool const both_a12 = set.reductions.size() == 2
                              && std::all_of(set.reductions.begin(),
                                             set.reductions.end(), [](auto& r) {
                                               return classify_binary(r.table).tag
                                                      == BinaryTag::a12_minus_q12;
                                             });
        CHECK((e.size() == 2) == (n % 2 == 1 && both_a12));
      }
    }
  }
}

TEST_CASE("an A12 minus Q12 table composes to a quasitrivial operation iff the arity is odd") {
  std::size_t seen = 0;
  for (std::size_t k = 2; k <= 3; ++k) {
    oracle::for_each_tuple(k, k * k, [&](oracle::Tuple const& values) {
      auto const g = OperationTable::from_values(k, 2, values);
      if (classify_binary(g).tag != BinaryTag::a12_minus_q12) {
        return;
      }
      ++seen;
      for (std::size_t n = 2; n <= 5; ++n) {
        REQUIRE(is_quasitrivial(compose_binary(g, n)) == (n % 2 == 1));
      }
    });
  }
  CHECK(seen == 8);
}

TEST_CASE("neutral on a two-element restriction means neutral, ternary, k <= 3") {
  for (std::size_t k = 2; k <= 3; ++k) {
    for (auto const& h : fx::all_associative_quasitrivial(k, 3)) {
      for (Element a1 = 0; a1 < k; ++a1) {
        for (Element a2 = a1 + 1; a2 < k; ++a2) {
          // Both neutral for the restriction to {a1, a2}^3.
          bool restricted = true;
          for (Element e : {a1, a2}) {
            for (Element x : {a1, a2}) {
              for (std::size_t i = 0; i < 3; ++i) {
                oracle::Tuple t(3, e);
                t[i]       = x;
                restricted = restricted && oracle::apply(h, t) == x;
              }
            }
          }
          if (restricted) {
            auto const e = neutral_elements(h);
            CHECK(std::find(e.begin(), e.end(), a1) != e.end());
            CHECK(std::find(e.begin(), e.end(), a2) != e.end());
          }
        }
      }
    }
  }
}

TEST_CASE("ternary reductions are associative and quasitrivial") {
  auto const check = [](std::size_t k, std::size_t n) {
    for (auto const& f : fx::all_associative_quasitrivial(k, n)) {
      auto const h = ternary_reduction(f);
      REQUIRE(h.arity() == 3);
      CHECK(oracle::quasitrivial(h));
      CHECK(oracle::associative(h));
      CHECK(compose_ternary(h, n) == f);
    }
  };
  check(1, 3);
  check(2, 3);
  check(2, 5);
  check(3, 3);
}
