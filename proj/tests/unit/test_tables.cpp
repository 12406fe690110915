#include <doctest.h>

#include <array>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qsemi/error.hpp"
#include "qsemi/table.hpp"

using namespace qsemi;

namespace {
  ErrorKind kind_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::internal_contradiction;
  }

  std::vector<int> ints(std::initializer_list<int> xs) {
    return xs;
  }
}  // namespace

TEST_CASE("make_table validates its input") {
  auto const pi1 = make_table(2, 2, ints({1, 1, 2, 2}));
  CHECK(pi1 == projection(2, 2, 1));

  CHECK(kind_of([] { make_table(2, 3, ints({1, 1, 1, 1, 1, 1, 1})); })
        == ErrorKind::length_mismatch);
  CHECK(kind_of([] { make_table(2, 2, ints({1, 1, 3, 2})); })
        == ErrorKind::value_out_of_range);
  CHECK(kind_of([] { make_table(2, 2, ints({1, 0, 2, 2})); })
        == ErrorKind::value_out_of_range);
  CHECK(kind_of([] { make_table(0, 2, ints({})); })
        == ErrorKind::arity_or_size_invalid);
  CHECK(kind_of([] { make_table(2, 0, ints({1})); })
        == ErrorKind::arity_or_size_invalid);
}

TEST_CASE("evaluate is 1-based") {
  CHECK(evaluate(projection(2, 2, 1), ints({2, 1})) == 2);
  CHECK(evaluate(sum_mod2(3), ints({2, 2, 2})) == 2);
  CHECK(evaluate(max_table(3, 3), ints({1, 3, 2})) == 3);
  CHECK(kind_of([] { evaluate(sum_mod2(3), ints({1, 2})); })
        == ErrorKind::tuple_arity_mismatch);
  CHECK(kind_of([] { evaluate(sum_mod2(3), ints({1, 2, 3})); })
        == ErrorKind::value_out_of_range);
}

TEST_CASE("index order is lexicographic with the last coordinate fastest") {
  auto const t = make_table(2, 3, ints({1, 1, 1, 1, 2, 2, 2, 2}));
  CHECK(t == projection(2, 3, 1));
  std::array<Element, 3> tuple{};
  t.decode(5, tuple);
  CHECK(tuple == std::array<Element, 3>{1, 0, 1});
  CHECK(t.index_of(tuple) == 5);
  CHECK(t.weight(0) == 4);
  CHECK(t.diagonal_index(1) == 7);
}

TEST_CASE("pointwise predicates on the named tables") {
  CHECK(is_idempotent(max_table(3, 3)));
  CHECK_FALSE(is_idempotent(sum_mod2(2)));
  CHECK(is_idempotent(sum_mod2(3)));

  CHECK(is_quasitrivial(sum_mod2(3)));
  CHECK_FALSE(is_quasitrivial(sum_mod2(2)));
  CHECK(is_quasitrivial(projection(4, 3, 1)));
  CHECK_FALSE(is_quasitrivial(diff3()));

  CHECK(is_symmetric(max_table(3, 3)));
  CHECK_FALSE(is_symmetric(projection(2, 2, 1)));
  CHECK(is_symmetric(sum_mod2(3)));
}

TEST_CASE("naive associativity") {
  CHECK(is_associative_naive(sum_mod2(3)));
  CHECK(is_associative_naive(diff3()));
  CHECK_FALSE(is_associative_naive(make_table(2, 2, ints({2, 1, 1, 1}))));
  CHECK(kind_of([] { is_associative_naive(projection(2, 1, 1)); })
        == ErrorKind::arity_too_small);
}

TEST_CASE("naive associativity agrees with the reference on every binary table, k <= 3") {
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    oracle::for_each_tuple(k, k * k, [&](oracle::Tuple const& values) {
      auto const t = OperationTable::from_values(k, 2, values);
      REQUIRE(is_associative_naive(t) == oracle::associative(t));
      REQUIRE(is_quasitrivial(t) == oracle::quasitrivial(t));
      REQUIRE(is_symmetric(t) == oracle::symmetric(t));
      REQUIRE(neutral_elements(t) == oracle::neutral(t));
      ++checked;
    });
  }
  CHECK(checked == 1 + 16 + 19683);
}

TEST_CASE("naive associativity agrees with the reference on every ternary table on [2]") {
  oracle::for_each_tuple(2, 8, [&](oracle::Tuple const& values) {
    auto const t = OperationTable::from_values(2, 3, values);
    REQUIRE(is_associative_naive(t) == oracle::associative(t));
    REQUIRE(is_symmetric(t) == oracle::symmetric(t));
    REQUIRE(neutral_elements(t) == oracle::neutral(t));
  });
}

TEST_CASE("bisymmetry") {
  CHECK(is_bisymmetric(sum_mod2(3)));
  CHECK(is_bisymmetric(projection(2, 2, 1)));
  // [2,1,1,1] is NOR under 1 -> 0, 2 -> 1.
  CHECK_FALSE(is_bisymmetric(make_table(2, 2, ints({2, 1, 1, 1}))));
  CHECK(kind_of([] { is_bisymmetric(max_table(4, 4), 1000); })
        == ErrorKind::cost_limit_exceeded);
}

TEST_CASE("neutral elements and annihilators") {
  CHECK(neutral_elements(sum_mod2(3)) == std::vector<Element>{0, 1});
  CHECK(neutral_elements(max_table(3, 3)) == std::vector<Element>{0});
  CHECK(neutral_elements(projection(2, 2, 1)).empty());

  CHECK(annihilator(max_table(2, 3)) == Element(1));
  CHECK(annihilator_by_preimage(max_table(2, 3)) == Element(1));
  CHECK_FALSE(annihilator(projection(2, 2, 1)));
  CHECK_FALSE(annihilator(sum_mod2(3)));
}

TEST_CASE("preimage sequences") {
  CHECK(preimage_sequence(max_table(2, 3)).counts
        == std::vector<std::uint64_t>{1, 7});
  CHECK(preimage_sequence(projection(2, 2, 1)).counts
        == std::vector<std::uint64_t>{2, 2});
  CHECK(preimage_sequence(sum_mod2(3)).counts
        == std::vector<std::uint64_t>{4, 4});
  CHECK(max_preimage_sequence(3, 2).counts
        == std::vector<std::uint64_t>{1, 3, 5});
  CHECK(preimage_counts(max_table(3, 2)) == std::vector<std::uint64_t>{1, 3, 5});
}

TEST_CASE("contour components") {
  auto const max22 = contour_components(max_table(2, 2));
  REQUIRE(max22.classes.size() == 2);
  CHECK(max22.classes[0].value == 0);
  CHECK(max22.classes[0].tuples == std::vector<std::size_t>{0});
  CHECK(max22.classes[1].tuples == std::vector<std::size_t>{1, 2, 3});

  auto const pi1 = contour_components(projection(2, 2, 1));
  REQUIRE(pi1.classes.size() == 2);
  CHECK(pi1.classes[0].tuples == std::vector<std::size_t>{0, 1});
  CHECK(pi1.classes[1].tuples == std::vector<std::size_t>{2, 3});

  CHECK(is_quasitrivial_by_contour(sum_mod2(3)));
  CHECK_FALSE(is_quasitrivial_by_contour(diff3()));
}

TEST_CASE("contour criterion equals quasitriviality on every table, k = 2, n <= 3 and k = 3, n = 2") {
  auto const sweep = [](std::size_t k, std::size_t n) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      size *= k;
    }
    oracle::for_each_tuple(k, size, [&](oracle::Tuple const& values) {
      auto const t = OperationTable::from_values(k, n, values);
      REQUIRE(is_quasitrivial_by_contour(t) == oracle::quasitrivial(t));
    });
  };
  sweep(2, 1);
  sweep(2, 2);
  sweep(2, 3);
  sweep(3, 2);
}

TEST_CASE("order preservation") {
  std::array<Element, 3> const natural{0, 1, 2};
  std::array<Element, 2> const up{0, 1};
  std::array<Element, 2> const down{1, 0};
  CHECK(is_order_preserving(max_table(3, 2), natural));
  CHECK_FALSE(is_order_preserving(sum_mod2(2), up));
  CHECK_FALSE(is_order_preserving(sum_mod2(2), down));
  std::array<Element, 3> const top_first{2, 0, 1};
  CHECK(is_order_preserving(max_table(3, 2), top_first));
  std::array<Element, 3> const order{0, 2, 1};
  CHECK(is_order_preserving(projection(3, 2, 1), order));
  CHECK_FALSE(is_order_preserving(max_table(3, 2), order));

  std::array<Element, 3> const bad{0, 0, 1};
  CHECK(kind_of([&] { is_order_preserving(max_table(3, 2), bad); })
        == ErrorKind::not_a_permutation);
}
