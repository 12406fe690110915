#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qsemi/counting.hpp"

using namespace qsemi;
using fx::error_of;

TEST_CASE("Stirling numbers of the second kind") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 5) == 1);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 0) == 0);
  CHECK(error_of([] { stirling2(2, 3); }) == ErrorKind::domain_error);

  for (std::size_t k = 0; k <= 20; ++k) {
    for (std::size_t l = 0; l <= k; ++l) {
      REQUIRE(stirling2(k, l) == stirling2_alternating(k, l));
    }
  }
  for (std::size_t k = 0; k <= 9; ++k) {
    for (std::size_t l = 0; l <= k; ++l) {
      REQUIRE(stirling2(k, l) == oracle::stirling2(k, l));
    }
  }
}

TEST_CASE("small combinatorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(factorial(25) == BigInt("15511210043330985984000000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(fubini(4) == 75);
  CHECK(fubini(5) == 541);
}

TEST_CASE("binary counts") {
  CHECK(count_q2(0) == 1);
  CHECK(count_q2(1) == 1);
  CHECK(count_q2(2) == 4);
  CHECK(count_q2(4) == 138);
  CHECK(count_q2_1(1) == 1);
  CHECK(count_q2_1(3) == 12);
  CHECK(count_q2_1(6) == 7092);
  CHECK(count_a2_1(1) == 1);
  CHECK(count_a2_1(2) == 4);
  CHECK(count_a2_1(4) == 128);
  CHECK(error_of([] { count_q2_1(0); }) == ErrorKind::domain_error);
  CHECK(error_of([] { count_a2_1(0); }) == ErrorKind::domain_error);
}

TEST_CASE("n-ary counts") {
  CHECK(count_qn(3, Parity::odd) == 23);
  CHECK(count_qn(3, Parity::even) == 20);
  CHECK(count_qn_2(5, Parity::odd) == 200);
  CHECK(count_qn_2(5, Parity::even) == 0);
  CHECK(count_qn_2(1, Parity::odd) == 0);
  CHECK(count_qn_0(3) == 8);
  CHECK(count_qn_1(3) == 12);
  CHECK(error_of([] { count_qn(0, Parity::odd); }) == ErrorKind::domain_error);
}

TEST_CASE("symmetric counts") {
  auto const three = count_qs_family(3, Parity::odd);
  CHECK(three.qs2 == 6);
  CHECK(three.as2_1 == 12);
  CHECK(three.qsn == 9);
  CHECK(three.qsn_2 == 3);
  CHECK(three.qsn_1 == 6);
  auto const even = count_qs_family(3, Parity::even);
  CHECK(even.qsn == 6);
  CHECK(even.qsn_2 == 0);
  CHECK(count_qs_family(2, Parity::odd).as2_1 == 4);
  auto const one = count_qs_family(1, Parity::odd);
  CHECK(one.qs2 == 1);
  CHECK(one.qsn == 1);
  CHECK(one.qsn_2 == 0);
}

TEST_CASE("internal identities, k = 1..30") {
  for (std::size_t k = 1; k <= 30; ++k) {
    for (auto parity : {Parity::even, Parity::odd}) {
      auto const r = formula_counts(k, parity);
      REQUIRE(*r.qn == *r.qn_0 + *r.qn_1 + *r.qn_2);
    }
    auto const odd = formula_counts(k, Parity::odd);
    if (k >= 2) {
      REQUIRE(*odd.a2_1 == *odd.q2_1 + k * count_q2_1(k - 1));
      REQUIRE(*odd.qn_2 == (*odd.a2_1 - *odd.q2_1) / 2);
    }
    if (k >= 3) {
      auto const prev = count_qs_family(k - 1, Parity::odd);
      REQUIRE(*odd.as2_1 == *odd.qs2 + k * prev.qs2);
      REQUIRE(*odd.qsn_2 == (*odd.as2_1 - *odd.qs2) / 2);
    }
  }
}

TEST_CASE("exact arithmetic past 64 bits") {
  auto const big = count_q2(30);
  CHECK(big > BigInt(std::numeric_limits<std::uint64_t>::max()));
  CHECK(big == count_qn(30, Parity::even));
}

TEST_CASE("the reference table") {
  auto const rows = table1_golden();
  REQUIRE(rows.size() == 6);
  CHECK(rows[5].q2 == 12166);
  CHECK(rows[5].q2_1 == 7092);
  CHECK(rows[5].qn_0 == 5074);
  CHECK(rows[5].qn_2 == 2070);
  CHECK(rows[5].qn == 14236);
  CHECK(rows[5].a2_1 == 11232);
  CHECK(std::string(table1_columns()[0].oeis) == "A292932");
  CHECK(std::string(table1_columns()[5].oeis) == "A308351");

  auto const cells = verify_table1();
  CHECK(cells.size() == 36);
  for (auto const& cell : cells) {
    CHECK_MESSAGE(cell.matches(), "k=" << cell.k << " " << cell.column);
  }

  auto const faulty = verify_table1(std::pair<std::size_t, std::string>{4, "qn_2"});
  std::size_t bad   = 0;
  for (auto const& cell : faulty) {
    if (!cell.matches()) {
      ++bad;
      CHECK(cell.k == 4);
      CHECK(cell.column == "qn_2");
    }
  }
  CHECK(bad == 1);
}
