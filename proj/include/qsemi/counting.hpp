#pragma once

// Closed-form counts of associative quasitrivial operations on [k], with
// exact integer arithmetic, and the published reference values.

#include <array>     // for array
#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include <boost/multiprecision/cpp_int.hpp>

namespace qsemi {

  using BigInt = boost::multiprecision::cpp_int;

  enum class Parity { even, odd };

  constexpr Parity parity_of(std::size_t n) noexcept {
    return n % 2 == 0 ? Parity::even : Parity::odd;
  }

  BigInt factorial(std::size_t n);
  BigInt binomial(std::size_t n, std::size_t r);

  //! Stirling numbers of the second kind via S(n, l) = l S(n-1, l) +
  //! S(n-1, l-1). Throws DomainError unless l <= k.
  BigInt stirling2(std::size_t k, std::size_t l);
  //! The same numbers from the alternating sum (1/l!) sum (-1)^(l-i) C(l,i) i^k.
  BigInt stirling2_alternating(std::size_t k, std::size_t l);

  //! Ordered Bell numbers: the number of weak orderings of [k].
  BigInt fubini(std::size_t k);

  //! Associative quasitrivial binary operations on [k] (k >= 0).
  BigInt count_q2(std::size_t k);
  //! ... with a neutral element: k q2(k-1), k >= 1.
  BigInt count_q2_1(std::size_t k);
  //! |A12([k])| = k q2(k-1) + k(k-1) q2(k-2), with a12(1) = 1.
  BigInt count_a2_1(std::size_t k);

  //! n-ary counts, by number of neutral elements (k >= 1).
  BigInt count_qn_0(std::size_t k);
  BigInt count_qn_1(std::size_t k);
  BigInt count_qn_2(std::size_t k, Parity parity);
  BigInt count_qn(std::size_t k, Parity parity);

  //! Symmetric counts (k >= 1; k = 1 is the single all-ones table).
  struct SymmetricCounts {
    BigInt qs2;
    BigInt qsn_1;
    BigInt qsn_2;
    BigInt qsn;
    BigInt as2_1;
  };
  SymmetricCounts count_qs_family(std::size_t k, Parity parity);

  enum class CountSource { formula, brute_force };

  //! Every counting sequence at one k. Fields left empty were not computed
  //! (brute-force reports only fill what they enumerated).
  struct CountsReport {
    std::size_t                k;
    Parity                     parity;
    std::optional<std::size_t> arity;  // set for brute-force reports
    CountSource                source;

    std::optional<BigInt> q2, q2_1, a2_1;
    std::optional<BigInt> qn_0, qn_1, qn_2, qn;
    std::optional<BigInt> qs2, qsn_1, qsn_2, qsn, as2_1;
  };

  //! Field names in report order, with the OEIS id where one exists.
  struct CountField {
    char const*                         name;
    char const*                         oeis;  // empty if none
    std::optional<BigInt> CountsReport::*member;
  };
  std::span<CountField const> count_fields();

  CountsReport formula_counts(std::size_t k, Parity parity);

  //! One row of the published table of first values (n odd for the n-ary
  //! columns).
  struct Table1Row {
    std::size_t   k;
    std::uint64_t q2, q2_1, qn_0, qn_2, qn, a2_1;
  };

  struct Table1Column {
    char const*              name;
    char const*              oeis;
    std::uint64_t Table1Row::*member;
  };

  std::span<Table1Row const>         table1_golden();
  std::span<Table1Column const, 6>   table1_columns();

  struct Table1Cell {
    std::size_t   k;
    std::string   column;
    std::uint64_t expected;
    BigInt        computed;
    [[nodiscard]] bool matches() const {
      return computed == expected;
    }
  };

  //! Recomputes every golden cell from the formulas. fault, if given, adds
  //! one to the computed value of that (k, column) cell.
  std::vector<Table1Cell> verify_table1(
      std::optional<std::pair<std::size_t, std::string>> fault = std::nullopt);

}  // namespace qsemi
