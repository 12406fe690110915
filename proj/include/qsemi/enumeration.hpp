#pragma once

// Generators for quasitrivial tables and the brute-force counting oracles.

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <span>        // for span
#include <vector>      // for vector

#include "qsemi/counting.hpp"
#include "qsemi/table.hpp"

namespace qsemi {

  inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t(1)
                                                              << 31;

  //! Every associative quasitrivial binary table on [k], each exactly once,
  //! in the order weak orderings x block projections, first occurrence kept.
  std::vector<OperationTable> generate_quasitrivial_associative_binary(
      std::size_t k);

  //! Number of quasitrivial tables on [k]^n: the product over off-diagonal
  //! tuples of their number of distinct components.
  BigInt quasitrivial_space_size(std::size_t k, std::size_t n);

  //! Streams the quasitrivial tables of arity n on [k] in lexicographic
  //! order of their value vectors. Diagonal cells are fixed; every other
  //! cell ranges over the distinct components of its tuple.
  class QuasitrivialTables {
   public:
    //! Throws CostLimitExceeded if the stream is longer than budget.
    QuasitrivialTables(std::size_t k, std::size_t n,
                       std::uint64_t budget = default_enumeration_budget);

    [[nodiscard]] std::uint64_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] std::size_t carrier_size() const noexcept {
      return _k;
    }
    [[nodiscard]] std::size_t arity() const noexcept {
      return _n;
    }

    //! The current table. Valid after construction (rank 0) and after each
    //! successful call to next() or seek().
    [[nodiscard]] std::span<Element const> values() const noexcept {
      return _values;
    }
    [[nodiscard]] std::uint64_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] OperationTable table() const;

    //! Advances to the next table. Returns false after the last one, with
    //! the stream wrapped back to rank 0.
    bool next() noexcept;
    //! Jumps to the table of the given rank (< size()).
    void seek(std::uint64_t rank);

   private:
    struct FreeCell {
      std::size_t          index;
      std::vector<Element> choices;
    };

    std::size_t           _k;
    std::size_t           _n;
    std::uint64_t         _size;
    std::uint64_t         _rank;
    std::vector<FreeCell> _cells;
    std::vector<uint8_t>  _digit;
    std::vector<Element>  _values;
  };

  //! Ranks of a deterministic stratified sample: the stream is cut into
  //! count equal strata and one rank is drawn from each with a fixed seed.
  std::vector<std::uint64_t> stratified_sample(std::uint64_t size,
                                               std::uint64_t count,
                                               std::uint64_t seed = 0);

  //! Backtracking over the quasitrivial tables, rejecting a partial table as
  //! soon as a fully assigned instance of the associativity identity fails.
  //! Calls visit on exactly the associative quasitrivial tables, in
  //! lexicographic order. Requires n >= 2; throws CostLimitExceeded if the
  //! unpruned space is larger than budget.
  void for_each_associative_quasitrivial_table(
      std::size_t k, std::size_t n,
      std::function<void(std::span<Element const>)> const& visit,
      std::uint64_t budget = default_enumeration_budget);

  enum class Oracle { naive, fast };

  struct BruteOptions {
    Oracle        oracle = Oracle::naive;
    bool          prune  = true;
    std::uint64_t budget = default_enumeration_budget;
  };

  struct BruteCounts {
    std::size_t                k;
    std::size_t                n;
    std::uint64_t              examined;      // tables visited
    std::uint64_t              associative;
    std::vector<std::uint64_t> by_neutral;    // index = number of neutral elements
    std::uint64_t              symmetric;
    std::vector<std::uint64_t> symmetric_by_neutral;
  };

  //! Counts the associative quasitrivial tables on [k]^n by exhaustion. With
  //! prune, the pruned search supplies the candidates and the oracle
  //! re-checks each of them; without it, every quasitrivial table is tested.
  BruteCounts brute_count(std::size_t k, std::size_t n,
                          BruteOptions const& options = {});

  struct BruteA12Counts {
    std::uint64_t a12;   // associative, one neutral element, A12 shape
    std::uint64_t q12;   // ... and quasitrivial
    std::uint64_t as12;  // symmetric members of a12
    std::uint64_t qs12;  // symmetric members of q12
  };

  //! Binary tables whose off-diagonal cells are quasitrivial and whose
  //! diagonal is free, classified with classify_binary.
  BruteA12Counts brute_count_a12(std::size_t k,
                                 std::uint64_t budget = default_enumeration_budget);

  //! The brute-force counts as a report slice (source = brute_force). The
  //! binary columns are filled when n = 2, the A12 ones when a12 is given.
  CountsReport to_counts_report(BruteCounts const&            counts,
                                BruteA12Counts const* a12 = nullptr);

}  // namespace qsemi
