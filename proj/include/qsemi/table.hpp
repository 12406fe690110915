#pragma once

// Finite n-ary operations on [k] stored as flat value tables, together with
// the pointwise predicates and statistics used throughout the library.
//
// Elements are 0-based inside the library. The only 1-based entry points are
// make_table and evaluate, which mirror the external text format.

#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t, uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

namespace qsemi {

  using Element = std::uint8_t;

  inline constexpr std::size_t   max_carrier_size = 255;
  inline constexpr std::uint64_t max_table_size   = std::uint64_t(1) << 28;
  inline constexpr std::uint64_t default_bisymmetry_budget = 100'000'000;

  //! base^exp, or nullopt if the result exceeds limit.
  std::optional<std::uint64_t> checked_power(std::uint64_t base,
                                             std::uint64_t exp,
                                             std::uint64_t limit);

  //! Steps a tuple over [k]^m in lexicographic order (last coordinate
  //! fastest). Returns false, leaving the tuple all-zero, after the last one.
  bool next_tuple(std::span<Element> tuple, std::size_t k) noexcept;

  //! A total operation F: [k]^n -> [k]. The value of the tuple (x_1,...,x_n)
  //! lives at index sum x_i * k^(n-i), i.e. lexicographic order with x_n
  //! varying fastest. Immutable once built.
  class OperationTable {
   public:
    //! Validating constructor from 0-based values.
    static OperationTable from_values(std::size_t          k,
                                      std::size_t          n,
                                      std::vector<Element> values);

    [[nodiscard]] std::size_t carrier_size() const noexcept {
      return _k;
    }
    [[nodiscard]] std::size_t arity() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _values.size();
    }
    [[nodiscard]] std::span<Element const> values() const noexcept {
      return _values;
    }
    [[nodiscard]] Element value(std::size_t index) const noexcept {
      return _values[index];
    }
    //! Weight of coordinate pos in the index, k^(n-1-pos).
    [[nodiscard]] std::size_t weight(std::size_t pos) const noexcept {
      return _weights[pos];
    }
    //! Index of the constant tuple (x,...,x).
    [[nodiscard]] std::size_t diagonal_index(Element x) const noexcept {
      return x * _diagonal_step;
    }

    [[nodiscard]] std::size_t index_of(std::span<Element const> tuple) const;
    void decode(std::size_t index, std::span<Element> tuple) const;

    //! Unchecked 0-based lookup.
    [[nodiscard]] Element at(std::span<Element const> tuple) const {
      return _values[index_of(tuple)];
    }

    bool operator==(OperationTable const&) const = default;

   private:
    OperationTable(std::size_t k, std::size_t n, std::vector<Element> values);

    std::size_t              _k;
    std::size_t              _n;
    std::size_t              _diagonal_step;
    std::vector<std::size_t> _weights;
    std::vector<Element>     _values;
  };

  //! Builds a table from 1-based entries in [1..k].
  OperationTable make_table(std::size_t k, std::size_t n,
                            std::span<int const> entries);

  //! 1-based evaluation; throws on a tuple of the wrong length or range.
  int evaluate(OperationTable const& table, std::span<int const> tuple);

  struct PreimageSequence {
    std::vector<std::uint64_t> counts;  // nondecreasing, sums to k^n
    bool operator==(PreimageSequence const&) const = default;
  };

  struct ContourClass {
    Element                  value;
    std::vector<std::size_t> tuples;  // ascending table indices
  };

  //! Kernel classes of a table, one per attained value, ordered by value.
  struct ContourPartition {
    std::vector<ContourClass> classes;
  };

  bool is_diagonal(std::span<Element const> tuple) noexcept;

  bool is_idempotent(OperationTable const& table);
  bool is_quasitrivial(OperationTable const& table);
  bool is_symmetric(OperationTable const& table);

  //! Exhaustive check of the n-ary associativity identity over all
  //! (2n-1)-tuples and nesting positions. Throws ArityTooSmall when n < 2.
  bool is_associative_naive(OperationTable const& table);

  //! Row/column interchange identity over all n x n matrices. The number of
  //! matrices is k^(n*n); refuses with CostLimitExceeded above budget.
  bool is_bisymmetric(OperationTable const& table,
                      std::uint64_t budget = default_bisymmetry_budget);

  std::vector<Element> neutral_elements(OperationTable const& table);

  //! Checks the defining property directly.
  std::optional<Element> annihilator(OperationTable const& table);

  //! For quasitrivial tables only: z is the annihilator iff its preimage has
  //! size k^n - (k-1)^n.
  std::optional<Element> annihilator_by_preimage(OperationTable const& table);

  //! |F^-1[x]| for each x, indexed by element.
  std::vector<std::uint64_t> preimage_counts(OperationTable const& table);
  PreimageSequence           preimage_sequence(OperationTable const& table);

  //! k^n - (k-1)^n for each k' = 1..k, the preimage sequence of a max table.
  PreimageSequence max_preimage_sequence(std::size_t k, std::size_t n);

  ContourPartition contour_components(OperationTable const& table);

  //! Quasitriviality read off the contour plot: idempotent and every
  //! off-diagonal tuple shares its class with a diagonal tuple whose element
  //! occurs in it.
  bool is_quasitrivial_by_contour(OperationTable const& table);

  //! order[0] is the least element. Throws NotAPermutation.
  bool is_order_preserving(OperationTable const&    table,
                           std::span<Element const> order);

}  // namespace qsemi
