#pragma once

// Allocation-free checks over raw value spans. The public predicates wrap
// these; the exhaustive enumerators call them directly on a scratch table.

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "qsemi/table.hpp"

namespace qsemi::detail {

  struct Shape {
    Shape(std::size_t k, std::size_t n);

    std::size_t              k;
    std::size_t              n;
    std::size_t              size;
    std::size_t              diagonal_step;
    std::vector<std::size_t> weights;
  };

  bool is_quasitrivial(std::span<Element const> values, std::size_t k,
                       std::size_t n);

  bool is_neutral(Shape const& shape, std::span<Element const> values,
                  Element e);

  bool is_associative_naive(Shape const& shape, std::span<Element const> values);

  //! Reusable workspace for the naive identity scan.
  class NaiveAssociativity {
   public:
    explicit NaiveAssociativity(Shape shape);
    bool operator()(std::span<Element const> values);

   private:
    Shape                _shape;
    std::vector<Element> _args;
  };

  //! The associativity decision procedure for quasitrivial tables built on
  //! the neutral-element count and the binary candidate reduction. The
  //! caller guarantees quasitriviality.
  class FastAssociativity {
   public:
    explicit FastAssociativity(Shape shape);
    bool operator()(std::span<Element const> values);

   private:
    bool two_neutral_branch(std::span<Element const> values);
    bool kimura_branch(std::span<Element const> values);

    Shape                      _shape;
    std::vector<Element>       _neutral;
    std::vector<Element>       _binary;
    std::vector<std::uint32_t> _counts;
    std::vector<Element>       _representative;
    std::vector<int>           _choice;
    std::vector<Element>       _tuple;
  };

}  // namespace qsemi::detail
