#pragma once

// Reductions of n-ary operations to binary and ternary ones.

#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "qsemi/table.hpp"

namespace qsemi {

  //! When enabled, reduction_from_neutral verifies that G^e composes back to
  //! associative inputs. Off by default; the test suites switch it on.
  void set_composition_checks(bool enabled) noexcept;
  bool composition_checks_enabled() noexcept;

  //! G_{m}(x_1, ..., x_{m+1}) = G_{m-1}(x_1, ..., x_{m-1}, G(x_m, x_{m+1})),
  //! i.e. the right fold G(x_1, G(x_2, ... G(x_{n-1}, x_n))).
  OperationTable compose_binary(OperationTable const& binary,
                                std::size_t           target_arity);

  //! H_{m}(x_1, ..., x_{m+3}) = H_{m-2}(x_1, ..., x_m, H(x_{m+1}, x_{m+2},
  //! x_{m+3})); target_arity must be odd.
  OperationTable compose_ternary(OperationTable const& ternary,
                                 std::size_t           target_arity);

  //! G^e(x, y) = F(x, (n-2).e, y). Throws NotANeutralElement.
  OperationTable reduction_from_neutral(OperationTable const& table, Element e);

  //! G(x, y) = F(x, (n-1).y). Total; makes no claim that G is a reduction.
  OperationTable candidate_reduction(OperationTable const& table);

  //! A ternary reduction H = G_2 of an associative quasitrivial table of odd
  //! arity. G is the candidate reduction when there is at most one neutral
  //! element, else G^e with e (default: the least neutral element). Throws
  //! NotReducible if H does not compose back to the table.
  OperationTable ternary_reduction(OperationTable const& table,
                                   std::optional<Element> e = std::nullopt);

  enum class ReductionOrigin { from_neutral, idempotent_candidate };

  struct Reduction {
    ReductionOrigin        origin;
    std::optional<Element> neutral;  // set iff origin == from_neutral
    OperationTable         table;
  };

  struct ReductionSet {
    std::vector<Element>   neutral_elements;
    std::vector<Reduction> reductions;
    bool                   complete = false;
  };

  //! Every binary reduction of an associative quasitrivial table: one G^e
  //! per neutral element, or the candidate reduction when there are none.
  //! Throws NotAssociativeQuasitrivial for other inputs.
  ReductionSet all_binary_reductions(OperationTable const& table);

  enum class BinaryTag { q12, a12_minus_q12, quasitrivial_no_neutral, other };

  struct BinaryClass {
    BinaryTag              tag = BinaryTag::other;
    std::optional<Element> neutral;
    //! (x, e) where x != e is the unique element with G(x, x) = e.
    std::optional<std::pair<Element, Element>> exceptional_pair;
  };

  //! Classifies a binary table by the defining conditions of Q12 and A12,
  //! and cross-checks the A12 \ Q12 case against the pair characterisation
  //! (throws InternalContradiction if the two disagree).
  BinaryClass classify_binary(OperationTable const& binary);

  //! The pair characterisation of A12 \ Q12 on its own: returns the unique
  //! unordered pair {x, y} (as x < y) satisfying the three pair conditions,
  //! or nullopt if there is none or more than one.
  std::optional<std::pair<Element, Element>>
  a12_exceptional_pair(OperationTable const& binary);

}  // namespace qsemi
