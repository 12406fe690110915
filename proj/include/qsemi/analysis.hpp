#pragma once

// Decision procedures for quasitrivial n-ary semigroups and the aggregated
// per-table report.

#include <optional>  // for optional
#include <vector>    // for vector

#include "qsemi/orderings.hpp"
#include "qsemi/reduction.hpp"
#include "qsemi/table.hpp"

namespace qsemi {

  //! Decides associativity of a quasitrivial table without scanning every
  //! (2n-1)-tuple:
  //!   - three or more neutral elements: not associative;
  //!   - two: n odd, both G^e in A12 \ Q12, and G^e composes back to F;
  //!   - at most one: G(x, y) = F(x, (n-1).y) is quasitrivial, has the
  //!     projection/max form for its preimage ordering, and composes back.
  //! Throws NotQuasitrivial, or ArityTooSmall when n < 2.
  bool is_associative_fast(OperationTable const& table);

  //! The five equivalent assertions for an associative quasitrivial table,
  //! each evaluated on its own.
  struct UniredAssertions {
    bool reductions_idempotent;   // (i)
    bool reductions_quasitrivial; // (ii)
    bool at_most_one_reduction;   // (iii)
    bool at_most_one_neutral;     // (iv)
    bool end_swap_identity;       // (v) F((n-1).x, y) = F(x, (n-1).y)

    [[nodiscard]] bool all_equal() const noexcept {
      return reductions_idempotent == reductions_quasitrivial
             && reductions_quasitrivial == at_most_one_reduction
             && at_most_one_reduction == at_most_one_neutral
             && at_most_one_neutral == end_swap_identity;
    }
  };

  //! Throws NotAssociativeQuasitrivial.
  UniredAssertions unired_equivalences(OperationTable const& table);

  enum class SymmetricKind { max_total_order, two_neutral, not_applicable };

  struct SymmetricClass {
    SymmetricKind               kind = SymmetricKind::not_applicable;
    std::optional<WeakOrdering> ordering;  // total; set for max_total_order
  };

  //! For associative, quasitrivial, symmetric tables: either max^n for the
  //! total order read off the preimage counts, or the two-neutral case.
  //! Throws PreconditionViolated, or InternalContradiction if neither holds.
  SymmetricClass symmetric_classification(OperationTable const& table);

  enum class AssociativityMethod { fast, naive };

  struct AnalysisOptions {
    AssociativityMethod method = AssociativityMethod::fast;
    //! Also run the naive scan and record whether it agreed.
    bool          cross_check = false;
    bool          bisymmetry  = false;
    std::uint64_t bisymmetry_budget = default_bisymmetry_budget;
  };

  struct AnalysisReport {
    OperationTable table;

    bool                idempotent;
    bool                quasitrivial;
    bool                symmetric;
    std::optional<bool> associative;   // absent when n < 2
    std::optional<bool> bisymmetric;   // absent unless requested
    AssociativityMethod method;
    //! Set when cross_check was requested and both methods could run.
    std::optional<bool> methods_agree;

    std::vector<Element>        neutral_elements;
    std::optional<Element>      annihilator;
    PreimageSequence            preimages;
    std::optional<ReductionSet> reductions;       // iff associative and qt
    std::optional<WeakOrdering> kimura_ordering;  // iff also <= 1 neutral
    SymmetricClass              symmetric_class;
  };

  //! Never throws on a valid table; inapplicable fields are left empty.
  //! The bisymmetry check may throw CostLimitExceeded when requested.
  AnalysisReport analyze(OperationTable const&  table,
                         AnalysisOptions const& options = {});

}  // namespace qsemi
