#include "qsemi/analysis.hpp"

#include <algorithm>  // for fill
#include <string>     // for to_string

#include "qsemi/error.hpp"
#include "kernels.hpp"

namespace qsemi {

  bool is_associative_fast(OperationTable const& table) {
    if (table.arity() < 2) {
      raise(ErrorKind::arity_too_small,
            "associativity needs arity at least 2, got "
                + std::to_string(table.arity()));
    }
    if (!is_quasitrivial(table)) {
      raise(ErrorKind::not_quasitrivial,
            "the fast associativity test only applies to quasitrivial tables");
    }
    detail::FastAssociativity check(
        detail::Shape(table.carrier_size(), table.arity()));
    return check(table.values());
  }

  namespace {
    void require_associative_quasitrivial(OperationTable const& table) {
      if (table.arity() < 2 || !is_quasitrivial(table)
          || !is_associative_fast(table)) {
        raise(ErrorKind::not_associative_quasitrivial,
              "expected an associative quasitrivial table");
      }
    }
  }  // namespace

  UniredAssertions unired_equivalences(OperationTable const& table) {
    require_associative_quasitrivial(table);
    auto const reductions = all_binary_reductions(table);

    UniredAssertions result{};
    result.reductions_idempotent   = true;
    result.reductions_quasitrivial = true;
    for (auto const& r : reductions.reductions) {
      result.reductions_idempotent   &= is_idempotent(r.table);
      result.reductions_quasitrivial &= is_quasitrivial(r.table);
    }
    result.at_most_one_reduction = reductions.reductions.size() <= 1;
    result.at_most_one_neutral   = reductions.neutral_elements.size() <= 1;

    std::size_t const    k = table.carrier_size();
    std::size_t const    n = table.arity();
    std::vector<Element> left(n), right(n);
    result.end_swap_identity = true;
    for (std::size_t x = 0; x < k && result.end_swap_identity; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        std::fill(left.begin(), left.end(), static_cast<Element>(x));
        left.back() = static_cast<Element>(y);
        std::fill(right.begin(), right.end(), static_cast<Element>(y));
        right.front() = static_cast<Element>(x);
        if (table.at(left) != table.at(right)) {
          result.end_swap_identity = false;
          break;
        }
      }
    }
    return result;
  }

  SymmetricClass symmetric_classification(OperationTable const& table) {
    if (table.arity() < 2 || !is_quasitrivial(table) || !is_symmetric(table)
        || !is_associative_fast(table)) {
      raise(ErrorKind::precondition_violated,
            "symmetric classification needs an associative, quasitrivial, "
            "symmetric table");
    }
    auto const neutral = neutral_elements(table);
    if (neutral.size() == 2) {
      return SymmetricClass{SymmetricKind::two_neutral, std::nullopt};
    }
    auto const preimages = preimage_sequence(table);
    if (preimages
        == max_preimage_sequence(table.carrier_size(), table.arity())) {
      auto order = ordering_from_preimages(table);
      if (order.is_total() && max_n(order, table.arity()) == table) {
        return SymmetricClass{SymmetricKind::max_total_order, std::move(order)};
      }
    }
    raise(ErrorKind::internal_contradiction,
          "symmetric associative quasitrivial table with "
              + std::to_string(neutral.size())
              + " neutral elements is neither a max operation nor two-neutral");
  }

  AnalysisReport analyze(OperationTable const&  table,
                         AnalysisOptions const& options) {
    AnalysisReport report{.table            = table,
                          .idempotent       = is_idempotent(table),
                          .quasitrivial     = is_quasitrivial(table),
                          .symmetric        = is_symmetric(table),
                          .associative      = std::nullopt,
                          .bisymmetric      = std::nullopt,
                          .method           = options.method,
                          .methods_agree    = std::nullopt,
                          .neutral_elements = neutral_elements(table),
                          .annihilator      = annihilator(table),
                          .preimages        = preimage_sequence(table),
                          .reductions       = std::nullopt,
                          .kimura_ordering  = std::nullopt,
                          .symmetric_class  = {}};

    if (table.arity() >= 2) {
      // The fast procedure needs quasitriviality; fall back otherwise.
      bool const fast_applies = report.quasitrivial;
      if (options.method == AssociativityMethod::fast && fast_applies) {
        report.associative = is_associative_fast(table);
      } else {
        report.method      = AssociativityMethod::naive;
        report.associative = is_associative_naive(table);
      }
      if (options.cross_check && fast_applies) {
        bool const other = report.method == AssociativityMethod::fast
                               ? is_associative_naive(table)
                               : is_associative_fast(table);
        report.methods_agree = other == *report.associative;
      }
    }
    if (options.bisymmetry) {
      report.bisymmetric = is_bisymmetric(table, options.bisymmetry_budget);
    }

    if (report.associative.value_or(false) && report.quasitrivial
        && report.methods_agree.value_or(true)) {
      report.reductions = all_binary_reductions(table);
      if (report.neutral_elements.size() <= 1) {
        report.kimura_ordering
            = ordering_from_preimages(report.reductions->reductions.front().table);
      }
      if (report.symmetric) {
        report.symmetric_class = symmetric_classification(table);
      }
    }
    return report;
  }

}  // namespace qsemi
