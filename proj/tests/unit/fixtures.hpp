#pragma once

#include <optional>
#include <vector>

#include "qsemi/error.hpp"

#include "qsemi/fixtures.hpp"
#include "qsemi/table.hpp"

namespace fx {

  using namespace qsemi;

  inline OperationTable table(std::size_t k, std::size_t n,
                              std::vector<int> const& entries) {
    return make_table(k, n, entries);
  }

  //! The kind of Error thrown by fn, or nullopt if it returns normally.
  template <typename Fn>
  std::optional<ErrorKind> error_of(Fn&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    return std::nullopt;
  }

  //! Every table of the quasitrivial stream, materialized (small cases).
  std::vector<OperationTable> all_quasitrivial(std::size_t k, std::size_t n);

  //! Every associative quasitrivial table, via the pruned search.
  std::vector<OperationTable> all_associative_quasitrivial(std::size_t k,
                                                           std::size_t n);

}  // namespace fx
