#pragma once

// Named tables used in examples and tests.

#include <cstddef>  // for size_t

#include "qsemi/table.hpp"

namespace qsemi {

  //! pi_i(x_1, ..., x_n) = x_i, with i 1-based.
  OperationTable projection(std::size_t k, std::size_t n, std::size_t i);

  //! Sum modulo 2 on [2]: the value is 2 iff an odd number of arguments is 2.
  OperationTable sum_mod2(std::size_t n);

  //! Maximum for the natural order on [k].
  OperationTable max_table(std::size_t k, std::size_t n);

  //! Minimum for the natural order on [k].
  OperationTable min_table(std::size_t k, std::size_t n);

  //! x - y + z modulo 3 on [3].
  OperationTable diff3();

}  // namespace qsemi
