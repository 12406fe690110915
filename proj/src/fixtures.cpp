#include "qsemi/fixtures.hpp"

#include <algorithm>  // for max_element, min_element
#include <string>     // for to_string

#include "qsemi/error.hpp"

namespace qsemi {

  namespace {
    template <typename Fn>
    OperationTable tabulate(std::size_t k, std::size_t n, Fn&& fn) {
      auto const size = checked_power(k, n, max_table_size);
      if (k < 1 || k > max_carrier_size || n < 1 || !size) {
        raise(ErrorKind::arity_or_size_invalid,
              "invalid table shape k=" + std::to_string(k)
                  + " n=" + std::to_string(n));
      }
      std::vector<Element> values(*size);
      std::vector<Element> tuple(n, 0);
      std::size_t          index = 0;
      do {
        values[index++] = fn(std::span<Element const>(tuple));
      } while (next_tuple(tuple, k));
      return OperationTable::from_values(k, n, std::move(values));
    }
  }  // namespace

  OperationTable projection(std::size_t k, std::size_t n, std::size_t i) {
    if (i < 1 || i > n) {
      raise(ErrorKind::arity_or_size_invalid,
            "projection index " + std::to_string(i) + " outside [1.."
                + std::to_string(n) + "]");
    }
    return tabulate(k, n, [i](auto t) { return t[i - 1]; });
  }

  OperationTable sum_mod2(std::size_t n) {
    return tabulate(2, n, [](auto t) {
      Element s = 0;
      for (Element x : t) {
        s ^= x;
      }
      return s;
    });
  }

  OperationTable max_table(std::size_t k, std::size_t n) {
    return tabulate(k, n,
                    [](auto t) { return *std::max_element(t.begin(), t.end()); });
  }

  OperationTable min_table(std::size_t k, std::size_t n) {
    return tabulate(k, n,
                    [](auto t) { return *std::min_element(t.begin(), t.end()); });
  }

  OperationTable diff3() {
    return tabulate(3, 3, [](auto t) {
      return static_cast<Element>((t[0] + 3 - t[1] + t[2]) % 3);
    });
  }

}  // namespace qsemi
