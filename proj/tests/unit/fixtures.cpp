#include "fixtures.hpp"

#include "qsemi/enumeration.hpp"

namespace fx {

  std::vector<OperationTable> all_quasitrivial(std::size_t k, std::size_t n) {
    std::vector<OperationTable> result;
    QuasitrivialTables          stream(k, n);
    do {
      result.push_back(stream.table());
    } while (stream.next());
    return result;
  }

  std::vector<OperationTable> all_associative_quasitrivial(std::size_t k,
                                                           std::size_t n) {
    std::vector<OperationTable> result;
    for_each_associative_quasitrivial_table(k, n, [&](auto values) {
      result.push_back(OperationTable::from_values(
          k, n, std::vector<Element>(values.begin(), values.end())));
    });
    return result;
  }

}  // namespace fx
