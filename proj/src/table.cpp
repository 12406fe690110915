#include "qsemi/table.hpp"

#include <algorithm>  // for sort, find, all_of
#include <string>     // for string, to_string

#include "qsemi/error.hpp"
#include "kernels.hpp"

namespace qsemi {

  std::optional<std::uint64_t> checked_power(std::uint64_t base,
                                             std::uint64_t exp,
                                             std::uint64_t limit) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      if (base != 0 && result > limit / base) {
        return std::nullopt;
      }
      result *= base;
    }
    if (result > limit) {
      return std::nullopt;
    }
    return result;
  }

  bool next_tuple(std::span<Element> tuple, std::size_t k) noexcept {
    for (std::size_t i = tuple.size(); i-- > 0;) {
      if (++tuple[i] < k) {
        return true;
      }
      tuple[i] = 0;
    }
    return false;
  }

  OperationTable::OperationTable(std::size_t          k,
                                 std::size_t          n,
                                 std::vector<Element> values)
      : _k(k), _n(n), _diagonal_step(0), _weights(n), _values(std::move(values)) {
    std::size_t w = 1;
    for (std::size_t pos = n; pos-- > 0;) {
      _weights[pos] = w;
      _diagonal_step += w;
      w *= k;
    }
  }

  OperationTable OperationTable::from_values(std::size_t          k,
                                             std::size_t          n,
                                             std::vector<Element> values) {
    if (k < 1 || n < 1 || k > max_carrier_size) {
      raise(ErrorKind::arity_or_size_invalid,
            "carrier size must be in [1, 255] and arity at least 1, got k="
                + std::to_string(k) + " n=" + std::to_string(n));
    }
    auto const size = checked_power(k, n, max_table_size);
    if (!size) {
      raise(ErrorKind::arity_or_size_invalid,
            "table with k=" + std::to_string(k) + " n=" + std::to_string(n)
                + " is too large");
    }
    if (values.size() != *size) {
      raise(ErrorKind::length_mismatch,
            "expected " + std::to_string(*size) + " entries, got "
                + std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] >= k) {
        raise(ErrorKind::value_out_of_range,
              "entry " + std::to_string(i) + " is "
                  + std::to_string(values[i] + 1) + ", outside [1.."
                  + std::to_string(k) + "]");
      }
    }
    return OperationTable(k, n, std::move(values));
  }

  std::size_t OperationTable::index_of(std::span<Element const> tuple) const {
    std::size_t index = 0;
    for (std::size_t pos = 0; pos < _n; ++pos) {
      index += tuple[pos] * _weights[pos];
    }
    return index;
  }

  void OperationTable::decode(std::size_t index, std::span<Element> tuple) const {
    for (std::size_t pos = _n; pos-- > 0;) {
      tuple[pos] = static_cast<Element>(index % _k);
      index /= _k;
    }
  }

  OperationTable make_table(std::size_t k, std::size_t n,
                            std::span<int const> entries) {
    if (k < 1 || n < 1 || k > max_carrier_size) {
      raise(ErrorKind::arity_or_size_invalid,
            "carrier size must be in [1, 255] and arity at least 1");
    }
    std::vector<Element> values;
    values.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      int const v = entries[i];
      if (v < 1 || static_cast<std::size_t>(v) > k) {
        // Length problems take precedence over range problems.
        auto const size = checked_power(k, n, max_table_size);
        if (size && entries.size() != *size) {
          raise(ErrorKind::length_mismatch,
                "expected " + std::to_string(*size) + " entries, got "
                    + std::to_string(entries.size()));
        }
        raise(ErrorKind::value_out_of_range,
              "entry " + std::to_string(i) + " is " + std::to_string(v)
                  + ", outside [1.." + std::to_string(k) + "]");
      }
      values.push_back(static_cast<Element>(v - 1));
    }
    return OperationTable::from_values(k, n, std::move(values));
  }

  int evaluate(OperationTable const& table, std::span<int const> tuple) {
    if (tuple.size() != table.arity()) {
      raise(ErrorKind::tuple_arity_mismatch,
            "expected a tuple of length " + std::to_string(table.arity())
                + ", got " + std::to_string(tuple.size()));
    }
    std::vector<Element> internal(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] < 1
          || static_cast<std::size_t>(tuple[i]) > table.carrier_size()) {
        raise(ErrorKind::value_out_of_range,
              "tuple component " + std::to_string(tuple[i]) + " outside [1.."
                  + std::to_string(table.carrier_size()) + "]");
      }
      internal[i] = static_cast<Element>(tuple[i] - 1);
    }
    return table.at(internal) + 1;
  }

  bool is_diagonal(std::span<Element const> tuple) noexcept {
    return std::all_of(tuple.begin(), tuple.end(), [&](Element x) {
      return x == tuple.front();
    });
  }

  bool is_idempotent(OperationTable const& table) {
    for (std::size_t x = 0; x < table.carrier_size(); ++x) {
      if (table.value(table.diagonal_index(static_cast<Element>(x))) != x) {
        return false;
      }
    }
    return true;
  }

  bool is_quasitrivial(OperationTable const& table) {
    return detail::is_quasitrivial(table.values(), table.carrier_size(),
                                   table.arity());
  }

  bool is_symmetric(OperationTable const& table) {
    std::vector<Element> tuple(table.arity(), 0);
    std::vector<Element> sorted(table.arity());
    std::size_t          index = 0;
    do {
      std::copy(tuple.begin(), tuple.end(), sorted.begin());
      std::sort(sorted.begin(), sorted.end());
      if (table.value(index) != table.at(sorted)) {
        return false;
      }
      ++index;
    } while (next_tuple(tuple, table.carrier_size()));
    return true;
  }

  bool is_associative_naive(OperationTable const& table) {
    if (table.arity() < 2) {
      raise(ErrorKind::arity_too_small,
            "associativity needs arity at least 2, got "
                + std::to_string(table.arity()));
    }
    detail::Shape const shape(table.carrier_size(), table.arity());
    return detail::is_associative_naive(shape, table.values());
  }

  bool is_bisymmetric(OperationTable const& table, std::uint64_t budget) {
    std::size_t const k = table.carrier_size();
    std::size_t const n = table.arity();
    if (!checked_power(k, n * n, budget)) {
      raise(ErrorKind::cost_limit_exceeded,
            "bisymmetry check needs " + std::to_string(k) + "^"
                + std::to_string(n * n) + " matrices, over budget "
                + std::to_string(budget));
    }
    // matrix[r * n + c]; rows give F(r_i), columns give F(c_j).
    std::vector<Element> matrix(n * n, 0);
    std::vector<Element> line(n);
    std::vector<Element> outer(n);
    do {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          line[c] = matrix[r * n + c];
        }
        outer[r] = table.at(line);
      }
      Element const by_rows = table.at(outer);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
          line[r] = matrix[r * n + c];
        }
        outer[c] = table.at(line);
      }
      if (table.at(outer) != by_rows) {
        return false;
      }
    } while (next_tuple(matrix, k));
    return true;
  }

  std::vector<Element> neutral_elements(OperationTable const& table) {
    detail::Shape const  shape(table.carrier_size(), table.arity());
    std::vector<Element> result;
    for (std::size_t e = 0; e < table.carrier_size(); ++e) {
      if (detail::is_neutral(shape, table.values(), static_cast<Element>(e))) {
        result.push_back(static_cast<Element>(e));
      }
    }
    return result;
  }

  std::optional<Element> annihilator(OperationTable const& table) {
    std::size_t const    k = table.carrier_size();
    std::vector<Element> tuple(table.arity());
    for (std::size_t z = 0; z < k; ++z) {
      bool        ok    = true;
      std::size_t index = 0;
      std::fill(tuple.begin(), tuple.end(), 0);
      do {
        if (std::find(tuple.begin(), tuple.end(), z) != tuple.end()
            && table.value(index) != z) {
          ok = false;
          break;
        }
        ++index;
      } while (next_tuple(tuple, k));
      if (ok) {
        return static_cast<Element>(z);
      }
    }
    return std::nullopt;
  }

  std::optional<Element> annihilator_by_preimage(OperationTable const& table) {
    if (!is_quasitrivial(table)) {
      raise(ErrorKind::not_quasitrivial,
            "the preimage criterion for annihilators needs a quasitrivial "
            "table");
    }
    std::uint64_t const k = table.carrier_size();
    std::uint64_t const n = table.arity();
    std::uint64_t const bound
        = *checked_power(k, n, max_table_size)
          - *checked_power(k - 1, n, max_table_size);
    auto const counts = preimage_counts(table);
    for (std::size_t z = 0; z < counts.size(); ++z) {
      if (counts[z] == bound) {
        return static_cast<Element>(z);
      }
    }
    return std::nullopt;
  }

  std::vector<std::uint64_t> preimage_counts(OperationTable const& table) {
    std::vector<std::uint64_t> counts(table.carrier_size(), 0);
    for (Element v : table.values()) {
      ++counts[v];
    }
    return counts;
  }

  PreimageSequence preimage_sequence(OperationTable const& table) {
    PreimageSequence result{preimage_counts(table)};
    std::sort(result.counts.begin(), result.counts.end());
    return result;
  }

  PreimageSequence max_preimage_sequence(std::size_t k, std::size_t n) {
    PreimageSequence result;
    for (std::uint64_t j = 1; j <= k; ++j) {
      result.counts.push_back(*checked_power(j, n, UINT64_MAX)
                              - *checked_power(j - 1, n, UINT64_MAX));
    }
    return result;
  }

  ContourPartition contour_components(OperationTable const& table) {
    std::vector<std::vector<std::size_t>> by_value(table.carrier_size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      by_value[table.value(i)].push_back(i);
    }
    ContourPartition result;
    for (std::size_t v = 0; v < by_value.size(); ++v) {
      if (!by_value[v].empty()) {
        result.classes.push_back(
            ContourClass{static_cast<Element>(v), std::move(by_value[v])});
      }
    }
    return result;
  }

  bool is_quasitrivial_by_contour(OperationTable const& table) {
    if (!is_idempotent(table)) {
      return false;
    }
    std::vector<Element> tuple(table.arity());
    for (auto const& cls : contour_components(table).classes) {
      for (std::size_t index : cls.tuples) {
        table.decode(index, tuple);
        if (is_diagonal(tuple)) {
          continue;
        }
        // Connected to (n.x_i) for some component x_i.
        bool connected = false;
        for (Element x : tuple) {
          if (table.value(table.diagonal_index(x)) == cls.value) {
            connected = true;
            break;
          }
        }
        if (!connected) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_order_preserving(OperationTable const&    table,
                           std::span<Element const> order) {
    std::size_t const k = table.carrier_size();
    std::vector<std::size_t> rank(k, k);
    if (order.size() != k) {
      raise(ErrorKind::not_a_permutation,
            "order has " + std::to_string(order.size()) + " entries, expected "
                + std::to_string(k));
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (order[r] >= k || rank[order[r]] != k) {
        raise(ErrorKind::not_a_permutation,
              "order is not a permutation of the carrier");
      }
      rank[order[r]] = r;
    }
    std::vector<Element> tuple(table.arity(), 0);
    std::size_t          index = 0;
    do {
      std::size_t const here = rank[table.value(index)];
      for (std::size_t pos = 0; pos < table.arity(); ++pos) {
        std::size_t const r = rank[tuple[pos]];
        if (r + 1 == k) {
          continue;
        }
        Element const successor = order[r + 1];
        std::size_t const next_index = index - tuple[pos] * table.weight(pos)
                                       + successor * table.weight(pos);
        if (rank[table.value(next_index)] < here) {
          return false;
        }
      }
      ++index;
    } while (next_tuple(tuple, k));
    return true;
  }

}  // namespace qsemi
