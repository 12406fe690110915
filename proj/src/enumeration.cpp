#include "qsemi/enumeration.hpp"

#include <algorithm>      // for find, sort
#include <cmath>          // for log2
#include <random>         // for mt19937_64
#include <string>         // for string, to_string
#include <unordered_set>  // for unordered_set

#include "qsemi/analysis.hpp"
#include "qsemi/error.hpp"
#include "qsemi/orderings.hpp"
#include "qsemi/reduction.hpp"
#include "kernels.hpp"

namespace qsemi {

  namespace {
    void require_carrier(std::size_t k, std::size_t n) {
      if (k < 1 || k > max_carrier_size || n < 1) {
        raise(ErrorKind::arity_or_size_invalid,
              "need 1 <= k <= 255 and n >= 1, got k=" + std::to_string(k)
                  + " n=" + std::to_string(n));
      }
    }

    [[noreturn]] void over_budget(std::string const& what, std::uint64_t budget) {
      raise(ErrorKind::cost_limit_exceeded,
            what + " exceeds the budget of " + std::to_string(budget)
                + " tables");
    }

    // The distinct components of a tuple, ascending.
    std::vector<Element> distinct(std::span<Element const> tuple) {
      std::vector<Element> result(tuple.begin(), tuple.end());
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
      return result;
    }

    // log2 of the number of quasitrivial tables, from the tuple counts by
    // number of distinct components.
    double log2_space_size(std::size_t k, std::size_t n) {
      double bits = 0;
      for (std::size_t d = 2; d <= std::min(k, n); ++d) {
        BigInt const count = binomial(k, d) * factorial(d) * stirling2(n, d);
        bits += count.convert_to<double>() * std::log2(double(d));
      }
      return bits;
    }

    // Space size if it is at most budget, else nullopt.
    std::optional<std::uint64_t> bounded_space_size(std::size_t   k,
                                                    std::size_t   n,
                                                    std::uint64_t budget) {
      if (log2_space_size(k, n) > 64) {
        return std::nullopt;
      }
      BigInt const size = quasitrivial_space_size(k, n);
      if (size > budget) {
        return std::nullopt;
      }
      return size.convert_to<std::uint64_t>();
    }

    bool symmetric_values(detail::Shape const&      shape,
                          std::span<Element const>  values,
                          std::vector<Element>&     tuple,
                          std::vector<Element>&     sorted) {
      std::fill(tuple.begin(), tuple.end(), 0);
      std::size_t index = 0;
      do {
        sorted.assign(tuple.begin(), tuple.end());
        std::sort(sorted.begin(), sorted.end());
        std::size_t canonical = 0;
        for (std::size_t p = 0; p < shape.n; ++p) {
          canonical += sorted[p] * shape.weights[p];
        }
        if (values[index] != values[canonical]) {
          return false;
        }
        ++index;
      } while (next_tuple(tuple, shape.k));
      return true;
    }
  }  // namespace

  std::vector<OperationTable> generate_quasitrivial_associative_binary(
      std::size_t k) {
    require_carrier(k, 2);
    std::vector<OperationTable>     result;
    std::unordered_set<std::string> seen;
    WeakOrderingGenerator           orderings(k);
    while (auto w = orderings.next()) {
      for (auto const& spec : kimura_specs(*w)) {
        auto       table = build_kimura(spec);
        auto const bytes = table.values();
        if (seen.emplace(bytes.begin(), bytes.end()).second) {
          result.push_back(std::move(table));
        }
      }
    }
    return result;
  }

  BigInt quasitrivial_space_size(std::size_t k, std::size_t n) {
    require_carrier(k, n);
    BigInt result = 1;
    for (std::size_t d = 2; d <= std::min(k, n); ++d) {
      BigInt const count = binomial(k, d) * factorial(d) * stirling2(n, d);
      result *= boost::multiprecision::pow(BigInt(d),
                                           count.convert_to<unsigned>());
    }
    return result;
  }

  QuasitrivialTables::QuasitrivialTables(std::size_t k, std::size_t n,
                                         std::uint64_t budget)
      : _k(k), _n(n), _size(0), _rank(0) {
    require_carrier(k, n);
    auto const size = bounded_space_size(k, n, budget);
    if (!size) {
      over_budget("the quasitrivial space for k=" + std::to_string(k)
                      + " n=" + std::to_string(n),
                  budget);
    }
    _size = *size;
    auto const cells = checked_power(k, n, max_table_size);
    if (!cells) {
      raise(ErrorKind::arity_or_size_invalid, "table is too large");
    }
    _values.assign(*cells, 0);
    std::vector<Element> tuple(n, 0);
    std::size_t          index = 0;
    do {
      auto choices = distinct(tuple);
      _values[index] = choices.front();
      if (choices.size() > 1) {
        _cells.push_back(FreeCell{index, std::move(choices)});
      }
      ++index;
    } while (next_tuple(tuple, k));
    _digit.assign(_cells.size(), 0);
  }

  OperationTable QuasitrivialTables::table() const {
    return OperationTable::from_values(_k, _n, _values);
  }

  bool QuasitrivialTables::next() noexcept {
    for (std::size_t i = _cells.size(); i-- > 0;) {
      auto& cell = _cells[i];
      if (++_digit[i] < cell.choices.size()) {
        _values[cell.index] = cell.choices[_digit[i]];
        ++_rank;
        return true;
      }
      _digit[i]           = 0;
      _values[cell.index] = cell.choices[0];
    }
    _rank = 0;
    return false;
  }

  void QuasitrivialTables::seek(std::uint64_t rank) {
    if (rank >= _size) {
      raise(ErrorKind::precondition_violated,
            "rank " + std::to_string(rank) + " is past the end of the stream");
    }
    _rank = rank;
    for (std::size_t i = _cells.size(); i-- > 0;) {
      auto&      cell  = _cells[i];
      auto const radix = cell.choices.size();
      _digit[i]        = static_cast<std::uint8_t>(rank % radix);
      rank /= radix;
      _values[cell.index] = cell.choices[_digit[i]];
    }
  }

  std::vector<std::uint64_t> stratified_sample(std::uint64_t size,
                                               std::uint64_t count,
                                               std::uint64_t seed) {
    count = std::min(count, size);
    std::vector<std::uint64_t> ranks;
    ranks.reserve(count);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < count; ++s) {
      // The first size % count strata are one rank wider.
      std::uint64_t const base  = size / count;
      std::uint64_t const extra = size % count;
      std::uint64_t const lo    = s * base + std::min(s, extra);
      std::uint64_t const hi    = lo + base + (s < extra ? 1 : 0);
      ranks.push_back(lo + rng() % (hi - lo));
    }
    return ranks;
  }

  namespace {
    class PrunedSearch {
     public:
      PrunedSearch(std::size_t k, std::size_t n,
                   std::function<void(std::span<Element const>)> const& visit)
          : _shape(k, n),
            _visit(visit),
            _values(_shape.size, 0),
            _assigned(_shape.size, false),
            _by_value(k),
            _args(2 * n - 1),
            _tuple(n) {
        std::vector<Element> tuple(n, 0);
        std::size_t          index = 0;
        do {
          auto choices = distinct(tuple);
          if (choices.size() == 1) {
            _values[index]   = choices.front();
            _assigned[index] = true;
            _by_value[choices.front()].push_back(index);
          } else {
            _free.push_back(index);
            _choices.push_back(std::move(choices));
          }
          ++index;
        } while (next_tuple(tuple, k));
      }

      void run() {
        descend(0);
      }

     private:
      void descend(std::size_t depth) {
        if (depth == _free.size()) {
          _visit(_values);
          return;
        }
        std::size_t const cell = _free[depth];
        _assigned[cell]        = true;
        for (Element v : _choices[depth]) {
          _values[cell] = v;
          _by_value[v].push_back(cell);
          if (consistent(cell)) {
            descend(depth + 1);
          }
          _by_value[v].pop_back();
        }
        _assigned[cell] = false;
      }

      std::size_t index_of(std::size_t offset) const {
        std::size_t index = 0;
        for (std::size_t p = 0; p < _shape.n; ++p) {
          index += _args[offset + p] * _shape.weights[p];
        }
        return index;
      }

      // Outer cell when the inner application starts at position j, or
      // size if the inner cell is still free.
      std::size_t outer_of(std::size_t j) const {
        std::size_t const inner = index_of(j);
        if (!_assigned[inner]) {
          return _shape.size;
        }
        std::size_t const n     = _shape.n;
        std::size_t       index = _values[inner] * _shape.weights[j];
        for (std::size_t p = 0; p < j; ++p) {
          index += _args[p] * _shape.weights[p];
        }
        for (std::size_t p = j + 1; p < n; ++p) {
          index += _args[p + n - 1] * _shape.weights[p];
        }
        return index;
      }

      // The identity instance between positions j and j + 1, if decided.
      bool pair_holds(std::size_t j) const {
        std::size_t const a = outer_of(j);
        std::size_t const b = outer_of(j + 1);
        if (a == _shape.size || b == _shape.size || !_assigned[a]
            || !_assigned[b]) {
          return true;
        }
        return _values[a] == _values[b];
      }

      bool around_holds(std::size_t j) const {
        return (j == 0 || pair_holds(j - 1))
               && (j + 1 == _shape.n || pair_holds(j));
      }

      // Every instance that became decided when cell was assigned.
      bool consistent(std::size_t cell) {
        std::size_t const n = _shape.n;
        std::size_t const k = _shape.k;
        decode(cell, _tuple);

        // cell as the inner application at position j
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t const others = _shape.size / k;  // k^(n-1)
          for (std::size_t r = 0; r < others; ++r) {
            std::size_t rest = r;
            for (std::size_t q = 2 * n - 1; q-- > 0;) {
              if (q >= j && q < j + n) {
                _args[q] = _tuple[q - j];
              } else {
                _args[q] = static_cast<Element>(rest % k);
                rest /= k;
              }
            }
            if (!around_holds(j)) {
              return false;
            }
          }
        }

        // cell as the outer application around an assigned inner one
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t p = 0; p < j; ++p) {
            _args[p] = _tuple[p];
          }
          for (std::size_t p = j + 1; p < n; ++p) {
            _args[p + n - 1] = _tuple[p];
          }
          for (std::size_t inner : _by_value[_tuple[j]]) {
            std::size_t rest = inner;
            for (std::size_t p = n; p-- > 0;) {
              _args[j + p] = static_cast<Element>(rest % k);
              rest /= k;
            }
            if (!around_holds(j)) {
              return false;
            }
          }
        }
        return true;
      }

      void decode(std::size_t index, std::vector<Element>& tuple) const {
        for (std::size_t p = _shape.n; p-- > 0;) {
          tuple[p] = static_cast<Element>(index % _shape.k);
          index /= _shape.k;
        }
      }

      detail::Shape                                        _shape;
      std::function<void(std::span<Element const>)> const& _visit;
      std::vector<Element>                                 _values;
      std::vector<bool>                                    _assigned;
      std::vector<std::vector<std::size_t>>                _by_value;
      std::vector<std::size_t>                             _free;
      std::vector<std::vector<Element>>                    _choices;
      std::vector<Element>                                 _args;
      std::vector<Element>                                 _tuple;
    };
  }  // namespace

  void for_each_associative_quasitrivial_table(
      std::size_t k, std::size_t n,
      std::function<void(std::span<Element const>)> const& visit,
      std::uint64_t budget) {
    require_carrier(k, n);
    if (n < 2) {
      raise(ErrorKind::arity_too_small, "associativity needs arity at least 2");
    }
    if (!bounded_space_size(k, n, budget)) {
      over_budget("the quasitrivial space for k=" + std::to_string(k)
                      + " n=" + std::to_string(n),
                  budget);
    }
    PrunedSearch search(k, n, visit);
    search.run();
  }

  BruteCounts brute_count(std::size_t k, std::size_t n,
                          BruteOptions const& options) {
    require_carrier(k, n);
    if (n < 2) {
      raise(ErrorKind::arity_too_small, "associativity needs arity at least 2");
    }
    BruteCounts counts{.k                    = k,
                       .n                    = n,
                       .examined             = 0,
                       .associative          = 0,
                       .by_neutral           = std::vector<std::uint64_t>(k + 3),
                       .symmetric            = 0,
                       .symmetric_by_neutral = std::vector<std::uint64_t>(k + 3)};

    detail::Shape const             shape(k, n);
    detail::NaiveAssociativity      naive(shape);
    detail::FastAssociativity       fast(shape);
    std::vector<Element>            tuple(n), sorted(n);
    auto const oracle = [&](std::span<Element const> values) {
      return options.oracle == Oracle::naive ? naive(values) : fast(values);
    };
    auto const tally = [&](std::span<Element const> values) {
      std::size_t neutral = 0;
      for (std::size_t e = 0; e < k; ++e) {
        neutral += detail::is_neutral(shape, values, static_cast<Element>(e));
      }
      ++counts.associative;
      ++counts.by_neutral[neutral];
      if (symmetric_values(shape, values, tuple, sorted)) {
        ++counts.symmetric;
        ++counts.symmetric_by_neutral[neutral];
      }
    };

    if (options.prune) {
      for_each_associative_quasitrivial_table(
          k, n,
          [&](std::span<Element const> values) {
            ++counts.examined;
            if (!oracle(values)) {
              raise(ErrorKind::internal_contradiction,
                    "pruned search produced a table the oracle rejects");
            }
            tally(values);
          },
          options.budget);
      return counts;
    }

    QuasitrivialTables stream(k, n, options.budget);
    do {
      ++counts.examined;
      if (oracle(stream.values())) {
        tally(stream.values());
      }
    } while (stream.next());
    return counts;
  }

  BruteA12Counts brute_count_a12(std::size_t k, std::uint64_t budget) {
    require_carrier(k, 2);
    // k^k diagonal choices times 2^(k^2 - k) off-diagonal ones.
    auto const diagonal = checked_power(k, k, budget);
    auto const off      = checked_power(2, k * k - k, budget);
    if (!diagonal || !off || *off > budget / *diagonal) {
      over_budget("the A12 space for k=" + std::to_string(k), budget);
    }

    std::vector<std::vector<Element>> choices(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (x == y) {
          for (std::size_t v = 0; v < k; ++v) {
            choices[x * k + y].push_back(static_cast<Element>(v));
          }
        } else {
          choices[x * k + y] = distinct(std::vector<Element>{
              static_cast<Element>(x), static_cast<Element>(y)});
        }
      }
    }
    std::vector<std::size_t> digit(k * k, 0);
    std::vector<Element>     values(k * k);
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = choices[i][0];
    }

    BruteA12Counts counts{};
    while (true) {
      auto const table = OperationTable::from_values(k, 2, values);
      auto const c     = classify_binary(table);
      if (c.tag == BinaryTag::q12 || c.tag == BinaryTag::a12_minus_q12) {
        bool const symmetric = is_symmetric(table);
        ++counts.a12;
        counts.as12 += symmetric;
        if (c.tag == BinaryTag::q12) {
          ++counts.q12;
          counts.qs12 += symmetric;
        }
      }
      std::size_t i = values.size();
      while (i-- > 0) {
        if (++digit[i] < choices[i].size()) {
          values[i] = choices[i][digit[i]];
          break;
        }
        digit[i]  = 0;
        values[i] = choices[i][0];
      }
      if (i == std::size_t(-1)) {
        break;
      }
    }
    return counts;
  }

  CountsReport to_counts_report(BruteCounts const&    counts,
                                BruteA12Counts const* a12) {
    CountsReport r{};
    r.k      = counts.k;
    r.parity = parity_of(counts.n);
    r.arity  = counts.n;
    r.source = CountSource::brute_force;
    r.qn_0  = counts.by_neutral[0];
    r.qn_1  = counts.by_neutral[1];
    r.qn_2  = counts.by_neutral[2];
    r.qn    = counts.associative;
    r.qsn_1 = counts.symmetric_by_neutral[1];
    r.qsn_2 = counts.symmetric_by_neutral[2];
    r.qsn   = counts.symmetric;
    if (counts.n == 2) {
      r.q2   = counts.associative;
      r.q2_1 = counts.by_neutral[1];
      r.qs2  = counts.symmetric;
    }
    if (a12 != nullptr) {
      r.a2_1  = a12->a12;
      r.as2_1 = a12->as12;
    }
    return r;
  }

}  // namespace qsemi
