#include "qsemi/orderings.hpp"

#include <algorithm>  // for sort, fill, max
#include <map>        // for map
#include <string>     // for string, to_string

#include "qsemi/error.hpp"

namespace qsemi {

  WeakOrdering WeakOrdering::from_blocks(std::size_t                       k,
                                         std::vector<std::vector<Element>> blocks) {
    WeakOrdering w;
    w._level.assign(k, k);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        raise(ErrorKind::invalid_ordering, "empty block in weak ordering");
      }
      for (Element x : blocks[b]) {
        if (x >= k) {
          raise(ErrorKind::invalid_ordering,
                "element " + std::to_string(x + 1) + " outside [1.."
                    + std::to_string(k) + "]");
        }
        if (w._level[x] != k) {
          raise(ErrorKind::invalid_ordering,
                "element " + std::to_string(x + 1) + " appears twice");
        }
        w._level[x] = b;
      }
      std::sort(blocks[b].begin(), blocks[b].end());
    }
    for (std::size_t x = 0; x < k; ++x) {
      if (w._level[x] == k) {
        raise(ErrorKind::invalid_ordering,
              "element " + std::to_string(x + 1) + " is missing");
      }
    }
    w._blocks = std::move(blocks);
    return w;
  }

  WeakOrdering WeakOrdering::from_levels(std::span<std::size_t const> level) {
    std::size_t const count
        = level.empty() ? 0 : *std::max_element(level.begin(), level.end()) + 1;
    std::vector<std::vector<Element>> blocks(count);
    for (std::size_t x = 0; x < level.size(); ++x) {
      blocks[level[x]].push_back(static_cast<Element>(x));
    }
    return from_blocks(level.size(), std::move(blocks));
  }

  WeakOrdering WeakOrdering::total(std::span<Element const> order) {
    std::vector<std::vector<Element>> blocks;
    for (Element x : order) {
      blocks.push_back({x});
    }
    return from_blocks(order.size(), std::move(blocks));
  }

  std::vector<Element> WeakOrdering::elements_in_order() const {
    std::vector<Element> result;
    for (auto const& block : _blocks) {
      result.insert(result.end(), block.begin(), block.end());
    }
    return result;
  }

  WeakOrderingGenerator::WeakOrderingGenerator(std::size_t k)
      : _k(k), _blocks(0), _level(k, 0), _started(false), _done(false) {}

  void WeakOrderingGenerator::reset() {
    _blocks  = 0;
    _started = false;
    _done    = false;
    std::fill(_level.begin(), _level.end(), 0);
  }

  bool WeakOrderingGenerator::advance() {
    for (std::size_t i = _k; i-- > 0;) {
      if (++_level[i] < _blocks) {
        return true;
      }
      _level[i] = 0;
    }
    return false;
  }

  std::optional<WeakOrdering> WeakOrderingGenerator::next() {
    if (_done) {
      return std::nullopt;
    }
    if (_k == 0) {
      _done = true;
      return WeakOrdering{};
    }
    std::vector<bool> used;
    while (true) {
      if (!_started) {
        _started = true;
        _blocks  = 1;
      } else if (!advance()) {
        if (++_blocks > _k) {
          _done = true;
          return std::nullopt;
        }
      }
      used.assign(_blocks, false);
      std::size_t distinct = 0;
      for (std::size_t l : _level) {
        if (!used[l]) {
          used[l] = true;
          ++distinct;
        }
      }
      if (distinct == _blocks) {
        return WeakOrdering::from_levels(_level);
      }
    }
  }

  std::vector<WeakOrdering> all_weak_orderings(std::size_t k) {
    std::vector<WeakOrdering> result;
    WeakOrderingGenerator     gen(k);
    while (auto w = gen.next()) {
      result.push_back(std::move(*w));
    }
    return result;
  }

  OperationTable max_n(WeakOrdering const& w, std::size_t n) {
    std::size_t const k = w.carrier_size();
    if (k < 1 || n < 1) {
      raise(ErrorKind::arity_or_size_invalid,
            "max needs a nonempty carrier and arity at least 1");
    }
    auto const size = checked_power(k, n, max_table_size);
    if (!size) {
      raise(ErrorKind::arity_or_size_invalid, "max table is too large");
    }
    std::vector<Element> values(*size);
    std::vector<Element> tuple(n, 0);
    std::size_t          index = 0;
    do {
      Element best = tuple[0];
      for (Element x : tuple) {
        if (w.level(x) > w.level(best)) {
          best = x;
        }
      }
      for (Element x : tuple) {
        if (x != best && w.level(x) == w.level(best)) {
          std::string where = "(";
          for (std::size_t q = 0; q < n; ++q) {
            where += (q ? "," : "") + std::to_string(tuple[q] + 1);
          }
          raise(ErrorKind::partial_operation,
                "tuple " + where + ") has two distinct maximal elements");
        }
      }
      values[index++] = best;
    } while (next_tuple(tuple, k));
    return OperationTable::from_values(k, n, std::move(values));
  }

  KimuraSpec::KimuraSpec(WeakOrdering w, std::vector<Projection> choices)
      : _ordering(std::move(w)), _choices(std::move(choices)) {
    if (_choices.size() != _ordering.block_count()) {
      raise(ErrorKind::invalid_spec,
            "expected one projection per block ("
                + std::to_string(_ordering.block_count()) + "), got "
                + std::to_string(_choices.size()));
    }
    for (std::size_t b = 0; b < _choices.size(); ++b) {
      if (_ordering.blocks()[b].size() == 1) {
        _choices[b] = Projection::first;
      }
    }
  }

  std::vector<KimuraSpec> kimura_specs(WeakOrdering const& w) {
    std::vector<std::size_t> free_blocks;
    for (std::size_t b = 0; b < w.block_count(); ++b) {
      if (w.blocks()[b].size() > 1) {
        free_blocks.push_back(b);
      }
    }
    std::vector<KimuraSpec> result;
    std::size_t const       count = std::size_t(1) << free_blocks.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<Projection> choices(w.block_count(), Projection::first);
      for (std::size_t i = 0; i < free_blocks.size(); ++i) {
        if (mask >> (free_blocks.size() - 1 - i) & 1) {
          choices[free_blocks[i]] = Projection::second;
        }
      }
      result.emplace_back(w, std::move(choices));
    }
    return result;
  }

  OperationTable build_kimura(KimuraSpec const& spec) {
    auto const&       w = spec.ordering();
    std::size_t const k = w.carrier_size();
    if (k < 1) {
      raise(ErrorKind::arity_or_size_invalid, "empty carrier");
    }
    std::vector<Element> values(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        auto const lx = w.level(static_cast<Element>(x));
        auto const ly = w.level(static_cast<Element>(y));
        Element    v;
        if (lx == ly) {
          v = spec.choices()[lx] == Projection::first ? x : y;
        } else {
          v = lx > ly ? x : y;
        }
        values[x * k + y] = v;
      }
    }
    return OperationTable::from_values(k, 2, std::move(values));
  }

  std::optional<std::vector<Projection>> matches_kimura(OperationTable const& g,
                                                        WeakOrdering const& w) {
    std::size_t const k = g.carrier_size();
    if (g.arity() != 2 || w.carrier_size() != k) {
      return std::nullopt;
    }
    std::vector<std::optional<Projection>> choice(w.block_count());
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        Element const v  = g.value(x * k + y);
        auto const    lx = w.level(static_cast<Element>(x));
        auto const    ly = w.level(static_cast<Element>(y));
        if (lx != ly) {
          if (v != (lx > ly ? x : y)) {
            return std::nullopt;
          }
          continue;
        }
        if (x == y) {
          if (v != x) {
            return std::nullopt;
          }
          continue;
        }
        Projection p;
        if (v == x) {
          p = Projection::first;
        } else if (v == y) {
          p = Projection::second;
        } else {
          return std::nullopt;
        }
        if (choice[lx] && *choice[lx] != p) {
          return std::nullopt;
        }
        choice[lx] = p;
      }
    }
    std::vector<Projection> result;
    for (auto const& c : choice) {
      result.push_back(c.value_or(Projection::first));
    }
    return result;
  }

  std::optional<KimuraSpec> match_kimura(OperationTable const& g) {
    auto w       = ordering_from_preimages(g);
    auto choices = matches_kimura(g, w);
    if (!choices) {
      return std::nullopt;
    }
    return KimuraSpec(std::move(w), std::move(*choices));
  }

  WeakOrdering ordering_from_preimages(OperationTable const& table) {
    auto const counts = preimage_counts(table);
    std::map<std::uint64_t, std::vector<Element>> by_count;
    for (std::size_t x = 0; x < counts.size(); ++x) {
      by_count[counts[x]].push_back(static_cast<Element>(x));
    }
    std::vector<std::vector<Element>> blocks;
    for (auto& [count, block] : by_count) {
      blocks.push_back(std::move(block));
    }
    return WeakOrdering::from_blocks(table.carrier_size(), std::move(blocks));
  }

}  // namespace qsemi
