#include "qsemi/reduction.hpp"

#include <algorithm>  // for find, min, max
#include <atomic>     // for atomic
#include <string>     // for to_string

#include "qsemi/analysis.hpp"
#include "qsemi/error.hpp"

namespace qsemi {

  namespace {

    std::atomic<bool> composition_checks{false};

    void require_arity(OperationTable const& table, std::size_t arity,
                       char const* what) {
      if (table.arity() != arity) {
        raise(ErrorKind::arity_mismatch,
              std::string(what) + " needs arity " + std::to_string(arity)
                  + ", got " + std::to_string(table.arity()));
      }
    }

    bool contains(std::vector<Element> const& v, Element x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    }

    // Restriction of a binary table to a closed subset, relabelled onto
    // [|subset|] (subset listed ascending).
    OperationTable restrict_binary(OperationTable const&       g,
                                   std::vector<Element> const& subset) {
      std::size_t const    m = subset.size();
      std::vector<Element> values(m * m);
      std::size_t const    k = g.carrier_size();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          Element const v   = g.value(subset[i] * k + subset[j]);
          auto const    pos = std::find(subset.begin(), subset.end(), v);
          if (pos == subset.end()) {
            raise(ErrorKind::precondition_violated,
                  "restriction to a non-closed subset");
          }
          values[i * m + j] = static_cast<Element>(pos - subset.begin());
        }
      }
      return OperationTable::from_values(m, 2, std::move(values));
    }

    // (b) of the pair characterisation: the complement of {x, y} is a
    // closed, associative, quasitrivial subsystem.
    bool rest_is_associative_quasitrivial(OperationTable const& g, Element x,
                                          Element y) {
      std::vector<Element> rest;
      for (std::size_t z = 0; z < g.carrier_size(); ++z) {
        if (z != x && z != y) {
          rest.push_back(static_cast<Element>(z));
        }
      }
      if (rest.empty()) {
        return true;
      }
      std::size_t const k = g.carrier_size();
      for (Element a : rest) {
        for (Element b : rest) {
          Element const v = g.value(a * k + b);
          if (v != a && v != b) {
            return false;
          }
        }
      }
      auto const sub = restrict_binary(g, rest);
      return is_associative_naive(sub);
    }

  }  // namespace

  void set_composition_checks(bool enabled) noexcept {
    composition_checks.store(enabled);
  }

  bool composition_checks_enabled() noexcept {
    return composition_checks.load();
  }

  OperationTable compose_binary(OperationTable const& binary,
                                std::size_t           target_arity) {
    require_arity(binary, 2, "compose_binary");
    if (target_arity < 2) {
      raise(ErrorKind::arity_mismatch,
            "binary composition needs a target arity of at least 2");
    }
    std::size_t const k    = binary.carrier_size();
    auto const        size = checked_power(k, target_arity, max_table_size);
    if (!size) {
      raise(ErrorKind::arity_or_size_invalid, "composed table is too large");
    }
    std::vector<Element> values(*size);
    std::vector<Element> tuple(target_arity, 0);
    std::size_t          index = 0;
    do {
      Element acc = tuple[target_arity - 1];
      for (std::size_t pos = target_arity - 1; pos-- > 0;) {
        acc = binary.value(tuple[pos] * k + acc);
      }
      values[index++] = acc;
    } while (next_tuple(tuple, k));
    return OperationTable::from_values(k, target_arity, std::move(values));
  }

  OperationTable compose_ternary(OperationTable const& ternary,
                                 std::size_t           target_arity) {
    require_arity(ternary, 3, "compose_ternary");
    if (target_arity < 3) {
      raise(ErrorKind::arity_mismatch,
            "ternary composition needs a target arity of at least 3");
    }
    if (target_arity % 2 == 0) {
      raise(ErrorKind::even_target_arity,
            "ternary composition needs an odd target arity, got "
                + std::to_string(target_arity));
    }
    std::size_t const k    = ternary.carrier_size();
    auto const        size = checked_power(k, target_arity, max_table_size);
    if (!size) {
      raise(ErrorKind::arity_or_size_invalid, "composed table is too large");
    }
    std::vector<Element> values(*size);
    std::vector<Element> tuple(target_arity, 0);
    std::size_t          index = 0;
    do {
      std::size_t const last = target_arity - 1;
      Element acc = ternary.value(tuple[last - 2] * k * k + tuple[last - 1] * k
                                  + tuple[last]);
      for (std::size_t pos = last - 2; pos >= 2; pos -= 2) {
        acc = ternary.value(tuple[pos - 2] * k * k + tuple[pos - 1] * k + acc);
      }
      values[index++] = acc;
    } while (next_tuple(tuple, k));
    return OperationTable::from_values(k, target_arity, std::move(values));
  }

  OperationTable reduction_from_neutral(OperationTable const& table, Element e) {
    if (table.arity() < 2) {
      raise(ErrorKind::arity_too_small, "reductions need arity at least 2");
    }
    auto const neutral = neutral_elements(table);
    if (!contains(neutral, e)) {
      raise(ErrorKind::not_a_neutral_element,
            std::to_string(e + 1) + " is not a neutral element");
    }
    std::size_t const    k = table.carrier_size();
    std::size_t const    n = table.arity();
    std::vector<Element> values(k * k);
    std::vector<Element> tuple(n, e);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        tuple.front()    = static_cast<Element>(x);
        tuple.back()     = static_cast<Element>(y);
        values[x * k + y] = table.at(tuple);
      }
    }
    auto result = OperationTable::from_values(k, 2, std::move(values));
    if (composition_checks_enabled() && is_associative_naive(table)
        && compose_binary(result, n) != table) {
      raise(ErrorKind::internal_contradiction,
            "G^e does not compose back to an associative table");
    }
    return result;
  }

  OperationTable candidate_reduction(OperationTable const& table) {
    if (table.arity() < 2) {
      raise(ErrorKind::arity_too_small, "reductions need arity at least 2");
    }
    std::size_t const    k = table.carrier_size();
    std::vector<Element> values(k * k);
    std::size_t const    w0   = table.weight(0);
    std::size_t const    rest = table.diagonal_index(1) - w0;
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        values[x * k + y] = table.value(x * w0 + y * rest);
      }
    }
    return OperationTable::from_values(k, 2, std::move(values));
  }

  OperationTable ternary_reduction(OperationTable const& table,
                                   std::optional<Element> e) {
    std::size_t const n = table.arity();
    if (n < 3) {
      raise(ErrorKind::arity_mismatch, "ternary reduction needs arity >= 3");
    }
    if (n % 2 == 0) {
      raise(ErrorKind::even_target_arity,
            "ternary reduction needs an odd arity, got " + std::to_string(n));
    }
    auto const neutral = neutral_elements(table);
    if (e && !contains(neutral, *e)) {
      raise(ErrorKind::not_a_neutral_element,
            std::to_string(*e + 1) + " is not a neutral element");
    }
    OperationTable const binary
        = neutral.size() <= 1
              ? candidate_reduction(table)
              : reduction_from_neutral(table, e.value_or(neutral.front()));
    auto ternary = compose_binary(binary, 3);
    if (compose_ternary(ternary, n) != table) {
      raise(ErrorKind::not_reducible,
            "the ternary candidate does not compose back to the table");
    }
    return ternary;
  }

  ReductionSet all_binary_reductions(OperationTable const& table) {
    if (table.arity() < 2 || !is_quasitrivial(table)
        || !is_associative_fast(table)) {
      raise(ErrorKind::not_associative_quasitrivial,
            "binary reductions are only enumerated for associative "
            "quasitrivial tables");
    }
    ReductionSet result;
    result.neutral_elements = neutral_elements(table);
    if (result.neutral_elements.empty()) {
      result.reductions.push_back(Reduction{ReductionOrigin::idempotent_candidate,
                                            std::nullopt,
                                            candidate_reduction(table)});
    } else {
      for (Element e : result.neutral_elements) {
        result.reductions.push_back(Reduction{
            ReductionOrigin::from_neutral, e, reduction_from_neutral(table, e)});
      }
    }
    for (auto const& r : result.reductions) {
      if (compose_binary(r.table, table.arity()) != table) {
        raise(ErrorKind::internal_contradiction,
              "a computed reduction does not compose back to the table");
      }
    }
    result.complete = true;
    return result;
  }

  std::optional<std::pair<Element, Element>>
  a12_exceptional_pair(OperationTable const& g) {
    require_arity(g, 2, "a12_exceptional_pair");
    std::size_t const k = g.carrier_size();
    auto const at = [&](std::size_t a, std::size_t b) {
      return g.value(a * k + b);
    };
    std::optional<std::pair<Element, Element>> found;
    std::size_t                                matches = 0;
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) {
        // (a) {x, y} is a copy of (Z_2, +) with identity u and generator v.
        bool z2 = false;
        for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
          if (at(u, u) == u && at(u, v) == v && at(v, u) == v
              && at(v, v) == u) {
            z2 = true;
          }
        }
        if (!z2) {
          continue;
        }
        // (c) every other z absorbs {x, y, z}.
        bool absorbs = true;
        for (std::size_t z = 0; z < k && absorbs; ++z) {
          if (z == x || z == y) {
            continue;
          }
          for (std::size_t w : {x, y, z}) {
            if (at(z, w) != z || at(w, z) != z) {
              absorbs = false;
              break;
            }
          }
        }
        if (!absorbs) {
          continue;
        }
        // (b)
        if (!rest_is_associative_quasitrivial(
                g, static_cast<Element>(x), static_cast<Element>(y))) {
          continue;
        }
        ++matches;
        found = std::pair{static_cast<Element>(x), static_cast<Element>(y)};
      }
    }
    if (matches != 1) {
      return std::nullopt;
    }
    return found;
  }

  BinaryClass classify_binary(OperationTable const& g) {
    require_arity(g, 2, "classify_binary");
    std::size_t const k       = g.carrier_size();
    auto const        neutral = neutral_elements(g);
    bool const        assoc   = is_associative_naive(g);
    bool const        qt      = is_quasitrivial(g);

    BinaryClass result;
    if (assoc && qt) {
      result.tag = neutral.empty() ? BinaryTag::quasitrivial_no_neutral
                                   : BinaryTag::q12;
      if (!neutral.empty()) {
        result.neutral = neutral.front();
      }
    } else if (assoc && neutral.size() == 1) {
      Element const          e = neutral.front();
      bool                   member = true;
      std::optional<Element> exceptional;
      for (std::size_t x = 0; x < k && member; ++x) {
        Element const xx = g.value(x * k + x);
        if (xx != x && xx != e) {
          member = false;
        } else if (xx != x) {
          if (exceptional) {
            member = false;  // must be unique
          }
          exceptional = static_cast<Element>(x);
        }
        for (std::size_t y = 0; y < k && member; ++y) {
          Element const xy = g.value(x * k + y);
          if (x != y && xy != x && xy != y) {
            member = false;
          }
        }
      }
      if (member && exceptional) {
        for (std::size_t y = 0; y < k; ++y) {
          if (y == *exceptional || y == e) {
            continue;
          }
          if (g.value(*exceptional * k + y) != y
              || g.value(y * k + *exceptional) != y) {
            member = false;
          }
        }
      }
      // Given membership in A12, quasitriviality fails exactly when the
      // preimage of e has more than one cell, i.e. when exceptional is set.
      if (member && exceptional) {
        result.tag              = BinaryTag::a12_minus_q12;
        result.neutral          = e;
        result.exceptional_pair = std::pair{*exceptional, e};
      }
    }

    auto const pair = a12_exceptional_pair(g);
    bool const by_definition = result.tag == BinaryTag::a12_minus_q12;
    if (by_definition != pair.has_value()
        || (pair && *pair != std::pair{std::min(result.exceptional_pair->first,
                                                result.exceptional_pair->second),
                                       std::max(result.exceptional_pair->first,
                                                result.exceptional_pair->second)})) {
      raise(ErrorKind::internal_contradiction,
            "A12 \\ Q12 membership disagrees with its pair characterisation");
    }
    return result;
  }

}  // namespace qsemi
