#pragma once

// Reference implementations written straight from the definitions, sharing
// no code with the library beyond table lookup. Slow on purpose.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "qsemi/table.hpp"

namespace oracle {

  using qsemi::Element;
  using qsemi::OperationTable;
  using Tuple = std::vector<Element>;

  inline Element apply(OperationTable const& t, Tuple const& x) {
    std::size_t index = 0;
    for (Element v : x) {
      index = index * t.carrier_size() + v;
    }
    return t.values()[index];
  }

  inline void for_each_tuple(std::size_t k, std::size_t m,
                             std::function<void(Tuple const&)> const& fn) {
    Tuple x(m, 0);
    while (true) {
      fn(x);
      std::size_t p = m;
      while (p > 0) {
        --p;
        if (++x[p] < k) {
          break;
        }
        x[p] = 0;
        if (p == 0) {
          return;
        }
      }
      if (m == 0) {
        return;
      }
    }
  }

  //! F(x_1..x_{i-1}, F(x_i..x_{i+n-1}), x_{i+n}..x_{2n-1}) independent of i.
  inline bool associative(OperationTable const& t) {
    std::size_t const n  = t.arity();
    bool              ok = true;
    for_each_tuple(t.carrier_size(), 2 * n - 1, [&](Tuple const& x) {
      if (!ok) {
        return;
      }
      std::set<Element> results;
      for (std::size_t i = 0; i < n; ++i) {
        Tuple inner(x.begin() + i, x.begin() + i + n);
        Tuple outer(x.begin(), x.begin() + i);
        outer.push_back(oracle::apply(t, inner));
        outer.insert(outer.end(), x.begin() + i + n, x.end());
        results.insert(oracle::apply(t, outer));
      }
      ok = results.size() == 1;
    });
    return ok;
  }

  inline bool quasitrivial(OperationTable const& t) {
    bool ok = true;
    for_each_tuple(t.carrier_size(), t.arity(), [&](Tuple const& x) {
      ok = ok && std::find(x.begin(), x.end(), oracle::apply(t, x)) != x.end();
    });
    return ok;
  }

  inline bool symmetric(OperationTable const& t) {
    bool ok = true;
    for_each_tuple(t.carrier_size(), t.arity(), [&](Tuple const& x) {
      Tuple y = x;
      std::rotate(y.begin(), y.begin() + 1, y.end());
      ok = ok && oracle::apply(t, x) == oracle::apply(t, y);
      if (x.size() >= 2) {
        Tuple z = x;
        std::swap(z[0], z[1]);
        ok = ok && oracle::apply(t, x) == oracle::apply(t, z);
      }
    });
    return ok;
  }

  inline std::vector<Element> neutral(OperationTable const& t) {
    std::vector<Element> result;
    std::size_t const    k = t.carrier_size();
    std::size_t const    n = t.arity();
    for (std::size_t e = 0; e < k; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
          Tuple y(n, Element(e));
          y[i] = Element(x);
          ok   = ok && oracle::apply(t, y) == x;
        }
      }
      if (ok) {
        result.push_back(Element(e));
      }
    }
    return result;
  }

  //! G(x_1, G(x_2, ... G(x_{m-1}, x_m))).
  inline Element fold_right(OperationTable const& g, Tuple const& x) {
    Element v = x.back();
    for (std::size_t i = x.size() - 1; i-- > 0;) {
      v = oracle::apply(g, Tuple{x[i], v});
    }
    return v;
  }

  inline bool reduces_to(OperationTable const& g, OperationTable const& f) {
    bool ok = true;
    for_each_tuple(f.carrier_size(), f.arity(), [&](Tuple const& x) {
      ok = ok && fold_right(g, x) == oracle::apply(f, x);
    });
    return ok;
  }

  //! Partitions of a k-set into l blocks, by restricted growth strings.
  inline std::uint64_t stirling2(std::size_t k, std::size_t l) {
    std::uint64_t count = 0;
    Tuple         rgs(k, 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i,
                                                           std::size_t used) {
      if (i == k) {
        count += used == l;
        return;
      }
      for (std::size_t b = 0; b <= used && b < l; ++b) {
        rgs[i] = Element(b);
        go(i + 1, std::max(used, b + 1));
      }
    };
    go(0, 0);
    return count;
  }

  //! Every binary table on [k] with the given cell predicate, by brute force.
  inline std::uint64_t count_binary(
      std::size_t k, std::function<bool(OperationTable const&)> const& keep) {
    std::uint64_t count = 0;
    std::size_t const cells = k * k;
    for_each_tuple(k, cells, [&](Tuple const& values) {
      auto t = OperationTable::from_values(k, 2, values);
      count += keep(t);
    });
    return count;
  }

}  // namespace oracle
