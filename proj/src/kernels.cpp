#include "kernels.hpp"

#include <algorithm>  // for find, fill

#include "qsemi/reduction.hpp"

namespace qsemi::detail {

  Shape::Shape(std::size_t k_, std::size_t n_)
      : k(k_), n(n_), size(1), diagonal_step(0), weights(n_) {
    for (std::size_t pos = n; pos-- > 0;) {
      weights[pos] = size;
      diagonal_step += size;
      size *= k;
    }
  }

  bool is_quasitrivial(std::span<Element const> values, std::size_t k,
                       std::size_t n) {
    std::vector<Element> tuple(n, 0);
    std::size_t          index = 0;
    do {
      if (std::find(tuple.begin(), tuple.end(), values[index]) == tuple.end()) {
        return false;
      }
      ++index;
    } while (next_tuple(tuple, k));
    return true;
  }

  bool is_neutral(Shape const& shape, std::span<Element const> values,
                  Element e) {
    std::size_t const base = e * shape.diagonal_step;
    for (std::size_t pos = 0; pos < shape.n; ++pos) {
      std::size_t const w = shape.weights[pos];
      for (std::size_t x = 0; x < shape.k; ++x) {
        if (values[base - e * w + x * w] != x) {
          return false;
        }
      }
    }
    return true;
  }

  NaiveAssociativity::NaiveAssociativity(Shape shape)
      : _shape(std::move(shape)), _args(2 * _shape.n - 1, 0) {}

  bool NaiveAssociativity::operator()(std::span<Element const> values) {
    std::size_t const n = _shape.n;
    auto const&       w = _shape.weights;
    std::fill(_args.begin(), _args.end(), 0);
    do {
      // The value with the inner application starting at position j, for
      // every j in [0, n-1]; consecutive positions must agree.
      Element first = 0;
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t inner = 0;
        for (std::size_t p = 0; p < n; ++p) {
          inner += _args[j + p] * w[p];
        }
        std::size_t outer = 0;
        for (std::size_t p = 0; p < j; ++p) {
          outer += _args[p] * w[p];
        }
        outer += values[inner] * w[j];
        for (std::size_t p = j + 1; p < n; ++p) {
          outer += _args[p + n - 1] * w[p];
        }
        Element const result = values[outer];
        if (j == 0) {
          first = result;
        } else if (result != first) {
          return false;
        }
      }
    } while (next_tuple(_args, _shape.k));
    return true;
  }

  bool is_associative_naive(Shape const& shape, std::span<Element const> values) {
    NaiveAssociativity check(shape);
    return check(values);
  }

  FastAssociativity::FastAssociativity(Shape shape)
      : _shape(std::move(shape)),
        _neutral(),
        _binary(_shape.k * _shape.k),
        _counts(_shape.k),
        _representative(_shape.k),
        _choice(_shape.k),
        _tuple(_shape.n) {
    _neutral.reserve(3);
  }

  bool FastAssociativity::operator()(std::span<Element const> values) {
    _neutral.clear();
    for (std::size_t e = 0; e < _shape.k; ++e) {
      if (is_neutral(_shape, values, static_cast<Element>(e))) {
        _neutral.push_back(static_cast<Element>(e));
        if (_neutral.size() == 3) {
          // An associative quasitrivial operation has at most two.
          return false;
        }
      }
    }
    if (_neutral.size() == 2) {
      return two_neutral_branch(values);
    }
    return kimura_branch(values);
  }

  bool FastAssociativity::two_neutral_branch(std::span<Element const> values) {
    if (_shape.n % 2 == 0) {
      return false;
    }
    auto const table = OperationTable::from_values(
        _shape.k, _shape.n, std::vector<Element>(values.begin(), values.end()));
    auto const g1 = reduction_from_neutral(table, _neutral[0]);
    auto const g2 = reduction_from_neutral(table, _neutral[1]);
    if (classify_binary(g1).tag != BinaryTag::a12_minus_q12
        || classify_binary(g2).tag != BinaryTag::a12_minus_q12) {
      return false;
    }
    return compose_binary(g1, _shape.n) == table;
  }

  bool FastAssociativity::kimura_branch(std::span<Element const> values) {
    std::size_t const k = _shape.k;
    std::size_t const n = _shape.n;
    // Candidate reduction G(x, y) = F(x, (n-1).y).
    std::size_t const w0   = _shape.weights[0];
    std::size_t const rest = _shape.diagonal_step - w0;
    std::fill(_counts.begin(), _counts.end(), 0);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        Element const g = values[x * w0 + y * rest];
        if (g != x && g != y) {
          return false;
        }
        _binary[x * k + y] = g;
        ++_counts[g];
      }
    }
    // Blocks of the weak ordering are the classes of equal preimage count;
    // each block is represented by its least element.
    for (std::size_t x = 0; x < k; ++x) {
      std::size_t r = 0;
      while (_counts[r] != _counts[x]) {
        ++r;
      }
      _representative[x] = static_cast<Element>(r);
      _choice[x]         = -1;
    }
    for (std::size_t x = 0; x < k; ++x) {
      if (_binary[x * k + x] != x) {
        return false;
      }
      for (std::size_t y = x + 1; y < k; ++y) {
        Element const xy = _binary[x * k + y];
        Element const yx = _binary[y * k + x];
        if (_counts[x] != _counts[y]) {
          Element const top = _counts[x] < _counts[y] ? Element(y) : Element(x);
          if (xy != top || yx != top) {
            return false;
          }
          continue;
        }
        int choice;
        if (xy == x && yx == y) {
          choice = 0;
        } else if (xy == y && yx == x) {
          choice = 1;
        } else {
          return false;
        }
        int& block = _choice[_representative[x]];
        if (block == -1) {
          block = choice;
        } else if (block != choice) {
          return false;
        }
      }
    }
    // G_{n-1} must reproduce F on every tuple.
    std::fill(_tuple.begin(), _tuple.end(), 0);
    std::size_t index = 0;
    do {
      Element acc = _tuple[n - 1];
      for (std::size_t pos = n - 1; pos-- > 0;) {
        acc = _binary[_tuple[pos] * k + acc];
      }
      if (values[index] != acc) {
        return false;
      }
      ++index;
    } while (next_tuple(_tuple, k));
    return true;
  }

}  // namespace qsemi::detail
