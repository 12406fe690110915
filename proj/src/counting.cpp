#include "qsemi/counting.hpp"

#include <string>  // for to_string

#include "qsemi/error.hpp"

namespace qsemi {

  namespace {
    void require_positive(std::size_t k, char const* what) {
      if (k < 1) {
        raise(ErrorKind::domain_error,
              std::string(what) + " is only defined for k >= 1");
      }
    }

    // S(i, l) for 0 <= l <= i <= k.
    std::vector<std::vector<BigInt>> stirling_table(std::size_t k) {
      std::vector<std::vector<BigInt>> s(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        s[i].assign(i + 1, 0);
        s[i][i] = 1;
        for (std::size_t l = 1; l < i; ++l) {
          s[i][l] = BigInt(l) * s[i - 1][l] + s[i - 1][l - 1];
        }
      }
      return s;
    }
  }  // namespace

  BigInt factorial(std::size_t n) {
    BigInt result = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      result *= i;
    }
    return result;
  }

  BigInt binomial(std::size_t n, std::size_t r) {
    if (r > n) {
      return 0;
    }
    BigInt result = 1;
    for (std::size_t i = 1; i <= r; ++i) {
      result = result * (n - r + i) / i;
    }
    return result;
  }

  BigInt stirling2(std::size_t k, std::size_t l) {
    if (l > k) {
      raise(ErrorKind::domain_error,
            "Stirling number needs l <= k, got k=" + std::to_string(k)
                + " l=" + std::to_string(l));
    }
    return stirling_table(k)[k][l];
  }

  BigInt stirling2_alternating(std::size_t k, std::size_t l) {
    if (l > k) {
      raise(ErrorKind::domain_error, "Stirling number needs l <= k");
    }
    BigInt sum = 0;
    for (std::size_t i = 0; i <= l; ++i) {
      BigInt term = binomial(l, i) * boost::multiprecision::pow(BigInt(i),
                                                                static_cast<unsigned>(k));
      if ((l - i) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    return sum / factorial(l);
  }

  BigInt fubini(std::size_t k) {
    std::vector<BigInt> a(k + 1);
    a[0] = 1;
    for (std::size_t m = 1; m <= k; ++m) {
      for (std::size_t i = 1; i <= m; ++i) {
        a[m] += binomial(m, i) * a[m - i];
      }
    }
    return a[k];
  }

  BigInt count_q2(std::size_t k) {
    auto const s     = stirling_table(k);
    BigInt     total = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      BigInt inner = 0;
      for (std::size_t l = 0; l + i <= k; ++l) {
        BigInt term = binomial(k, l) * s[k - l][i] * factorial(i + l);
        if (l % 2 == 0) {
          inner += term;
        } else {
          inner -= term;
        }
      }
      total += (BigInt(1) << i) * inner;
    }
    return total;
  }

  BigInt count_q2_1(std::size_t k) {
    require_positive(k, "q2_1");
    return k * count_q2(k - 1);
  }

  BigInt count_a2_1(std::size_t k) {
    require_positive(k, "a2_1");
    if (k == 1) {
      return 1;
    }
    return k * count_q2(k - 1) + BigInt(k) * (k - 1) * count_q2(k - 2);
  }

  BigInt count_qn_0(std::size_t k) {
    require_positive(k, "qn_0");
    return count_q2(k) - count_q2_1(k);
  }

  BigInt count_qn_1(std::size_t k) {
    require_positive(k, "qn_1");
    return count_q2_1(k);
  }

  BigInt count_qn_2(std::size_t k, Parity parity) {
    require_positive(k, "qn_2");
    if (parity == Parity::even || k < 2) {
      return 0;
    }
    return binomial(k, 2) * count_q2(k - 2);
  }

  BigInt count_qn(std::size_t k, Parity parity) {
    require_positive(k, "qn");
    return count_q2(k) + count_qn_2(k, parity);
  }

  SymmetricCounts count_qs_family(std::size_t k, Parity parity) {
    require_positive(k, "the symmetric counts");
    if (k == 1) {
      return SymmetricCounts{1, 1, 0, 1, 1};
    }
    BigInt const kf = factorial(k);
    SymmetricCounts result;
    result.qs2   = kf;
    result.qsn_1 = kf;
    result.as2_1 = k == 2 ? BigInt(4) : 2 * kf;
    if (parity == Parity::odd) {
      result.qsn_2 = kf / 2;
      result.qsn   = 3 * kf / 2;
    } else {
      result.qsn_2 = 0;
      result.qsn   = kf;
    }
    return result;
  }

  std::span<CountField const> count_fields() {
    static constexpr CountField fields[] = {
        {"q2", "A292932", &CountsReport::q2},
        {"q2_1", "A292933", &CountsReport::q2_1},
        {"a2_1", "A308351", &CountsReport::a2_1},
        {"qn_0", "A308352", &CountsReport::qn_0},
        {"qn_1", "A292933", &CountsReport::qn_1},
        {"qn_2", "A308354", &CountsReport::qn_2},
        {"qn", "A308362", &CountsReport::qn},
        {"qs2", "", &CountsReport::qs2},
        {"qsn_1", "", &CountsReport::qsn_1},
        {"qsn_2", "", &CountsReport::qsn_2},
        {"qsn", "", &CountsReport::qsn},
        {"as2_1", "", &CountsReport::as2_1},
    };
    return fields;
  }

  CountsReport formula_counts(std::size_t k, Parity parity) {
    require_positive(k, "counts report");
    CountsReport r{};
    r.k      = k;
    r.parity = parity;
    r.source = CountSource::formula;
    r.q2   = count_q2(k);
    r.q2_1 = count_q2_1(k);
    r.a2_1 = count_a2_1(k);
    r.qn_0 = count_qn_0(k);
    r.qn_1 = count_qn_1(k);
    r.qn_2 = count_qn_2(k, parity);
    r.qn   = count_qn(k, parity);
    auto s = count_qs_family(k, parity);
    r.qs2   = s.qs2;
    r.qsn_1 = s.qsn_1;
    r.qsn_2 = s.qsn_2;
    r.qsn   = s.qsn;
    r.as2_1 = s.as2_1;
    return r;
  }

  std::span<Table1Row const> table1_golden() {
    static constexpr Table1Row rows[] = {
        {1, 1, 1, 0, 0, 1, 1},
        {2, 4, 2, 2, 1, 5, 4},
        {3, 20, 12, 8, 3, 23, 18},
        {4, 138, 80, 58, 24, 162, 128},
        {5, 1182, 690, 492, 200, 1382, 1090},
        {6, 12166, 7092, 5074, 2070, 14236, 11232},
    };
    return rows;
  }

  std::span<Table1Column const, 6> table1_columns() {
    static constexpr Table1Column columns[] = {
        {"q2", "A292932", &Table1Row::q2},
        {"q2_1", "A292933", &Table1Row::q2_1},
        {"qn_0", "A308352", &Table1Row::qn_0},
        {"qn_2", "A308354", &Table1Row::qn_2},
        {"qn", "A308362", &Table1Row::qn},
        {"a2_1", "A308351", &Table1Row::a2_1},
    };
    return std::span<Table1Column const, 6>(columns);
  }

  std::vector<Table1Cell> verify_table1(
      std::optional<std::pair<std::size_t, std::string>> fault) {
    std::vector<Table1Cell> cells;
    for (auto const& row : table1_golden()) {
      auto const computed = formula_counts(row.k, Parity::odd);
      for (auto const& column : table1_columns()) {
        BigInt value;
        for (auto const& field : count_fields()) {
          if (std::string(field.name) == column.name) {
            value = *(computed.*field.member);
          }
        }
        if (fault && fault->first == row.k && fault->second == column.name) {
          value += 1;
        }
        cells.push_back(Table1Cell{row.k, column.name, row.*column.member,
                                   std::move(value)});
      }
    }
    return cells;
  }

}  // namespace qsemi
