#include "qsemi/io.hpp"

#include <charconv>  // for from_chars
#include <iomanip>   // for setw
#include <sstream>   // for ostringstream

#include "qsemi/error.hpp"

namespace qsemi {

  namespace {
    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r\n");
      return s.substr(first, last - first + 1);
    }

    long parse_integer(std::string_view token, ErrorKind kind) {
      long value = 0;
      auto const [end, ec]
          = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || end != token.data() + token.size()) {
        raise(kind, "expected an integer, got '" + std::string(token) + "'");
      }
      return value;
    }

    std::vector<std::string_view> split(std::string_view s, char separator) {
      std::vector<std::string_view> parts;
      std::size_t                   start = 0;
      while (true) {
        auto const pos = s.find(separator, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          return parts;
        }
        start = pos + 1;
      }
    }

    OperationTable build(std::vector<std::string_view> const& tokens) {
      if (tokens.size() < 2) {
        raise(ErrorKind::parse_error, "missing 'k n' header");
      }
      long const k = parse_integer(tokens[0], ErrorKind::parse_error);
      long const n = parse_integer(tokens[1], ErrorKind::parse_error);
      if (k < 1 || n < 1) {
        raise(ErrorKind::arity_or_size_invalid,
              "k and n must be positive, got k=" + std::to_string(k)
                  + " n=" + std::to_string(n));
      }
      std::vector<int> entries;
      entries.reserve(tokens.size() - 2);
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto const v = parse_integer(tokens[i], ErrorKind::parse_error);
        entries.push_back(v < -1 || v > 1 << 20 ? -1 : static_cast<int>(v));
      }
      return make_table(static_cast<std::size_t>(k),
                        static_cast<std::size_t>(n), entries);
    }

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    char const* origin_name(ReductionOrigin origin) {
      return origin == ReductionOrigin::from_neutral ? "neutral" : "candidate";
    }

    char const* kind_name(SymmetricKind kind) {
      switch (kind) {
        case SymmetricKind::max_total_order:
          return "max_total_order";
        case SymmetricKind::two_neutral:
          return "two_neutral";
        default:
          return "not_applicable";
      }
    }

    nlohmann::json one_based(std::span<Element const> xs) {
      auto result = nlohmann::json::array();
      for (Element x : xs) {
        result.push_back(int(x) + 1);
      }
      return result;
    }
  }  // namespace

  std::vector<OperationTable> parse_tables(std::string_view text) {
    std::vector<OperationTable>   tables;
    std::vector<std::string_view> tokens;
    auto const                    flush = [&] {
      if (!tokens.empty()) {
        tables.push_back(build(tokens));
        tokens.clear();
      }
    };
    for (auto line : split(text, '\n')) {
      line = trim(line.substr(0, line.find('#')));
      if (line == "---") {
        flush();
        continue;
      }
      std::size_t pos = 0;
      while (pos < line.size()) {
        auto const start = line.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) {
          break;
        }
        auto end = line.find_first_of(" \t\r", start);
        end      = end == std::string_view::npos ? line.size() : end;
        tokens.push_back(line.substr(start, end - start));
        pos = end;
      }
    }
    flush();
    return tables;
  }

  OperationTable parse_table(std::string_view text) {
    auto tables = parse_tables(text);
    if (tables.size() != 1) {
      raise(ErrorKind::parse_error,
            "expected exactly one table, found " + std::to_string(tables.size()));
    }
    return std::move(tables.front());
  }

  std::string format_table(OperationTable const& table,
                           std::string_view      comment) {
    std::ostringstream out;
    if (!comment.empty()) {
      out << "# " << comment << '\n';
    }
    std::size_t const k = table.carrier_size();
    out << k << ' ' << table.arity() << '\n';
    for (std::size_t i = 0; i < table.size(); ++i) {
      out << int(table.value(i)) + 1 << ((i + 1) % k == 0 ? '\n' : ' ');
    }
    return out.str();
  }

  WeakOrdering parse_weak_ordering(std::string_view text, std::size_t k) {
    std::vector<std::vector<Element>> blocks;
    for (auto block_text : split(text, '<')) {
      std::vector<Element> block;
      for (auto item : split(block_text, '~')) {
        item = trim(item);
        if (item.empty()) {
          raise(ErrorKind::invalid_ordering,
                "empty element in ordering '" + std::string(text) + "'");
        }
        long const x = parse_integer(item, ErrorKind::invalid_ordering);
        if (x < 1 || x > static_cast<long>(k)) {
          raise(ErrorKind::invalid_ordering,
                "element " + std::to_string(x) + " outside [1.."
                    + std::to_string(k) + "]");
        }
        block.push_back(static_cast<Element>(x - 1));
      }
      blocks.push_back(std::move(block));
    }
    return WeakOrdering::from_blocks(k, std::move(blocks));
  }

  std::string format_weak_ordering(WeakOrdering const& w) {
    std::string result;
    for (std::size_t b = 0; b < w.block_count(); ++b) {
      if (b > 0) {
        result += " < ";
      }
      auto const& block = w.blocks()[b];
      for (std::size_t i = 0; i < block.size(); ++i) {
        result += (i > 0 ? " ~ " : "") + std::to_string(block[i] + 1);
      }
    }
    return result;
  }

  std::string to_string(BigInt const& value) {
    return value.str();
  }

  nlohmann::json to_json(BigInt const& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
      return value.convert_to<std::uint64_t>();
    }
    return value.str();
  }

  nlohmann::json to_json(AnalysisReport const& report) {
    using nlohmann::json;
    auto const& t = report.table;
    json        j;
    j["schema"]       = 1;
    j["k"]            = t.carrier_size();
    j["n"]            = t.arity();
    j["idempotent"]   = report.idempotent;
    j["quasitrivial"] = report.quasitrivial;
    j["symmetric"]    = report.symmetric;
    j["associative"]  = report.associative ? json(*report.associative) : json();
    j["method"] = report.method == AssociativityMethod::fast ? "fast" : "naive";
    j["methods_agree"]
        = report.methods_agree ? json(*report.methods_agree) : json();
    j["bisymmetric"] = report.bisymmetric ? json(*report.bisymmetric) : json();
    j["neutral_elements"] = one_based(report.neutral_elements);
    j["annihilator"]
        = report.annihilator ? json(int(*report.annihilator) + 1) : json();
    j["preimage_sequence"] = report.preimages.counts;
    if (report.reductions) {
      auto list = json::array();
      for (auto const& r : report.reductions->reductions) {
        list.push_back({{"origin", origin_name(r.origin)},
                        {"neutral", r.neutral ? json(int(*r.neutral) + 1) : json()},
                        {"values", one_based(r.table.values())}});
      }
      j["reductions"] = std::move(list);
    } else {
      j["reductions"] = json();
    }
    j["kimura_ordering"] = report.kimura_ordering
                               ? json(format_weak_ordering(*report.kimura_ordering))
                               : json();
    if (report.symmetric_class.kind == SymmetricKind::not_applicable) {
      j["symmetric_class"] = json();
    } else {
      auto const& c        = report.symmetric_class;
      j["symmetric_class"] = {
          {"kind", kind_name(c.kind)},
          {"ordering", c.ordering ? json(format_weak_ordering(*c.ordering)) : json()}};
    }
    return j;
  }

  nlohmann::json to_json(CountsReport const& report) {
    using nlohmann::json;
    json j;
    j["schema"] = 1;
    j["k"]      = report.k;
    j["parity"] = report.parity == Parity::odd ? "odd" : "even";
    j["arity"]  = report.arity ? json(*report.arity) : json();
    j["source"] = report.source == CountSource::formula ? "formula" : "brute_force";
    json counts = json::object();
    json oeis   = json::object();
    for (auto const& field : count_fields()) {
      auto const& value = report.*field.member;
      if (!value) {
        continue;
      }
      counts[field.name] = to_json(*value);
      if (*field.oeis != '\0') {
        oeis[field.name] = field.oeis;
      }
    }
    j["counts"]   = std::move(counts);
    j["oeis_ids"] = std::move(oeis);
    return j;
  }

  nlohmann::json to_json(std::vector<Table1Cell> const& cells) {
    using nlohmann::json;
    json list  = json::array();
    bool all   = true;
    for (auto const& cell : cells) {
      std::string oeis;
      for (auto const& column : table1_columns()) {
        if (cell.column == column.name) {
          oeis = column.oeis;
        }
      }
      all &= cell.matches();
      list.push_back({{"k", cell.k},
                      {"column", cell.column},
                      {"oeis", oeis},
                      {"expected", cell.expected},
                      {"computed", to_json(cell.computed)},
                      {"match", cell.matches()}});
    }
    return {{"schema", 1}, {"all_match", all}, {"cells", std::move(list)}};
  }

  std::string format_report(AnalysisReport const& report) {
    std::ostringstream out;
    auto const row = [&](std::string_view key, std::string const& value) {
      out << std::left << std::setw(18) << key << value << '\n';
    };
    auto const optional_bool = [](std::optional<bool> const& b) {
      return b ? std::string(yes_no(*b)) : std::string("-");
    };
    auto const elements = [](std::span<Element const> xs) {
      std::string s = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(xs[i] + 1);
      }
      return s + "}";
    };
    row("k", std::to_string(report.table.carrier_size()));
    row("n", std::to_string(report.table.arity()));
    row("idempotent", yes_no(report.idempotent));
    row("quasitrivial", yes_no(report.quasitrivial));
    row("symmetric", yes_no(report.symmetric));
    row("associative", optional_bool(report.associative));
    row("method", report.method == AssociativityMethod::fast ? "fast" : "naive");
    if (report.methods_agree) {
      row("methods agree", yes_no(*report.methods_agree));
    }
    if (report.bisymmetric) {
      row("bisymmetric", yes_no(*report.bisymmetric));
    }
    row("neutral elements", elements(report.neutral_elements));
    row("annihilator",
        report.annihilator ? std::to_string(*report.annihilator + 1) : "-");
    std::string preimages;
    for (auto c : report.preimages.counts) {
      preimages += (preimages.empty() ? "" : ",") + std::to_string(c);
    }
    row("preimages", "(" + preimages + ")");
    if (report.reductions) {
      row("reductions", std::to_string(report.reductions->reductions.size()));
    }
    if (report.kimura_ordering) {
      row("ordering", format_weak_ordering(*report.kimura_ordering));
    }
    if (report.symmetric_class.kind != SymmetricKind::not_applicable) {
      row("symmetric class", kind_name(report.symmetric_class.kind));
    }
    return out.str();
  }

  std::string format_counts(CountsReport const& report) {
    std::ostringstream out;
    out << "k=" << report.k << " parity="
        << (report.parity == Parity::odd ? "odd" : "even");
    if (report.arity) {
      out << " n=" << *report.arity;
    }
    out << " source="
        << (report.source == CountSource::formula ? "formula" : "brute_force")
        << '\n';
    for (auto const& field : count_fields()) {
      auto const& value = report.*field.member;
      if (!value) {
        continue;
      }
      out << std::left << std::setw(8) << field.name << std::right
          << std::setw(12) << value->str();
      if (*field.oeis != '\0') {
        out << "  " << field.oeis;
      }
      out << '\n';
    }
    return out.str();
  }

  std::string counts_csv(std::vector<CountsReport> const& reports) {
    std::ostringstream out;
    out << "k";
    for (auto const& column : table1_columns()) {
      out << ',' << column.name;
    }
    out << '\n';
    for (auto const& report : reports) {
      out << report.k;
      for (auto const& column : table1_columns()) {
        out << ',';
        for (auto const& field : count_fields()) {
          if (std::string_view(field.name) == column.name
              && (report.*field.member)) {
            out << (report.*field.member)->str();
          }
        }
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace qsemi
