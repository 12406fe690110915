#include "qsemi/cli.hpp"

#include <algorithm>  // for reverse
#include <charconv>   // for from_chars
#include <cstdlib>    // for getenv
#include <fstream>    // for ifstream
#include <iomanip>    // for setw
#include <iostream>   // for cin
#include <iterator>   // for istreambuf_iterator
#include <sstream>    // for ostringstream

#include <CLI11.hpp>

#include "qsemi/analysis.hpp"
#include "qsemi/counting.hpp"
#include "qsemi/enumeration.hpp"
#include "qsemi/error.hpp"
#include "qsemi/io.hpp"
#include "qsemi/orderings.hpp"
#include "qsemi/reduction.hpp"

namespace qsemi {

  namespace {
    int exit_code_for(ErrorKind kind) {
      switch (kind) {
        case ErrorKind::cost_limit_exceeded:
          return exit_code::cost_limit;
        case ErrorKind::not_associative_quasitrivial:
        case ErrorKind::not_quasitrivial:
        case ErrorKind::not_reducible:
        case ErrorKind::not_a_neutral_element:
        case ErrorKind::internal_contradiction:
          return exit_code::violated;
        default:
          return exit_code::usage;
      }
    }

    std::string read_input(std::string const& path) {
      if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
      }
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        raise(ErrorKind::parse_error, "cannot read '" + path + "'");
      }
      return std::string(std::istreambuf_iterator<char>(in), {});
    }

    std::uint64_t default_budget() {
      char const* env = std::getenv("COST_BUDGET");
      if (env == nullptr || *env == '\0') {
        return default_enumeration_budget;
      }
      std::uint64_t     value = 0;
      std::string const text(env);
      auto const [end, ec]
          = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || end != text.data() + text.size()) {
        raise(ErrorKind::parse_error,
              "COST_BUDGET must be a nonnegative integer, got '" + text + "'");
      }
      return value;
    }

    struct CheckArgs {
      std::string file;
      bool        fast        = false;
      bool        naive       = false;
      bool        json        = false;
      bool        verify      = false;
      bool        bisymmetric = false;
    };

    int cmd_check(CheckArgs const& a, std::ostream& out, std::ostream& err) {
      auto const      table = parse_table(read_input(a.file));
      AnalysisOptions options;
      options.method      = a.naive ? AssociativityMethod::naive
                                    : AssociativityMethod::fast;
      options.cross_check = a.verify;
      options.bisymmetry  = a.bisymmetric;
      auto const report   = analyze(table, options);
      if (a.json) {
        out << to_json(report).dump() << '\n';
      } else {
        out << format_report(report);
      }
      if (report.methods_agree && !*report.methods_agree) {
        err << "fast and naive associativity checks disagree\n";
        return exit_code::violated;
      }
      return exit_code::ok;
    }

    struct ReduceArgs {
      std::string file;
      bool        all     = false;
      bool        ternary = false;
      int         neutral = 0;
    };

    int cmd_reduce(ReduceArgs const& a, std::ostream& out, std::ostream& err) {
      auto const table = parse_table(read_input(a.file));
      if (table.arity() < 2 || !is_quasitrivial(table)
          || !is_associative_fast(table)) {
        err << "input is not an associative quasitrivial operation\n";
        return exit_code::violated;
      }
      if (a.ternary) {
        out << format_table(ternary_reduction(table), "ternary reduction");
        return exit_code::ok;
      }
      if (a.neutral != 0) {
        if (a.neutral < 1 || a.neutral > static_cast<int>(table.carrier_size())) {
          raise(ErrorKind::value_out_of_range,
                "--neutral " + std::to_string(a.neutral) + " outside [1.."
                    + std::to_string(table.carrier_size()) + "]");
        }
        auto const e = static_cast<Element>(a.neutral - 1);
        out << format_table(reduction_from_neutral(table, e),
                            "origin=neutral e=" + std::to_string(a.neutral));
        return exit_code::ok;
      }
      auto const set   = all_binary_reductions(table);
      bool       first = true;
      for (auto const& r : set.reductions) {
        if (!first) {
          out << "---\n";
        }
        first = false;
        std::string tag
            = r.origin == ReductionOrigin::from_neutral
                  ? "origin=neutral e=" + std::to_string(*r.neutral + 1)
                  : std::string("origin=candidate");
        out << format_table(r.table, tag);
      }
      return exit_code::ok;
    }

    struct CountArgs {
      std::size_t                  k = 0;
      std::size_t                  n = 0;
      bool                         formula = false;
      bool                         brute   = false;
      bool                         both    = false;
      bool                         json    = false;
      bool                         csv     = false;
      std::string                  oracle  = "naive";
      bool                         no_prune = false;
      std::optional<std::uint64_t> budget;
    };

    int cmd_count(CountArgs const& a, std::ostream& out, std::ostream& err) {
      if (a.k < 1 || a.n < 2) {
        raise(ErrorKind::arity_or_size_invalid, "count needs k >= 1 and n >= 2");
      }
      bool const want_formula = a.formula || a.both || !a.brute;
      bool const want_brute   = a.brute || a.both;

      std::vector<CountsReport> reports;
      if (want_formula) {
        auto r  = formula_counts(a.k, parity_of(a.n));
        r.arity = a.n;
        reports.push_back(std::move(r));
      }
      if (want_brute) {
        BruteOptions options;
        options.oracle = a.oracle == "fast" ? Oracle::fast : Oracle::naive;
        options.prune  = !a.no_prune;
        options.budget = a.budget.value_or(default_budget());
        auto const counts = brute_count(a.k, a.n, options);
        if (a.n == 2) {
          auto const a12 = brute_count_a12(a.k, options.budget);
          reports.push_back(to_counts_report(counts, &a12));
        } else {
          reports.push_back(to_counts_report(counts));
        }
      }

      std::vector<std::string> mismatches;
      if (a.both) {
        for (auto const& field : count_fields()) {
          auto const& brute   = reports[1].*field.member;
          auto const& formula = reports[0].*field.member;
          if (brute && formula && *brute != *formula) {
            mismatches.push_back(std::string(field.name) + ": formula "
                                 + formula->str() + ", brute force "
                                 + brute->str());
          }
        }
      }

      if (a.csv) {
        out << counts_csv(reports);
      } else if (a.json) {
        if (a.both) {
          nlohmann::json j{{"schema", 1},
                           {"formula", to_json(reports[0])},
                           {"brute_force", to_json(reports[1])},
                           {"match", mismatches.empty()}};
          out << j.dump() << '\n';
        } else {
          out << to_json(reports.front()).dump() << '\n';
        }
      } else {
        for (auto const& r : reports) {
          out << format_counts(r);
        }
        if (a.both) {
          out << "match: " << (mismatches.empty() ? "yes" : "no") << '\n';
        }
      }
      for (auto const& m : mismatches) {
        err << "mismatch " << m << '\n';
      }
      return mismatches.empty() ? exit_code::ok : exit_code::violated;
    }

    struct EnumerateArgs {
      std::optional<std::size_t>    binary;
      std::vector<std::size_t>      qt;
      std::optional<std::uint64_t>  limit;
      std::optional<std::uint64_t>  budget;
    };

    int cmd_enumerate(EnumerateArgs const& a, std::ostream& out) {
      std::uint64_t const limit   = a.limit.value_or(UINT64_MAX);
      std::uint64_t       emitted = 0;
      auto const emit = [&](OperationTable const& table) {
        if (emitted > 0) {
          out << "---\n";
        }
        out << format_table(table);
        ++emitted;
      };
      if (a.binary) {
        for (auto const& table : generate_quasitrivial_associative_binary(*a.binary)) {
          if (emitted == limit) {
            break;
          }
          emit(table);
        }
        return exit_code::ok;
      }
      QuasitrivialTables stream(a.qt[0], a.qt[1], a.budget.value_or(default_budget()));
      do {
        if (emitted == limit) {
          break;
        }
        emit(stream.table());
      } while (stream.next());
      return exit_code::ok;
    }

    struct VerifyArgs {
      bool        json = false;
      std::string fault;
    };

    int cmd_verify_table1(VerifyArgs const& a, std::ostream& out,
                          std::ostream& err) {
      std::optional<std::pair<std::size_t, std::string>> fault;
      if (!a.fault.empty()) {
        auto const colon = a.fault.find(':');
        if (colon == std::string::npos) {
          raise(ErrorKind::parse_error, "--inject-fault expects K:COLUMN");
        }
        fault.emplace(std::stoul(a.fault.substr(0, colon)),
                      a.fault.substr(colon + 1));
      }
      auto const cells = verify_table1(fault);
      bool       all   = true;
      if (a.json) {
        out << to_json(cells).dump() << '\n';
      } else {
        out << std::left << std::setw(4) << "k" << std::setw(7) << "column"
            << std::right << std::setw(10) << "expected" << std::setw(10)
            << "computed" << "  status\n";
      }
      for (auto const& cell : cells) {
        all &= cell.matches();
        if (!a.json) {
          out << std::left << std::setw(4) << cell.k << std::setw(7)
              << cell.column << std::right << std::setw(10) << cell.expected
              << std::setw(10) << cell.computed.str() << "  "
              << (cell.matches() ? "ok" : "MISMATCH") << '\n';
        }
        if (!cell.matches()) {
          err << "mismatch at k=" << cell.k << " column " << cell.column
              << ": expected " << cell.expected << ", computed "
              << cell.computed.str() << '\n';
        }
      }
      return all ? exit_code::ok : exit_code::violated;
    }

    struct ContourArgs {
      std::string file;
      bool        dot  = false;
      bool        grid = false;
      std::string order;
    };

    std::string tuple_label(OperationTable const& table, std::size_t index) {
      std::vector<Element> tuple(table.arity());
      table.decode(index, tuple);
      std::string label;
      for (std::size_t p = 0; p < tuple.size(); ++p) {
        label += (p ? "," : "") + std::to_string(tuple[p] + 1);
      }
      return label;
    }

    int cmd_contour(ContourArgs const& a, std::ostream& out) {
      auto const table = parse_table(read_input(a.file));
      if (a.grid) {
        if (table.arity() != 2) {
          raise(ErrorKind::arity_mismatch,
                "--grid needs a binary table, got n=" + std::to_string(table.arity()));
        }
        std::size_t const    k = table.carrier_size();
        std::vector<Element> order(k);
        for (std::size_t x = 0; x < k; ++x) {
          order[x] = static_cast<Element>(x);
        }
        if (!a.order.empty()) {
          order = parse_weak_ordering(a.order, k).elements_in_order();
        }
        for (Element x : order) {
          for (std::size_t j = 0; j < k; ++j) {
            out << (j ? " " : "") << int(table.value(x * k + order[j])) + 1;
          }
          out << '\n';
        }
        return exit_code::ok;
      }
      auto const partition = contour_components(table);
      out << "graph contour {\n";
      for (auto const& c : partition.classes) {
        out << "  subgraph cluster_" << int(c.value) + 1 << " {\n"
            << "    label=\"" << int(c.value) + 1 << "\";\n";
        for (auto index : c.tuples) {
          out << "    \"" << tuple_label(table, index) << "\";\n";
        }
        for (std::size_t i = 1; i < c.tuples.size(); ++i) {
          out << "    \"" << tuple_label(table, c.tuples[i - 1]) << "\" -- \""
              << tuple_label(table, c.tuples[i]) << "\";\n";
        }
        out << "  }\n";
      }
      out << "}\n";
      return exit_code::ok;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err) {
    CLI::App app{"Quasitrivial n-ary semigroups on finite sets", "qsemi"};
    app.require_subcommand(1);

    CheckArgs check;
    auto*     check_cmd = app.add_subcommand("check", "analyze a table file");
    check_cmd->add_option("file", check.file, "table file, or - for stdin")->required();
    auto* fast = check_cmd->add_flag("--fast", check.fast, "fast associativity test (default)");
    auto* naive = check_cmd->add_flag("--naive", check.naive, "exhaustive associativity test");
    fast->excludes(naive);
    check_cmd->add_flag("--json", check.json, "JSON output");
    check_cmd->add_flag("--verify", check.verify, "also run the other test and compare");
    check_cmd->add_flag("--bisymmetric", check.bisymmetric, "also test bisymmetry");

    ReduceArgs reduce;
    auto*      reduce_cmd = app.add_subcommand("reduce", "binary or ternary reductions");
    reduce_cmd->add_option("file", reduce.file)->required();
    auto* all     = reduce_cmd->add_flag("--all", reduce.all, "every binary reduction (default)");
    auto* ternary = reduce_cmd->add_flag("--ternary", reduce.ternary, "the ternary reduction");
    auto* neutral = reduce_cmd->add_option("--neutral", reduce.neutral,
                                           "the reduction induced by neutral element e");
    all->excludes(ternary)->excludes(neutral);
    ternary->excludes(neutral);

    CountArgs count;
    auto*     count_cmd = app.add_subcommand("count", "counts by formula and brute force");
    count_cmd->add_option("K", count.k)->required();
    count_cmd->add_option("N", count.n)->required();
    auto* formula = count_cmd->add_flag("--formula", count.formula, "closed forms (default)");
    auto* brute   = count_cmd->add_flag("--brute", count.brute, "exhaustive search");
    auto* both    = count_cmd->add_flag("--both", count.both, "both, exit 1 on mismatch");
    formula->excludes(brute)->excludes(both);
    brute->excludes(both);
    auto* json = count_cmd->add_flag("--json", count.json);
    auto* csv  = count_cmd->add_flag("--csv", count.csv);
    json->excludes(csv);
    count_cmd->add_option("--oracle", count.oracle, "naive or fast")
        ->check(CLI::IsMember({"naive", "fast"}));
    count_cmd->add_flag("--no-prune", count.no_prune, "test every quasitrivial table");
    count_cmd->add_option("--budget", count.budget, "maximum number of tables");

    EnumerateArgs enumerate;
    auto*         enumerate_cmd = app.add_subcommand("enumerate", "stream tables");
    auto* binary_opt = enumerate_cmd->add_option(
        "--binary-assoc-qt", enumerate.binary,
        "associative quasitrivial binary tables on [K]");
    auto* qt_opt = enumerate_cmd->add_option("--qt", enumerate.qt,
                                             "quasitrivial tables on [K]^N")
                       ->expected(2);
    binary_opt->excludes(qt_opt);
    enumerate_cmd->add_option("--limit", enumerate.limit, "stop after M tables");
    enumerate_cmd->add_option("--budget", enumerate.budget, "maximum number of tables");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify-table1",
                                          "recompute the reference table of counts");
    verify_cmd->add_flag("--json", verify.json);
    verify_cmd->add_option("--inject-fault", verify.fault)->group("");

    ContourArgs contour;
    auto*       contour_cmd = app.add_subcommand("contour", "kernel classes of a table");
    contour_cmd->add_option("file", contour.file)->required();
    auto* dot  = contour_cmd->add_flag("--dot", contour.dot, "DOT graph");
    auto* grid = contour_cmd->add_flag("--grid", contour.grid, "value grid (n = 2)");
    dot->excludes(grid);
    contour_cmd->add_option("--order", contour.order,
                            "row/column order for --grid, e.g. '2 < 1 ~ 3'")
        ->needs(grid);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_code::ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_code::ok;
    } catch (CLI::ParseError const& e) {
      err << e.what() << '\n';
      return exit_code::usage;
    }

    try {
      if (*check_cmd) {
        return cmd_check(check, out, err);
      }
      if (*reduce_cmd) {
        return cmd_reduce(reduce, out, err);
      }
      if (*count_cmd) {
        return cmd_count(count, out, err);
      }
      if (*enumerate_cmd) {
        if (!enumerate.binary && enumerate.qt.empty()) {
          err << "enumerate needs --binary-assoc-qt K or --qt K N\n";
          return exit_code::usage;
        }
        return cmd_enumerate(enumerate, out);
      }
      if (*verify_cmd) {
        return cmd_verify_table1(verify, out, err);
      }
      if (*contour_cmd) {
        if (!contour.dot && !contour.grid) {
          err << "contour needs --dot or --grid\n";
          return exit_code::usage;
        }
        return cmd_contour(contour, out);
      }
    } catch (Error const& e) {
      err << e.what() << '\n';
      return exit_code_for(e.kind());
    } catch (std::exception const& e) {
      err << e.what() << '\n';
      return exit_code::usage;
    }
    return exit_code::usage;
  }

}  // namespace qsemi
