#pragma once

// Text and JSON forms of tables, weak orderings and reports.
//
// Table text: a `k n` line followed by k^n values in [1..k] in index order
// (last coordinate fastest). Lines starting with `#` are comments; a `---`
// line separates consecutive tables in a stream.

#include <iosfwd>       // for ostream
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include <json.hpp>

#include "qsemi/analysis.hpp"
#include "qsemi/counting.hpp"
#include "qsemi/orderings.hpp"
#include "qsemi/table.hpp"

namespace qsemi {

  //! Throws ParseError on malformed text, or the make_table errors.
  std::vector<OperationTable> parse_tables(std::string_view text);
  //! Exactly one table; throws ParseError otherwise.
  OperationTable parse_table(std::string_view text);

  //! One row of k values per line, preceded by the `k n` line and an
  //! optional `# comment` line.
  std::string format_table(OperationTable const& table,
                           std::string_view      comment = {});

  //! `2 < 4 < 3 ~ 1`: blocks from least to greatest. Throws InvalidOrdering.
  WeakOrdering parse_weak_ordering(std::string_view text, std::size_t k);
  std::string  format_weak_ordering(WeakOrdering const& w);

  //! Small values as JSON numbers, larger ones as decimal strings.
  nlohmann::json to_json(BigInt const& value);

  nlohmann::json to_json(AnalysisReport const& report);
  nlohmann::json to_json(CountsReport const& report);
  nlohmann::json to_json(std::vector<Table1Cell> const& cells);

  //! Fixed-width text versions of the same reports.
  std::string format_report(AnalysisReport const& report);
  std::string format_counts(CountsReport const& report);

  //! Reference table column order: k,q2,q2_1,qn_0,qn_2,qn,a2_1. Missing values are
  //! left blank.
  std::string counts_csv(std::vector<CountsReport> const& reports);

  std::string to_string(BigInt const& value);

}  // namespace qsemi
