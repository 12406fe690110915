#pragma once

// The qsemi command line, callable in-process.
//
// Exit status: 0 success, 1 property violated or mismatch, 2 usage or input
// error, 3 cost limit exceeded.

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace qsemi {

  namespace exit_code {
    inline constexpr int ok         = 0;
    inline constexpr int violated   = 1;
    inline constexpr int usage      = 2;
    inline constexpr int cost_limit = 3;
  }  // namespace exit_code

  //! args excludes the program name. A COST_BUDGET environment variable
  //! replaces the default enumeration budget; --budget overrides both.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

}  // namespace qsemi
