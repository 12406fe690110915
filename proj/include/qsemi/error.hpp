#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsemi {

  enum class ErrorKind {
    length_mismatch,
    value_out_of_range,
    arity_or_size_invalid,
    tuple_arity_mismatch,
    arity_too_small,
    arity_mismatch,
    even_target_arity,
    cost_limit_exceeded,
    not_a_permutation,
    not_a_neutral_element,
    not_reducible,
    not_associative_quasitrivial,
    not_quasitrivial,
    partial_operation,
    invalid_ordering,
    invalid_spec,
    precondition_violated,
    internal_contradiction,
    domain_error,
    parse_error,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  //! Every failure raised by the library carries one of the kinds above so
  //! that callers (the CLI in particular) can map it to an exit status.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what);

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] void raise(ErrorKind kind, std::string const& message);

}  // namespace qsemi
