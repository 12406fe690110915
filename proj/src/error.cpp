#include "qsemi/error.hpp"

namespace qsemi {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::length_mismatch:
        return "LengthMismatch";
      case ErrorKind::value_out_of_range:
        return "ValueOutOfRange";
      case ErrorKind::arity_or_size_invalid:
        return "ArityOrSizeInvalid";
      case ErrorKind::tuple_arity_mismatch:
        return "TupleArityMismatch";
      case ErrorKind::arity_too_small:
        return "ArityTooSmall";
      case ErrorKind::arity_mismatch:
        return "ArityMismatch";
      case ErrorKind::even_target_arity:
        return "EvenTargetArity";
      case ErrorKind::cost_limit_exceeded:
        return "CostLimitExceeded";
      case ErrorKind::not_a_permutation:
        return "NotAPermutation";
      case ErrorKind::not_a_neutral_element:
        return "NotANeutralElement";
      case ErrorKind::not_reducible:
        return "NotReducible";
      case ErrorKind::not_associative_quasitrivial:
        return "NotAssociativeQuasitrivial";
      case ErrorKind::not_quasitrivial:
        return "NotQuasitrivial";
      case ErrorKind::partial_operation:
        return "PartialOperation";
      case ErrorKind::invalid_ordering:
        return "InvalidOrdering";
      case ErrorKind::invalid_spec:
        return "InvalidSpec";
      case ErrorKind::precondition_violated:
        return "PreconditionViolated";
      case ErrorKind::internal_contradiction:
        return "InternalContradiction";
      case ErrorKind::domain_error:
        return "DomainError";
      case ErrorKind::parse_error:
        return "ParseError";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind) {}

  void raise(ErrorKind kind, std::string const& message) {
    throw Error(kind, message);
  }

}  // namespace qsemi
