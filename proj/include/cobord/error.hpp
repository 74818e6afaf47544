#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cobord {

enum class Errc {
  malformed_input,
  not_a_complex,
  unknown_name,
  negative_parameter,
  dimension_mismatch,
  non_orientable_operand,
  disconnected_operand,
  even_dimension,
  not_spin,
  unsupported_dimension,
  even_boundary_dimension,
  no_solution,
  not_stably_parallelizable_boundary,
  odd_difference,
  not_positive_definite,
  zero_vector,
  degenerate_basis,
  wrong_signature,
  syntax_error,
  unknown_atom,
  invalid_argument,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
  case Errc::malformed_input: return "MalformedInput";
  case Errc::not_a_complex: return "NotAComplex";
  case Errc::unknown_name: return "UnknownName";
  case Errc::negative_parameter: return "NegativeParameter";
  case Errc::dimension_mismatch: return "DimensionMismatch";
  case Errc::non_orientable_operand: return "NonOrientableOperand";
  case Errc::disconnected_operand: return "DisconnectedOperand";
  case Errc::even_dimension: return "EvenDimension";
  case Errc::not_spin: return "NotSpin";
  case Errc::unsupported_dimension: return "UnsupportedDimension";
  case Errc::even_boundary_dimension: return "EvenBoundaryDimension";
  case Errc::no_solution: return "NoSolution";
  case Errc::not_stably_parallelizable_boundary: return "NotStablyParallelizableBoundary";
  case Errc::odd_difference: return "OddDifference";
  case Errc::not_positive_definite: return "NotPositiveDefinite";
  case Errc::zero_vector: return "ZeroVector";
  case Errc::degenerate_basis: return "DegenerateBasis";
  case Errc::wrong_signature: return "WrongSignature";
  case Errc::syntax_error: return "SyntaxError";
  case Errc::unknown_atom: return "UnknownAtom";
  case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

/// Every failure surfaced by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Parser failure; `position` is a 0-based byte offset into the input text.
class PositionedError : public Error {
public:
  PositionedError(Errc code, std::size_t position, const std::string& message)
      : Error(code, message + " at position " + std::to_string(position)),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace cobord
