#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jwg {

/// Raised when a raw operator pattern matches none of the supported term
/// families (e.g. a repeated creation index, or an interleaved four-index
/// pattern that cannot be brought to creations-below-annihilations order).
struct UnclassifiableTerm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  std::size_t line;
};

struct WidthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DiagonalTermNotGadgetizable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InsufficientDirtyAncillae : std::invalid_argument {
  InsufficientDirtyAncillae(int required_count, int available_count)
      : std::invalid_argument("multi-controlled Z needs " + std::to_string(required_count) +
                              " dirty ancillae, only " + std::to_string(available_count) +
                              " available"),
        required(required_count),
        available(available_count) {}
  int required;
  int available;
};

struct RegisterTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonUnitary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace jwg
