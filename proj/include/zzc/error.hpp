#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zzc {

enum class ErrorCode {
  InvalidInput,
  InvalidField,
  ShapeMismatch,
  SubspaceNotContained,
  DisconnectedDiagram,
  DuplicatePoint,
  NotAnEdge,
  NotAVertex,
  InvalidStratum,
  NonMonotoneBlocks,
  NonMonotoneFilter,
  MissingFace,
  DimensionTooHigh,
  IncompatibleIndexFiltration,
  LineMismatch,
  InvalidMap,
  PointNotInEdge,
  TooLarge,
  NoIntervalDecomposition,
  NonInjectiveMap,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code distinguishes the error classes named by the public contracts.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  // 1-based input line for parse errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace zzc
