#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace lig {

using LineId = std::uint32_t;
using PointId = std::uint32_t;

inline constexpr LineId kNoLine = std::numeric_limits<LineId>::max();
inline constexpr PointId kNoPoint = std::numeric_limits<PointId>::max();

enum class SpaceKind : std::uint8_t { Projective, Affine };

inline const char* to_string(SpaceKind k) {
  return k == SpaceKind::Projective ? "projective" : "affine";
}

enum class ErrorCode {
  NonPrimeField,
  DimensionTooSmall,
  ModelTooLarge,
  InvalidId,
  EmptyList,
  WrongClass,
  NotIntersecting,
  ParseError,
  AsymmetricAdjacency,
  WrongDimension,
  GuardMismatch,
  UnresolvedPredRef,
  UnboundVariable,
  NoWitness,
  Usage,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lig
