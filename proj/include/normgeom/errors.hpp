#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace normgeom {

enum class ErrorCode {
  Syntax,
  Domain,
  InvalidInput,
  NotClosed,
  NotSymmetric,
  NotConvex,
  DegeneratePiece,
  DegenerateDual,
  UnknownBuiltin,
  NotAdmissible,
  NoConvergence,
  MismatchedBalls,
  DecompositionResidual,
  NotConvexInput,
  DegenerateIntersection,
  EmbeddingFailed,
};

// Stable identifier used in diagnostics and JSON ("NotClosed", ...).
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorCode::Domain, message) {}
};

}  // namespace normgeom
