#pragma once

#include <stdexcept>
#include <string>

namespace coquasi {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct Singular : Error {
  Singular() : Error("matrix is singular") {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& what) : Error(what) {}
};

struct CostExceeded : Error {
  explicit CostExceeded(std::size_t ceiling)
      : Error("term-count ceiling of " + std::to_string(ceiling) + " exceeded") {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct UnknownBasisLabel : Error {
  explicit UnknownBasisLabel(const std::string& label)
      : Error("unknown basis label '" + label + "'") {}
};

struct MissingAntipodeData : Error {
  MissingAntipodeData() : Error("instance has no antipode/alpha/beta data") {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct NotProportional : Error {
  explicit NotProportional(const std::string& what) : Error(what) {}
};

struct NotGrouplike : Error {
  explicit NotGrouplike(const std::string& what) : Error(what) {}
};

struct MissingLeftInverse : Error {
  MissingLeftInverse() : Error("antipode is not injective; no left inverse exists") {}
};

struct UnsupportedCharacteristic : Error {
  explicit UnsupportedCharacteristic(const std::string& what) : Error(what) {}
};

struct UnknownTarget : Error {
  explicit UnknownTarget(const std::string& target)
      : Error("unknown mutation target '" + target + "'") {}
};

struct UnboundName : Error {
  explicit UnboundName(const std::string& name)
      : Error("name '" + name + "' is not bound") {}
};

/// Parse error carrying a 1-based source position.
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(int line_, int column_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
              ": " + msg),
        line(line_),
        column(column_) {}
};

struct SubscriptGap : SyntaxError {
  using SyntaxError::SyntaxError;
};

struct DuplicateSubscript : SyntaxError {
  using SyntaxError::SyntaxError;
};

struct MixedResultKind : SyntaxError {
  using SyntaxError::SyntaxError;
};

struct AmbiguousProduct : SyntaxError {
  using SyntaxError::SyntaxError;
};

}  // namespace coquasi
