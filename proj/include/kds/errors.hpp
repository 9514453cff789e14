#pragma once

#include <stdexcept>
#include <string>

namespace kds {

/// Base class for all engine errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct IdenticallyZeroError : Error {
  IdenticallyZeroError() : Error("polynomial is identically zero") {}
};

struct CoincidentPointsError : Error {
  explicit CoincidentPointsError(const std::string& w = "coincident points") : Error(w) {}
};

struct TooFewPointsError : Error {
  explicit TooFewPointsError(const std::string& w = "too few points") : Error(w) {}
};

struct DegenerateInputError : Error {
  explicit DegenerateInputError(const std::string& w) : Error(w) {}
};

struct DegeneracyError : Error {
  explicit DegeneracyError(const std::string& w) : Error(w) {}
};

struct UnknownCertificateError : Error {
  explicit UnknownCertificateError(const std::string& w = "unknown certificate") : Error(w) {}
};

struct DuplicateIdError : Error {
  explicit DuplicateIdError(const std::string& w = "duplicate id") : Error(w) {}
};

struct UnknownIdError : Error {
  explicit UnknownIdError(const std::string& w = "unknown id") : Error(w) {}
};

struct InconsistentStateError : Error {
  explicit InconsistentStateError(const std::string& w) : Error(w) {}
};

struct HandlerFailureError : Error {
  explicit HandlerFailureError(const std::string& w) : Error(w) {}
};

struct AuditFailureError : Error {
  explicit AuditFailureError(const std::string& w) : Error(w) {}
};

struct DisconnectedError : Error {
  explicit DisconnectedError(const std::string& w = "vertices in different trees") : Error(w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};

}  // namespace kds
