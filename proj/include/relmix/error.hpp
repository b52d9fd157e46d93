#pragma once

#include <stdexcept>
#include <string>

#include "relmix/numeric.hpp"

namespace relmix {

// Coarse failure categories, mirrored by the C API status codes and the CLI
// exit-code discipline (input error, search cap, oracle mismatch, violated
// internal identity).
enum class ErrorKind {
  Input,
  SearchTooLarge,
  OracleMismatch,
  Consistency,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ZeroVector : Error {
  explicit ZeroVector(const std::string& m = "zero vector")
      : Error(ErrorKind::Input, m) {}
};

struct NotPrimitive : Error {
  explicit NotPrimitive(const std::string& m = "covector is not primitive")
      : Error(ErrorKind::Input, m) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m = "dimension mismatch")
      : Error(ErrorKind::Input, m) {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& m = "argument count mismatch")
      : Error(ErrorKind::Input, m) {}
};

struct NotParallel : Error {
  explicit NotParallel(const std::string& m =
                           "polytope is not parallel to the given hyperplane")
      : Error(ErrorKind::Input, m) {}
};

struct NonPositiveLeg : Error {
  explicit NonPositiveLeg(const std::string& m = "simplex leg must be >= 1")
      : Error(ErrorKind::Input, m) {}
};

struct NonPositiveCovector : Error {
  explicit NonPositiveCovector(
      const std::string& m = "covector entries must be strictly positive")
      : Error(ErrorKind::Input, m) {}
};

struct NegativeCoordinate : Error {
  explicit NegativeCoordinate(const std::string& m = "negative coordinate")
      : Error(ErrorKind::Input, m) {}
};

struct UnboundedComplement : Error {
  explicit UnboundedComplement(
      const std::string& m =
          "unbounded complement: some coordinate axis carries no generator")
      : Error(ErrorKind::Input, m) {}
};

struct VolumeMismatch : Error {
  explicit VolumeMismatch(const std::string& m =
                              "tuple volume does not match the stated value")
      : Error(ErrorKind::Input, m) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(ErrorKind::Input, m) {}
};

struct SearchTooLarge : Error {
  explicit SearchTooLarge(const std::string& m = "search space exceeds cap")
      : Error(ErrorKind::SearchTooLarge, m) {}
};

// The two independent mixed-volume algorithms disagreed. Carries both values;
// the message includes the offending tuple.
struct OracleMismatch : Error {
  OracleMismatch(Int ie, Int support, const std::string& m)
      : Error(ErrorKind::OracleMismatch, m),
        ie_value(std::move(ie)),
        support_value(std::move(support)) {}

  Int ie_value;
  Int support_value;
};

// A verified identity failed on concrete data; indicates an implementation
// bug, never an expected outcome.
struct ConsistencyViolation : Error {
  explicit ConsistencyViolation(const std::string& m)
      : Error(ErrorKind::Consistency, m) {}
};

}  // namespace relmix
