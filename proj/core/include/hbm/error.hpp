#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hbm {

enum class ErrorCode {
  // instance validation
  InvalidUniformity,
  NonUniformEdge,
  IndexOutOfRange,
  DuplicateBVertex,
  DuplicateEdge,
  // matchings
  NotAddable,
  NotInMatching,
  AlreadyInMatching,
  AVertexMismatch,
  Overlap,
  Unmatched,
  // oracles and certificates
  InstanceTooLarge,
  UnhitEdge,
  SizeExceedsBound,
  // engine
  IterationCapExceeded,
  CertificateInvalid,
  LogOfZero,
  InvalidParameters,
  // alternating trees
  RootMatched,
  XInMatching,
  XNotDisjoint,
  YNotInMatching,
  YNotBlockers,
  YIntersectsMultipleX,
  XParentMissing,
  CrossLayerBOverlap,
  DegreeBoundExceeded,
  AInMultipleBlocking,
  CounterMismatch,
  // generators and files
  InfeasibleSpec,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// A failed check, naming the rule that broke and where.
struct Violation {
  ErrorCode code;
  std::string detail;

  std::string message() const;
};

/// Result of a validation routine: nullopt means every check passed.
using Report = std::optional<Violation>;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  explicit Error(const Violation& v) : Error(v.code, v.detail) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hbm
