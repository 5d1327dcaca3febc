#include "hbm/error.hpp"

namespace hbm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidUniformity: return "INVALID_UNIFORMITY";
    case ErrorCode::NonUniformEdge: return "NON_UNIFORM_EDGE";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::DuplicateBVertex: return "DUPLICATE_B_VERTEX";
    case ErrorCode::DuplicateEdge: return "DUPLICATE_EDGE";
    case ErrorCode::NotAddable: return "NOT_ADDABLE";
    case ErrorCode::NotInMatching: return "NOT_IN_MATCHING";
    case ErrorCode::AlreadyInMatching: return "ALREADY_IN_MATCHING";
    case ErrorCode::AVertexMismatch: return "A_VERTEX_MISMATCH";
    case ErrorCode::Overlap: return "OVERLAP";
    case ErrorCode::Unmatched: return "UNMATCHED";
    case ErrorCode::InstanceTooLarge: return "INSTANCE_TOO_LARGE";
    case ErrorCode::UnhitEdge: return "UNHIT_EDGE";
    case ErrorCode::SizeExceedsBound: return "SIZE_EXCEEDS_BOUND";
    case ErrorCode::IterationCapExceeded: return "ITERATION_CAP_EXCEEDED";
    case ErrorCode::CertificateInvalid: return "CERTIFICATE_INVALID";
    case ErrorCode::LogOfZero: return "LOG_OF_ZERO";
    case ErrorCode::InvalidParameters: return "INVALID_PARAMETERS";
    case ErrorCode::RootMatched: return "ROOT_MATCHED";
    case ErrorCode::XInMatching: return "X_IN_MATCHING";
    case ErrorCode::XNotDisjoint: return "X_NOT_DISJOINT";
    case ErrorCode::YNotInMatching: return "Y_NOT_IN_MATCHING";
    case ErrorCode::YNotBlockers: return "Y_NOT_BLOCKERS";
    case ErrorCode::YIntersectsMultipleX: return "Y_INTERSECTS_MULTIPLE_X";
    case ErrorCode::XParentMissing: return "X_PARENT_MISSING";
    case ErrorCode::CrossLayerBOverlap: return "CROSS_LAYER_B_OVERLAP";
    case ErrorCode::DegreeBoundExceeded: return "DEGREE_BOUND_EXCEEDED";
    case ErrorCode::AInMultipleBlocking: return "A_IN_MULTIPLE_BLOCKING";
    case ErrorCode::CounterMismatch: return "COUNTER_MISMATCH";
    case ErrorCode::InfeasibleSpec: return "INFEASIBLE_SPEC";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

std::string Violation::message() const {
  std::string out(to_string(code));
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(Violation{code, detail}.message()), code_(code) {}

}  // namespace hbm
