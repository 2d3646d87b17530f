#ifndef ROOTFACE_ERROR_HPP
#define ROOTFACE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rootface {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  DirectedCycle,
  EdgeNotInParent,
  MalformedInput,
  NotAlternating,
  NotConnected,
  NotTransitivelyClosed,
  OverlappingParts,
  NotAFace,
  NotAdmissible,
  NotASubsetOfVertices,
  EmptySet,
  TooLarge,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DirectedCycle: return "DirectedCycle";
    case ErrorCode::EdgeNotInParent: return "EdgeNotInParent";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotTransitivelyClosed: return "NotTransitivelyClosed";
    case ErrorCode::OverlappingParts: return "OverlappingParts";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotASubsetOfVertices: return "NotASubsetOfVertices";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rootface

#endif  // ROOTFACE_ERROR_HPP
