#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netclust {

// Every failure the library reports carries one of these codes so callers
// (and the CLI exit-code mapping) can react without parsing messages.
enum class ErrorCode {
  // network validation
  NonZeroDiagonal,
  NonPositiveOffDiagonal,
  NonFinite,
  DuplicateLabel,
  ShapeMismatch,
  NonPositiveScale,
  UnknownLabel,
  EmptySubset,
  SingletonNetwork,
  InvalidDendrogram,
  // minimax / methods
  NotSymmetric,
  NotUltrametric,
  InvalidHopBound,
  // representable
  RepresenterTooLarge,
  NotWeaklyConnected,
  EmptyFamily,
  NonPositiveWeight,
  InvalidSize,
  InvalidRepresenter,
  // metric
  InvalidCorrespondence,
  InstanceTooLarge,
  // properties
  NotDissimilarityReducing,
  UnknownProperty,
  // ingestion / CLI
  ParseError,
  ZeroColumnSum,
  NegativeSimilarity,
  UnknownMethod,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace netclust
