#include "netclust/error.hpp"

namespace netclust {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::NonPositiveOffDiagonal: return "NonPositiveOffDiagonal";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::SingletonNetwork: return "SingletonNetwork";
    case ErrorCode::InvalidDendrogram: return "InvalidDendrogram";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUltrametric: return "NotUltrametric";
    case ErrorCode::InvalidHopBound: return "InvalidHopBound";
    case ErrorCode::RepresenterTooLarge: return "RepresenterTooLarge";
    case ErrorCode::NotWeaklyConnected: return "NotWeaklyConnected";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::InvalidRepresenter: return "InvalidRepresenter";
    case ErrorCode::InvalidCorrespondence: return "InvalidCorrespondence";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotDissimilarityReducing: return "NotDissimilarityReducing";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroColumnSum: return "ZeroColumnSum";
    case ErrorCode::NegativeSimilarity: return "NegativeSimilarity";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace netclust
