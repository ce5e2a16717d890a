#include "trimap/error.hpp"

namespace trimap {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::CoincidentVertices: return "CoincidentVertices";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NotOnPlaneA: return "NotOnPlaneA";
    case ErrorCode::NotInFundamentalDomain: return "NotInFundamentalDomain";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::NoCycleWithinBound: return "NoCycleWithinBound";
    case ErrorCode::PartitionCountMismatch: return "PartitionCountMismatch";
    case ErrorCode::EdgeNotOnReflectionLine: return "EdgeNotOnReflectionLine";
    case ErrorCode::NotTypeI: return "NotTypeI";
    case ErrorCode::DegenerateFactor: return "DegenerateFactor";
    case ErrorCode::FactorOutOfRange: return "FactorOutOfRange";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace trimap
