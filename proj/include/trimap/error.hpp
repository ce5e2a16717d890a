#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trimap {

enum class ErrorCode {
    ParseError,
    DivisionByZero,
    SingularMatrix,
    CoincidentVertices,
    UnknownGenerator,
    NotOnPlaneA,
    NotInFundamentalDomain,
    LimitExceeded,
    NoCycleWithinBound,
    PartitionCountMismatch,
    EdgeNotOnReflectionLine,
    NotTypeI,
    DegenerateFactor,
    FactorOutOfRange,
    ZeroDenominator,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above, so
/// callers (the CLI in particular) can branch on the kind without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace trimap
