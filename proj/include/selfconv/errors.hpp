#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfconv {

enum class ErrorCode {
    InvalidParams,
    AlgebraicClass,
    DegenerateA,
    DegenerateRiccati,
    ZeroScale,
    ZeroAlpha3,
    WrongBaseSequence,
    PoleArgument,
    BNonpositiveInteger,
    PolynomialCase,
    OnBranchCut,
    OutOfRegularRange,
    ComplexRoots,
    PolynomialDegenerate,
    NotSimplyRepresented,
    NonIntegrableOrigin,
    ToleranceNotMet,
    MissingPoles,
    IllConditioned,
    CountMismatch,
    NoConvergence,
    ConvergedToCut,
    MalformedBFile,
    IndexMismatch,
    ParseError,
};

/// Stable machine-readable name, used in CLI error output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace selfconv
