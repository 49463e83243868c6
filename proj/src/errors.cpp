#include "selfconv/errors.hpp"

namespace selfconv {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::AlgebraicClass: return "AlgebraicClass";
        case ErrorCode::DegenerateA: return "DegenerateA";
        case ErrorCode::DegenerateRiccati: return "DegenerateRiccati";
        case ErrorCode::ZeroScale: return "ZeroScale";
        case ErrorCode::ZeroAlpha3: return "ZeroAlpha3";
        case ErrorCode::WrongBaseSequence: return "WrongBaseSequence";
        case ErrorCode::PoleArgument: return "PoleArgument";
        case ErrorCode::BNonpositiveInteger: return "BNonpositiveInteger";
        case ErrorCode::PolynomialCase: return "PolynomialCase";
        case ErrorCode::OnBranchCut: return "OnBranchCut";
        case ErrorCode::OutOfRegularRange: return "OutOfRegularRange";
        case ErrorCode::ComplexRoots: return "ComplexRoots";
        case ErrorCode::PolynomialDegenerate: return "PolynomialDegenerate";
        case ErrorCode::NotSimplyRepresented: return "NotSimplyRepresented";
        case ErrorCode::NonIntegrableOrigin: return "NonIntegrableOrigin";
        case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
        case ErrorCode::MissingPoles: return "MissingPoles";
        case ErrorCode::IllConditioned: return "IllConditioned";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ConvergedToCut: return "ConvergedToCut";
        case ErrorCode::MalformedBFile: return "MalformedBFile";
        case ErrorCode::IndexMismatch: return "IndexMismatch";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace selfconv
