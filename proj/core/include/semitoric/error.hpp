#pragma once

#include <stdexcept>
#include <string>

namespace semitoric {

enum class ErrorCode {
    DegenerateVector,
    EmptyInterior,
    EmptySlice,
    UnboundedSlice,
    PointNotOnBoundary,
    NonConvexImage,
    SignsNotNormalized,
    ComplexityTooLarge,
    NotAdmissible,
    NotCanonicalizable,
    InvalidIngredients,
    IncomparableTruncation,
    OriginSingularity,
    NotClosed,
    IllConditioned,
    GridTooSparse,
    WindowRequired,
    DegenerateGeometry,
    UndecomposableTransition,
    CutNotCovered,
    ParseError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace semitoric
