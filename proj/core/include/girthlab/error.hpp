#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace girthlab {

enum class ErrorCode {
    MalformedEncoding,
    VertexCountOverflow,
    NotSimple,
    SchemaViolation,
    DanglingEndpoint,
    InvalidScheme,
    SizeCapExceeded,
    InfiniteGirth,
    NotCubicVertex,
    NotAnEdge,
    NotCubic,
    WrongSignature,
    NotGirthRegular,
    EdgeCoverageViolation,
    NotDihedral,
    OddGirth,
    BadParams,
    AsymmetricConnectionSet,
    ZeroInConnectionSet,
    Preconditions,
    Disconnected,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every contract violation raised by the library carries one of the codes
/// above so callers (the CLI in particular) can report them uniformly.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace girthlab
