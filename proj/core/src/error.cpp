#include "girthlab/error.hpp"

namespace girthlab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::MalformedEncoding: return "MalformedEncoding";
    case ErrorCode::VertexCountOverflow: return "VertexCountOverflow";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::InfiniteGirth: return "InfiniteGirth";
    case ErrorCode::NotCubicVertex: return "NotCubicVertex";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::NotGirthRegular: return "NotGirthRegular";
    case ErrorCode::EdgeCoverageViolation: return "EdgeCoverageViolation";
    case ErrorCode::NotDihedral: return "NotDihedral";
    case ErrorCode::OddGirth: return "OddGirth";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::AsymmetricConnectionSet: return "AsymmetricConnectionSet";
    case ErrorCode::ZeroInConnectionSet: return "ZeroInConnectionSet";
    case ErrorCode::Preconditions: return "Preconditions";
    case ErrorCode::Disconnected: return "Disconnected";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace girthlab
