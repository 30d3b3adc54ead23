#include <pvoc/error.hpp>

namespace pvoc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::IncompleteCover: return "IncompleteCover";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::EmptyCover: return "EmptyCover";
    case ErrorKind::DegenerateStudy: return "DegenerateStudy";
    case ErrorKind::NoOverlapVertex: return "NoOverlapVertex";
    case ErrorKind::WriteError: return "WriteError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

} // namespace pvoc
