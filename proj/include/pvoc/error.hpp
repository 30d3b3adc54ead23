#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pvoc {

enum class ErrorKind {
    EmptyGraph,
    ParseError,
    UnknownVertex,
    IncompleteCover,
    NotDisjoint,
    IsolatedVertex,
    InvalidTarget,
    DomainMismatch,
    EmptyCover,
    DegenerateStudy,
    NoOverlapVertex,
    WriteError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Typed domain error. The kind name prefixes what().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure carrying the 1-based input line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace pvoc
