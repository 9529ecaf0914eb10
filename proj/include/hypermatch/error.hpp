#pragma once

#include <stdexcept>
#include <string>

namespace hypermatch {

enum class ErrorKind {
    NonUniformEdge,
    VertexOutOfRange,
    DuplicateEdge,
    BadParameter,
    InadmissibleSpec,
    ParseError,
    DimensionMismatch,
    NotRepresentable,
    InvalidWitness,
    BudgetExceeded,
};

// Single exception type for the whole library; `kind()` distinguishes the
// failure classes that callers are expected to branch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace hypermatch
