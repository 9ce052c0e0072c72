#pragma once

#include <stdexcept>
#include <string>

namespace eigenstrata {

enum class ErrorKind {
    DegenerateInitCondition,
    QuadratureNotConverged,
    AlphaOutOfRange,
    DomainError,
    RankOutOfRange,
    GridTooCoarse,
    TurningPointProximity,
    EdgeSingularity,
    VarianceUndefined,
    NotFound,
    BlowUp,
    OutOfGrid,
    InsufficientGrid,
    InvalidSpec,
};

const char* to_string(ErrorKind k);

// every module failure goes through this; the CLI maps it to exit code 3
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace eigenstrata
