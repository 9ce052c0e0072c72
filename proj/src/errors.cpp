#include "eigenstrata/errors.hpp"

namespace eigenstrata {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::DegenerateInitCondition: return "DegenerateInitCondition";
    case ErrorKind::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::TurningPointProximity: return "TurningPointProximity";
    case ErrorKind::EdgeSingularity: return "EdgeSingularity";
    case ErrorKind::VarianceUndefined: return "VarianceUndefined";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::BlowUp: return "BlowUp";
    case ErrorKind::OutOfGrid: return "OutOfGrid";
    case ErrorKind::InsufficientGrid: return "InsufficientGrid";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace eigenstrata
