#include "selberg/errors.hpp"

namespace selberg {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::domain: return "DomainError";
        case ErrorKind::non_convergence: return "NonConvergence";
        case ErrorKind::pole: return "PoleError";
        case ErrorKind::zero_division: return "ZeroDivision";
        case ErrorKind::unsupported_group: return "UnsupportedGroup";
        case ErrorKind::parse: return "ParseError";
        case ErrorKind::validation: return "ValidationError";
        case ErrorKind::incomplete_data: return "IncompleteData";
        case ErrorKind::admissibility: return "AdmissibilityError";
        case ErrorKind::insufficient_enumeration: return "InsufficientEnumeration";
        case ErrorKind::io: return "IoError";
    }
    return "Error";
}

const char* to_string(WarningKind kind) {
    switch (kind) {
        case WarningKind::truncation: return "TruncationWarning";
        case WarningKind::convergence: return "ConvergenceWarning";
        case WarningKind::fit: return "FitWarning";
        case WarningKind::range: return "RangeWarning";
    }
    return "Warning";
}

}  // namespace selberg
