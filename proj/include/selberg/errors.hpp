#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace selberg {

enum class ErrorKind {
    domain,
    non_convergence,
    pole,
    zero_division,
    unsupported_group,
    parse,
    validation,
    incomplete_data,
    admissibility,
    insufficient_enumeration,
    io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define SELBERG_DEFINE_ERROR(Name, Kind)                                   \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
    };

SELBERG_DEFINE_ERROR(DomainError, domain)
SELBERG_DEFINE_ERROR(NonConvergence, non_convergence)
SELBERG_DEFINE_ERROR(PoleError, pole)
SELBERG_DEFINE_ERROR(ZeroDivision, zero_division)
SELBERG_DEFINE_ERROR(UnsupportedGroup, unsupported_group)
SELBERG_DEFINE_ERROR(ParseError, parse)
SELBERG_DEFINE_ERROR(ValidationError, validation)
SELBERG_DEFINE_ERROR(IncompleteData, incomplete_data)
SELBERG_DEFINE_ERROR(AdmissibilityError, admissibility)
SELBERG_DEFINE_ERROR(InsufficientEnumeration, insufficient_enumeration)
SELBERG_DEFINE_ERROR(IoError, io)

#undef SELBERG_DEFINE_ERROR

// Non-fatal conditions are collected and surfaced in reports.
enum class WarningKind { truncation, convergence, fit, range };

struct Warning {
    WarningKind kind;
    std::string message;
};

const char* to_string(WarningKind kind);

using Warnings = std::vector<Warning>;

}  // namespace selberg
