#pragma once

#include <stdexcept>
#include <string>

namespace subtile {

// Base for all domain errors. CLI maps these to exit code 1 with a JSON
// error payload; anything else escaping run() is a bug.
struct Error : std::runtime_error {
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(kind)) {}
    std::string kind;
};

#define SUBTILE_ERROR(Name)                                  \
    struct Name : Error {                                    \
        explicit Name(const std::string& msg)                \
            : Error(#Name, msg) {}                           \
    }

SUBTILE_ERROR(DivisionByZero);
SUBTILE_ERROR(SchemaError);
SUBTILE_ERROR(FieldError);
SUBTILE_ERROR(DimensionError);
SUBTILE_ERROR(OverlapError);
SUBTILE_ERROR(InvalidUnion);
SUBTILE_ERROR(EmptyPatch);
SUBTILE_ERROR(NoSeedFound);
SUBTILE_ERROR(ResourceLimit);
SUBTILE_ERROR(InsufficientCoverage);
SUBTILE_ERROR(InsufficientOccurrences);
SUBTILE_ERROR(PhaseTooSpread);
SUBTILE_ERROR(PreconditionFailed);
SUBTILE_ERROR(NoBaseEigenvalues);
SUBTILE_ERROR(NoMatch);
SUBTILE_ERROR(WordNotInLanguage);
SUBTILE_ERROR(NotStabilized);

#undef SUBTILE_ERROR

}  // namespace subtile
