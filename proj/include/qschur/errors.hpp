#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact division by a quantum factorial failed; indicates a formula
// transcription bug rather than bad input.
struct NonIntegralDivision : Error {
    using Error::Error;
};

// Gram-Schmidt met a leading pairing coefficient outside Z.
struct NonIntegerLeading : Error {
    using Error::Error;
};

// A candidate standard element failed the unitriangularity check.
struct NonUnitriangular : Error {
    using Error::Error;
};

struct MonomialNotFound : Error {
    using Error::Error;
};

struct StabilityNotReached : Error {
    using Error::Error;
};

// The finite-field window is too small to resolve a computation.
struct WindowError : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace qschur
