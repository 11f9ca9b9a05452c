#pragma once

#include <stdexcept>
#include <string>

namespace wreathlab {

/// Base class for all recoverable engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured cap (element count, degree, group order) would be exceeded.
/// The message always carries the projected size so callers can report it.
struct CapExceeded : Error {
    using Error::Error;
};

/// A search budget ran out before the search could finish. Distinct from a
/// negative result: the question is left open, not answered.
struct BudgetExhausted : Error {
    using Error::Error;
};

/// Bad input to an operation (degree mismatch, non-normal subgroup, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A cooperative cancellation token fired.
struct Cancelled : Error {
    using Error::Error;
};

/// A map that is a theorem failed verification. This is an engine bug, never
/// a user error, so it derives from logic_error and should not be caught.
struct ConstructionDefect : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace wreathlab
