#pragma once

#include <stdexcept>
#include <string>

namespace kakeya {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on an operation's arguments was violated.
struct InvalidArgument : Error {
    using Error::Error;
};

/// An object failed a structural invariant (e.g. a line set whose meet
/// graph is not the expected complete bipartite graph).
struct StructureError : Error {
    using Error::Error;
};

/// A computation was requested beyond the supported exhaustive budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

} // namespace kakeya
