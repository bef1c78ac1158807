#pragma once

#include <stdexcept>
#include <string>

namespace nsgs {

/// Caller passed data that violates a constructor or parser precondition.
struct MalformedInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A column/box index outside the diagram.
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Operation requires its argument to be closed under addition.
struct NotASemigroup : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotSymmetric : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotPseudoSymmetric : std::domain_error {
    using std::domain_error::domain_error;
};

/// Boundary instance a decomposition deliberately refuses to handle.
struct ExcludedCase : std::domain_error {
    using std::domain_error::domain_error;
};

/// Enumeration bound missing, above the hard cap, or unusable for the
/// requested instance space.
struct BoundExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownTheorem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidHighlight : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace nsgs
