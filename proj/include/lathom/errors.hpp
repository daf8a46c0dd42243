#pragma once

#include <stdexcept>
#include <string>

namespace lathom {

// Error taxonomy.  Each type corresponds to a contract a caller may want to
// catch separately; all derive from std::runtime_error so the CLI can map any
// of them onto a nonzero exit code with a readable message.

// Input is not a cycle (nonzero boundary) where a cycle is required.
struct NotACycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Top homology of a complex was expected to have rank one and does not.
struct RankNotOneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The number of supplied cycles does not match the number of reference facets
// (or the homology rank) in a certificate computation.
struct SizeMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A weight vector fails (or cannot be certified to satisfy) the genericity
// requirement of a bounded-region computation.
struct GenericityViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subposet expected to be Boolean (isomorphic to the lattice of subsets of
// some finite set) is not, or its chains are missing from the ambient complex.
struct NotBooleanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural poset errors: order axiom violations, missing bounds,
// comparisons between incomparable elements, and the like.
struct PosetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user-facing parameters (unknown family, out-of-range n, bad T, ...).
struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lathom
