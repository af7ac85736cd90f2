#pragma once

#include <stdexcept>
#include <string>

namespace dsrg {

// Checked integer arithmetic overflowed.  Wrapping would silently corrupt
// an exact verification, so every overflow throws.
struct OverflowError : std::overflow_error {
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// A caller violated a documented precondition (bad family parameters,
// non-subgroup, identity in a connection set, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An identity that is supposed to be a theorem failed.  These are hard
// failures: they indicate either an implementation bug or a genuine
// counterexample, and both must surface loudly.
struct InternalCheckError : std::logic_error {
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dsrg
