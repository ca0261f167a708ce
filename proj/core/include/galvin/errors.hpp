#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace galvin {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a documented precondition (bad graph data, improper
// colouring, out-of-range ids, infeasible constraint arithmetic, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Input text is not valid JSON or does not have the documented shape.
// Kept apart from PreconditionError so the CLI can map it to its own exit
// code.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Instance is larger than the documented scale limit of an exact routine.
// Deliberately distinct from a negative verdict: the answer is "refused",
// never "false".
struct ScaleLimitError : Error {
    explicit ScaleLimitError(const std::string& what) : Error(what) {}
};

// An internal case analysis that should be unreachable was reached, or a
// construction failed its own per-step properness checks.  Reaching this
// is a bug, not a user error.
struct InvariantError : Error {
    explicit InvariantError(const std::string& what) : Error(what) {}
};

// A subdigraph that the list colouring algorithm needed a kernel for has
// none: the orientation handed in was not kernel-perfect.  Carries the
// offending node set as the certificate.
struct KernelFailureError : Error {
    std::vector<int> nodes;
    KernelFailureError(const std::string& what, std::vector<int> offending)
        : Error(what), nodes(std::move(offending)) {}
};

}  // namespace galvin
