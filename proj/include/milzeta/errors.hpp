// Error types shared across the library.  Every failure mode that callers
// are expected to handle gets its own class so tests and the CLI can
// distinguish them.
#pragma once

#include <stdexcept>
#include <string>

namespace milzeta {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text could not be parsed; `pos` is the byte offset of the offending token.
struct ParseError : Error {
    std::size_t pos;
    ParseError(std::size_t pos_, const std::string& msg)
        : Error("parse error at position " + std::to_string(pos_) + ": " + msg), pos(pos_) {}
};

// All terms cancelled during canonicalization; a polynomial must be nonzero.
struct EmptyPolynomial : Error {
    using Error::Error;
};

// Some coordinate axis carries no pure term.
struct NotConvenient : Error {
    using Error::Error;
};

// f(0) != 0: the input has a constant term and is not a germ with a
// singularity at the origin.
struct InvalidGerm : Error {
    using Error::Error;
};

// A facet's face function is not strongly polar positive weighted homogeneous.
struct NotFaceType : Error {
    using Error::Error;
};

// Face has too small a dimension for the requested volume computation.
struct DegenerateFace : Error {
    using Error::Error;
};

// A zeta contribution whose period does not divide its Euler characteristic;
// means the chi data is wrong for the input.
struct NonDivisible : Error {
    using Error::Error;
};

// The requested chi strategy does not apply to this (I, P) pair.
struct StrategyInapplicable : Error {
    using Error::Error;
};

// Numeric torus-zero count not divisible by the first weight entry.
struct NonIntegralOrbitCount : Error {
    using Error::Error;
};

// normal_slice_zeta called with some r_j == p_j.
struct InvalidSlice : Error {
    using Error::Error;
};

// Chart monomial factor exponents (r +- p)/2 are not both integral.
struct OddParity : Error {
    using Error::Error;
};

// Cone passed to a chart operation is not unimodular.
struct NotRegular : Error {
    using Error::Error;
};

// Stellar subdivision did not reach a regular fan within the budget.
struct IterationBudgetExceeded : Error {
    using Error::Error;
};

// Fan-side S'_I does not biject onto S_I; the fan is not admissible.
struct BijectionFailure : Error {
    using Error::Error;
};

struct Unsupported : Error {
    using Error::Error;
};

}  // namespace milzeta
