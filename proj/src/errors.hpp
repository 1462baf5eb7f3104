#pragma once

#include <stdexcept>
#include <string>

namespace hd {

// Typed errors shared across the library. All carry a human-readable message;
// the CLI maps any of them to a nonzero exit code with the message printed.

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The algebra fails one of the hypotheses the invariant needs
// (involutory / unimodular / counimodular); the message names it.
struct UnsupportedAlgebra : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integral or cointegral solution space does not have dimension 1.
struct IntegralSpaceDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mu_R(e_L) = 0, so the normalization required by the character formula
// does not exist (e.g. group algebra over F_p with p dividing |G|).
struct DegeneratePairing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource limit was hit (bead crossing cap, contraction
// width, homomorphism search nodes, algebra dimension). Never silent.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A move site no longer matches the graph it was found on.
struct StaleSite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hd
