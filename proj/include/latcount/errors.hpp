#ifndef LATCOUNT_ERRORS_HPP
#define LATCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latcount {

// Base for everything this library throws on bad input or violated guards.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- DIMACS parsing ----
struct MissingHeader : Error {
    using Error::Error;
};
struct ClauseWidthUnsupported : Error {
    using Error::Error;
};
struct VariableOutOfRange : Error {
    using Error::Error;
};
struct ClauseCountMismatch : Error {
    using Error::Error;
};
struct MixedWidths : Error {
    using Error::Error;
};

// ---- algebraic form ----
struct AlreadyRelaxed : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};

// ---- oracles ----
struct TooLarge : Error {
    using Error::Error;
};
struct NegativeExponent : Error {
    using Error::Error;
};
struct NotMultilinear : Error {
    using Error::Error;
};

// ---- spectrum / integerization ----
struct DegenerateSpectrum : Error {
    using Error::Error;
};
struct IntegerizationUnsafe : Error {
    using Error::Error;
};

// ---- lattice counting ----
struct ResidualTooLarge : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

// ---- cross-checking ----
struct MismatchDetected : Error {
    using Error::Error;
};

} // namespace latcount

#endif
