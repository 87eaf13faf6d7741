#pragma once

#include <stdexcept>
#include <string>

namespace actsets {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Empty input where a nonempty one is required (use the explicit empty
/// sentinel instead of an empty generator list).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Facet/vertex enumeration refused: state-space dimension above the cap.
class DimensionCap : public Error {
public:
    using Error::Error;
};

/// A facet system whose support function is +inf somewhere on the simplex.
class UnboundedSupport : public Error {
public:
    using Error::Error;
};

/// Operands referencing different state spaces.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

/// Mixing exact (piecewise-linear) and numeric-oracle values where a single
/// mode is required.
class ModeMismatch : public Error {
public:
    using Error::Error;
};

/// Blocks that do not exactly cover the signal indices.
class PartitionError : public Error {
public:
    using Error::Error;
};

/// Refinement search refused: too many signals for exhaustive partitions.
class SignalCap : public Error {
public:
    using Error::Error;
};

/// relative_voi called on a pair that is not fine/coarse ordered.
class NotARefinement : public Error {
public:
    using Error::Error;
};

/// A numeric oracle failed the midpoint convexity validation.
class NotConvex : public Error {
public:
    using Error::Error;
};

/// Little-flexibility witness requested for a generator that does not satisfy
/// the inclusion conditions.
class NoQualifyingGenerator : public Error {
public:
    using Error::Error;
};

/// Scenario text is not well-formed JSON (message carries the position).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed scenario violating a schema invariant (message names the field).
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace actsets
