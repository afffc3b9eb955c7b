#pragma once

#include <stdexcept>
#include <string>

namespace parasurf {

// Base class for every domain error thrown by this library.  The CLI maps
// these to exit code 1; anything else escaping is a bug.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// quad_series_sqrt / quad_series_div: constant term is zero (not invertible).
struct NonUnitConstantTerm : DomainError {
    using DomainError::DomainError;
};

// quad_series_sqrt: constant term embeds negatively, no real square root.
struct NegativeConstantTerm : DomainError {
    using DomainError::DomainError;
};

// Arithmetic attempted between quadratic numbers over different radicands.
struct MixedRadicands : DomainError {
    using DomainError::DomainError;
};

// Spectral data requested for a word that is not hyperbolic at c = 1.
struct NotHyperbolic : DomainError {
    using DomainError::DomainError;
};

// gamma_class(0) does not exist (the chain would be degenerate).
struct ZeroIndex : DomainError {
    using DomainError::DomainError;
};

// Coordinate solve asked for a basis window smaller than the class degree.
struct DegreeTooHigh : DomainError {
    using DomainError::DomainError;
};

// Geodesic trace ran into a cone point with displacement left to travel.
struct HitsVertexInterior : DomainError {
    using DomainError::DomainError;
};

// Geodesic trace consumed its displacement somewhere other than a cone point.
struct NotClosingAtSingularity : DomainError {
    using DomainError::DomainError;
};

// Crossing count requested for chains that share a positive-length segment.
struct NotTransverse : DomainError {
    using DomainError::DomainError;
};

// Overlap area requested for cylinders whose cores are parallel at c = 1.
struct ParallelCylinders : DomainError {
    using DomainError::DomainError;
};

// Power-series order reached the hard cap without finding a nonzero term.
struct TruncationCapExceeded : DomainError {
    using DomainError::DomainError;
};

// Convergence diagnostics received an empty or unusable sequence.
struct DegenerateSequence : DomainError {
    using DomainError::DomainError;
};

} // namespace parasurf
