#pragma once

#include <stdexcept>
#include <string>

namespace polyrot {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- matrix / direction errors ------------------------------------------------
struct NotSquareError : Error {
    using Error::Error;
};
struct NotSkewError : Error {
    using Error::Error;
};
struct DimensionTooSmallError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct ZeroDirectionError : Error {
    using Error::Error;
};

// -- polytope construction errors ---------------------------------------------
struct DegenerateError : Error {
    using Error::Error;
};
struct UnboundedOrInconsistentError : Error {
    using Error::Error;
};
struct RedundantFacetError : Error {
    using Error::Error;
};
struct SigmaNotContainedError : Error {
    using Error::Error;
};

// -- solver / generator errors -------------------------------------------------
struct NumericalFailureError : Error {
    using Error::Error;
};
struct GenerationFailedError : Error {
    using Error::Error;
};
struct NoSolutionOnFacetError : Error {
    using Error::Error;
};
struct ConstructionUnverifiedError : Error {
    using Error::Error;
};

}  // namespace polyrot
