#pragma once

#include <stdexcept>
#include <string>

namespace schlicht {

// Base class for all domain errors. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series
struct DivisorVanishes : Error {
    using Error::Error;
};
struct InnerNotVanishing : Error {
    using Error::Error;
};
struct NotNormalized : Error {
    using Error::Error;
};

// classes
struct InvalidMeasure : Error {
    using Error::Error;
};
struct BadConstantTerm : Error {
    using Error::Error;
};
struct RadiusOutOfRange : Error {
    using Error::Error;
};
struct ParamOutOfRange : Error {
    using Error::Error;
};

// operators
struct KernelCoefficientZero : Error {
    KernelCoefficientZero(const std::string& what, int idx) : Error(what), index(idx) {}
    int index;
};
struct ExcludedAlpha : Error {
    using Error::Error;
};
struct DegenerateConvolution : Error {
    using Error::Error;
};
struct HypothesisViolated : Error {
    using Error::Error;
};

// bounds
struct DegenerateDenominator : Error {
    using Error::Error;
};
using ZeroKernelCoefficient = KernelCoefficientZero;

}  // namespace schlicht
