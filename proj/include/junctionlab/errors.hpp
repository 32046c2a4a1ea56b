#pragma once

#include <stdexcept>
#include <string>

namespace junctionlab {

/// A constructor or setter was handed a value that violates a type invariant.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// unit_convert was asked to convert between different physical dimensions.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The adaptive quadrature could not reach its tolerance within budget.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested quasiparticle density cannot be realized with occupation <= 1.
struct NonNormalizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A calibration target lies outside the attainable interval.
struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed trace file (carries row/column detail in the message).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unknown unit tag in a trace header or config.
struct UnitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Not enough samples to carry out the requested analysis.
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooFewSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AnchorOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Conductance data has no interior maximum to read a gap sum from.
struct PeakNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The model could not be evaluated at a parameter point during fitting.
struct ModelEvaluationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Config file problem (missing key, bad value); message names the key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace junctionlab
