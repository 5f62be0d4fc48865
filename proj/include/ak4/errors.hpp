#pragma once

#include <stdexcept>
#include <string>

namespace ak4 {

/// Ambient dimension or grade of two operands disagree.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Result grade would leave [0, n].
struct GradeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structure constants violate the Jacobi identity.
struct JacobiError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation requires a unimodular Lie algebra.
struct NotUnimodularError : std::domain_error {
  using std::domain_error::domain_error;
};

/// J induces the opposite orientation to the fixed one.
struct OrientationMismatchError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A compatible/taming form was requested for a non-tamed J.
struct NotTamedError : std::domain_error {
  using std::domain_error::domain_error;
};

/// factor_simple called on a non-simple or zero bivector.
struct NotSimpleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The requested Pluecker chart does not cover this J.
struct InvalidChartError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Metric/orientation pair unusable for exact Hodge theory.
struct MetricError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Text input could not be parsed; line is 1-based, 0 if unknown.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_no = 0)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
        line(line_no) {}
  int line;
};

}  // namespace ak4
