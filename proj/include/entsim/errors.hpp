#ifndef ENTSIM_ERRORS_HPP
#define ENTSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entsim {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A state violates trace/positivity constraints.
class NonPhysicalState : public Error {
public:
  using Error::Error;
};

/// Operator/state dimensions or basis tags do not match.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// The Liouvillian kernel is not one-dimensional.
class DegenerateSteadyState : public Error {
public:
  using Error::Error;
};

/// A requested time does not lie on the kernel grid.
class OffGrid : public Error {
public:
  using Error::Error;
};

/// Bath occupations are equal; a bias-normalized quantity diverges.
class ZeroBias : public Error {
public:
  using Error::Error;
};

/// Current denominator below threshold in a ratio.
class ZeroCurrent : public Error {
public:
  using Error::Error;
};

/// Coherence denominator below threshold in a ratio.
class ZeroCoherence : public Error {
public:
  using Error::Error;
};

/// Root bracketing failed (no sign change across the interval).
class NoSignChange : public Error {
public:
  using Error::Error;
};

/// AnalyticSelector outside the covered closed-form set.
class UncoveredSelector : public Error {
public:
  using Error::Error;
};

/// Configuration file is missing, malformed, or violates a constraint.
/// Messages carry the offending field path.
class ConfigInvalid : public Error {
public:
  using Error::Error;
};

/// A numerical invariant was violated during a run.
class NumericalFailure : public Error {
public:
  using Error::Error;
};

} // namespace entsim

#endif
