#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resroc {

// Base for failures of the statistical procedures themselves. Input that is
// merely unusual (ties, small samples) produces warnings instead; these are
// thrown only when no meaningful estimate exists.
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The likelihood score is negative over the whole search interval: every
// negative exceeds every positive, so the ratio estimate diverges to zero
// from above and no root exists.
class NoFiniteRootError : public EstimationError {
 public:
  using EstimationError::EstimationError;
};

// AUC estimate of exactly 1 (perfect separation); theta = tau/(1-tau) has no
// finite value.
class InfiniteThetaError : public EstimationError {
 public:
  using EstimationError::EstimationError;
};

// AUC estimate of exactly 0 (perfectly reversed separation).
class DegenerateTauError : public EstimationError {
 public:
  using EstimationError::EstimationError;
};

// Every observation in the pooled sample is tied.
class DegenerateDataError : public EstimationError {
 public:
  using EstimationError::EstimationError;
};

// A group is constant where a scale parameter must be estimated.
class ZeroVarianceError : public EstimationError {
 public:
  using EstimationError::EstimationError;
};

// Fewer than two usable points in a diagnostic series.
class DegenerateSeriesError : public EstimationError {
 public:
  using EstimationError::EstimationError;
};

// Base for CSV ingestion failures.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedRowError : public ParseError {
 public:
  MalformedRowError(std::size_t line, const std::string& what)
      : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Label column value other than 0 or 1.
class NonBinaryLabelError : public ParseError {
 public:
  NonBinaryLabelError(std::size_t line, const std::string& what)
      : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input contained no rows for one of the two groups.
class EmptyGroupError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace resroc
