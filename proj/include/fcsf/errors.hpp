#pragma once

#include <stdexcept>

namespace fcsf {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph construction / validation.
struct LoopEdgeError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct VertexRangeError : Error { using Error::Error; };
struct EdgeRangeError : Error { using Error::Error; };
struct UnknownColorError : Error { using Error::Error; };

/// Budget does not cover the color set, or carries an invalid cap.
struct BudgetError : Error { using Error::Error; };

/// An operation precondition does not hold (w out of range, graph not
/// connected, wrong color-set size, ...).
struct PreconditionError : Error { using Error::Error; };

/// Instance exceeds a hard enumeration cap. Never silently degraded.
struct CapacityError : Error { using Error::Error; };

/// Text input could not be parsed; messages carry 1-based line numbers.
struct ParseError : Error { using Error::Error; };

struct InvalidArgumentError : Error { using Error::Error; };

}  // namespace fcsf
