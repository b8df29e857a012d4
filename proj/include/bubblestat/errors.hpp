#pragma once

#include <stdexcept>
#include <string>

namespace bubblestat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV rows, scenario files). Message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

/// Input violates a domain invariant (duplicate date, non-positive price, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Series too short for the requested computation.
struct InsufficientDataError : Error {
    using Error::Error;
};

/// Series has zero variance; higher moments are undefined.
struct DegenerateSeriesError : Error {
    using Error::Error;
};

/// Window does not fit inside the series at the requested index.
struct WindowBoundsError : Error {
    using Error::Error;
};

/// Configuration value outside its legal range.
struct ConfigError : Error {
    using Error::Error;
};

/// Robust scale estimation failed (e.g. truncation removed every point).
struct EstimationError : Error {
    using Error::Error;
};

/// Internal consistency violation between components.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace bubblestat
