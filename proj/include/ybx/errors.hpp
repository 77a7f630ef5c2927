#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed raw data: wrong dimensions or out-of-range entries. Distinct from
// axiom failures, which validate() collects into a ValidationReport.
struct StructuralError : Error {
    using Error::Error;
};

// An operation was invoked outside its contract (e.g. cabling a non-biquandle).
struct PreconditionError : Error {
    using Error::Error;
};

// A property guaranteed by theory failed to hold; always a bug, never user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ybx
