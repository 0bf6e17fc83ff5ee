#pragma once

#include <stdexcept>
#include <string>

namespace posetcode {

// Base class for every failure the library reports via exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Cover relation contains a directed cycle, so it is not a partial order.
struct CycleError : Error {
    using Error::Error;
};

// An element index or size parameter is outside the permitted range.
struct RangeError : Error {
    using Error::Error;
};

// Malformed textual input (poset files, code files, subset literals).
struct ParseError : Error {
    using Error::Error;
};

// A set claimed to be an ideal is not downward closed.
struct InvalidIdeal : Error {
    using Error::Error;
};

// A set claimed to be an upset is not upward closed.
struct InvalidUpset : Error {
    using Error::Error;
};

// Two objects that must share a ground-set size do not.
struct SizeMismatch : Error {
    using Error::Error;
};

// An enumeration or materialization would exceed a configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// A construction requiring a unique object found zero or several.
struct NotUnique : Error {
    using Error::Error;
};

// A poset handed to a shape-specific constructor does not have that shape.
struct ShapeMismatch : Error {
    using Error::Error;
};

} // namespace posetcode
