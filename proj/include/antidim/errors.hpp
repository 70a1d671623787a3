#pragma once

#include <stdexcept>
#include <string>

namespace antidim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed construction input: vertex id out of range, self-loop, bad parameter.
struct InvalidGraphError : Error {
    using Error::Error;
};

struct DisconnectedGraphError : Error {
    DisconnectedGraphError() : Error("graph is not connected") {}
    using Error::Error;
};

struct EmptySetError : Error {
    EmptySetError() : Error("vertex set must be nonempty") {}
};

struct FullSetError : Error {
    FullSetError() : Error("vertex set must be a proper subset of V") {}
};

struct NotATreeError : Error {
    NotATreeError() : Error("graph is not a tree") {}
};

struct NotGeodeticError : Error {
    using Error::Error;
    NotGeodeticError() : Error("graph is not geodetic") {}
};

struct NotBlockGraphError : Error {
    using Error::Error;
    NotBlockGraphError() : Error("graph is not a block graph") {}
};

// Guard against exponential blowup (subset oracle and friends).
struct TooLargeError : Error {
    using Error::Error;
};

struct OrderTooLargeError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace antidim
