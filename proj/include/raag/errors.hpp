#pragma once

#include <stdexcept>
#include <string>

namespace raag {

// A request that is well-formed but violates a precondition of the
// mathematics (unknown vertex, point outside a gate domain, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input that cannot be parsed or does not describe a valid object.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A finite horizon was not enough to certify an answer.  Never used to
// signal "no"; callers must treat it as "unknown at this depth".
class Indeterminate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace raag
