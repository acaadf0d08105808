#pragma once

#include <stdexcept>

namespace sigma {

// Malformed textual input: color lists, words, endpoint names, file contents.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a definition. The message names the first
// offending witness.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration request above the configured size cap.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sigma
