#pragma once

#include <stdexcept>

namespace orient {

// Parameter outside an operation's accepted range (construction ranges,
// lemma applicability, search budgets).
struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally bad data: loops, duplicate or bidirectional arcs, edge sets
// that do not match the claimed layout.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input that does not parse; the message carries a line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace orient
