#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zelevinsky/multisegment.hpp"

namespace zelevinsky {

/// Text input: line declarations followed by multisegments.
///
///     line rho size 2 dual rho_v;
///     { [0,1]@chr, [1/2]@rho }
///
/// `chr` (size 1, self-dual) is always declared. Exponents are integers or fractions p/q; decimals are
/// rejected. Whitespace is insignificant and `#` starts a comment running to the end of the line.
struct SessionInput {
    LineRegistry lines;
    std::vector<Multisegment> multisegments;
};

/// Position of the offending token, 1-based.
struct SourcePosition {
    int line = 1;
    int column = 1;
};

class NotationError : public std::runtime_error {
public:
    NotationError(const std::string& message, SourcePosition where);
    SourcePosition where() const { return where_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    SourcePosition where_;
};

/// Malformed text (exit status 1 in the command-line tool).
class ParseError : public NotationError {
public:
    using NotationError::NotationError;
};

/// Well-formed text with bad content: undeclared line, b − a ∉ ℤ≥0, denominator other than 1 or 2,
/// conflicting declarations (exit status 2).
class SemanticError : public NotationError {
public:
    using NotationError::NotationError;
};

SessionInput parse_session(std::string_view text);

/// Parses text that must contain exactly one multisegment.
Multisegment parse_multisegment(std::string_view text, const LineRegistry& lines = LineRegistry());

/// Normal form: declarations other than `chr` sorted by id with explicit duals, then one multisegment
/// per line in canonical order. parse_session(print_session(s)) reproduces s.
std::string print_session(const SessionInput& session);

bool same_session(const SessionInput& lhs, const SessionInput& rhs);

}  // namespace zelevinsky
