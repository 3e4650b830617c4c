#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zelevinsky/exponent.hpp"

namespace zelevinsky {

/// Handle for a cuspidal line {ν^c ρ}: the line id and n(ρ), the rank of the group carrying ρ.
struct Line {
    std::string id;
    int size = 1;

    auto operator<=>(const Line&) const = default;
};

/// The character line `chr` (ρ = trivial character of G_1), self-dual.
Line character_line();

/// Full declaration of a line, including its dual.
struct CuspidalLine {
    std::string id;
    int size = 1;
    std::string dual_id;
};

class UnknownLine : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Lines known to a session together with the involution ρ ↦ ρ^∨.
///
/// Omitting the dual makes a line self-dual unless another line names it as its dual.
/// `resolve()` fixes the duals; it is called lazily by the lookup functions.
class LineRegistry {
public:
    /// Registry holding only `chr`.
    LineRegistry();

    /// Declares a line. Throws std::invalid_argument on size < 1 or on a conflicting redeclaration.
    void declare(const std::string& id, int size, std::optional<std::string> dual_id = std::nullopt);

    bool contains(const std::string& id) const { return decls_.contains(id); }
    Line line(const std::string& id) const;
    CuspidalLine declaration(const std::string& id) const;
    Line dual(const Line& line) const;

    /// Validates the dual pairing: every dual declared, sizes equal, involution.
    void resolve() const;

    /// Declarations sorted by id.
    std::vector<CuspidalLine> declarations() const;

private:
    struct Decl {
        int size;
        std::optional<std::string> dual;
    };
    std::map<std::string, Decl> decls_;
    mutable std::map<std::string, std::string> resolved_dual_;
    mutable bool resolved_ = false;
};

/// ν^c ρ.
struct CuspidalPoint {
    Line line;
    Exponent exp;

    auto operator<=>(const CuspidalPoint&) const = default;
};

/// ρ1 < ρ2: same line and ρ2 = ν^c ρ1 with c a positive integer.
bool precedes(const CuspidalPoint& lhs, const CuspidalPoint& rhs);

class InvalidSegment : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Zelevinsky segment [ν^a ρ, ν^b ρ] with b − a ∈ ℤ≥0.
class Segment {
public:
    /// Throws InvalidSegment unless b − a is a non-negative integer.
    Segment(Line line, Exponent a, Exponent b);
    /// Singleton [ν^a ρ].
    Segment(Line line, Exponent a) : Segment(std::move(line), a, a) {}

    const Line& line() const { return line_; }
    Exponent a() const { return a_; }
    Exponent b() const { return b_; }
    CuspidalPoint begin_point() const { return {line_, a_}; }
    CuspidalPoint end_point() const { return {line_, b_}; }

    int relative_length() const { return static_cast<int>((b_ - a_).as_integer()) + 1; }
    int absolute_length() const { return line_.size * relative_length(); }

    bool contains(const CuspidalPoint& p) const;
    bool contains(const Segment& other) const;
    /// Points ν^a ρ, ν^{a+1} ρ, …, ν^b ρ.
    std::vector<CuspidalPoint> points() const;

    std::string to_string() const;

    bool operator==(const Segment&) const = default;

private:
    Line line_;
    Exponent a_;
    Exponent b_;
};

/// Canonical total order: line id ascending, then b descending, then a descending.
/// Under it, an earlier segment never precedes a later one.
struct CanonicalOrder {
    bool operator()(const Segment& lhs, const Segment& rhs) const;
};

Segment shift(const Segment& seg, Exponent c);
Segment dual(const Segment& seg, const LineRegistry& lines);

/// Δ ∪ Δ′ is a segment and neither contains the other.
bool linked(const Segment& lhs, const Segment& rhs);
/// linked and b(rhs) = ν^c b(lhs) for a positive integer c.
bool precedes(const Segment& lhs, const Segment& rhs);

/// Δ ∩ Δ′ when both lie on one ℤ-coset of a line and overlap.
std::optional<Segment> intersection(const Segment& lhs, const Segment& rhs);
/// Δ ∪ Δ′; requires linked(lhs, rhs) or containment.
Segment segment_union(const Segment& lhs, const Segment& rhs);

}  // namespace zelevinsky
