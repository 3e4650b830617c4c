#pragma once

#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "zelevinsky/segment.hpp"

namespace zelevinsky {

/// Multiset of segments, kept in canonical order (see CanonicalOrder).
class Multisegment {
public:
    Multisegment() = default;
    Multisegment(std::vector<Segment> segments);  // NOLINT: implicit from a segment list
    Multisegment(std::initializer_list<Segment> segments);

    std::span<const Segment> segments() const { return segments_; }
    const Segment& operator[](std::size_t k) const { return segments_[k]; }
    std::size_t size() const { return segments_.size(); }
    bool empty() const { return segments_.empty(); }
    auto begin() const { return segments_.begin(); }
    auto end() const { return segments_.end(); }

    /// n(m): sum of absolute lengths.
    int degree() const;
    std::size_t count(const Segment& seg) const;

    Multisegment plus(const Segment& seg) const;
    Multisegment plus(const Multisegment& other) const;
    /// Removes one copy; throws std::invalid_argument when absent.
    Multisegment minus(const Segment& seg) const;
    bool contains_all(const Multisegment& sub) const;

    /// "{[0,1]@chr, [1]@chr}"; segments in canonical order.
    std::string to_string() const;

    bool operator==(const Multisegment&) const = default;
    /// Lexicographic on the canonical lists; used for deterministic ordered sets.
    bool operator<(const Multisegment& other) const;

private:
    std::vector<Segment> segments_;
};

using MultisegmentSet = std::set<Multisegment>;

Multisegment shift(const Multisegment& m, Exponent c);
Multisegment dual(const Multisegment& m, const LineRegistry& lines);

/// N(m, l): segments of relative length exactly l, counted with multiplicity.
int count_by_length(const Multisegment& m, int l);

/// Cuspidal support as a sorted multiset of points.
std::vector<CuspidalPoint> csupp(const Multisegment& m);
std::set<CuspidalPoint> csupp_set(const Multisegment& m);

/// A ℤ-coset of a line: (line, exponent mod ℤ).
struct CosetClass {
    Line line;
    Exponent residue;

    auto operator<=>(const CosetClass&) const = default;
};
CosetClass coset_of(const Segment& seg);
std::set<CosetClass> csupp_z(const Multisegment& m);

/// Sub-multiset test on sorted point lists.
bool multiset_includes(const std::vector<CuspidalPoint>& super, const std::vector<CuspidalPoint>& sub);

}  // namespace zelevinsky
