#pragma once

#include <optional>
#include <vector>

#include "zelevinsky/multisegment.hpp"

namespace zelevinsky {

/// Right derivatives drop the b-end (Δ^-); left derivatives drop the a-end (^-Δ).
enum class Side { Right, Left };

const char* to_string(Side side);

/// Removes k points from the b-end (Right) or the a-end (Left). Empty once k reaches the relative length.
std::optional<Segment> truncate(const Segment& seg, Side side, int k);

/// Order-indexed truncation Δ^{(i)} / ^{(i)}Δ: empty when the line size does not divide i.
std::optional<Segment> truncate_order(const Segment& seg, Side side, int order);

enum class Truncation { Keep, TruncOnce };

/// One entry per segment of the canonical list of a multisegment.
struct TruncationVector {
    std::vector<Truncation> entries;
    int order = 0;

    bool truncates(std::size_t k) const { return entries[k] == Truncation::TruncOnce; }
    bool operator==(const TruncationVector&) const = default;
};

/// All vectors with entries in {Keep, TruncOnce} whose order (sum of truncated line sizes) is `order`,
/// in lexicographic order with Keep < TruncOnce.
std::vector<TruncationVector> truncation_vectors(const Multisegment& m, int order);

/// m^{(i⃗)} or ^{(i⃗)}m; fully truncated segments are dropped.
Multisegment apply_truncation(const Multisegment& m, const TruncationVector& vec, Side side);

/// The multisegments n for which ζ(n) can occur as a layer of the order-i derivative of ζ(m).
MultisegmentSet derivative_candidates(const Multisegment& m, int order, Side side);

struct HighestDerivative {
    Multisegment multisegment;
    int level = 0;
};

/// Truncates every segment once; the level is the sum of the line sizes.
HighestDerivative highest_derivative(const Multisegment& m, Side side);
int level(const Multisegment& m);

/// ν^{1/2}·m for Right, ν^{-1/2}·m for Left.
Multisegment shifted(const Multisegment& m, Side side);

/// csupp(m^-) ⊆ csupp(n) as multisets for every right candidate n of order i.
bool check_csupp_containment(const Multisegment& m, int order);

/// Layers St(^{(i_1)}Δ_1) × … of the derivative of a generic St(m): each segment may be truncated
/// any number of times. Throws std::invalid_argument if m has a linked pair.
MultisegmentSet generic_derivative_pieces(const Multisegment& m, int order, Side side);

}  // namespace zelevinsky
