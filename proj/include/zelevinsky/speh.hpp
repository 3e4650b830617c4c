#pragma once

#include <optional>
#include <vector>

#include "zelevinsky/derivatives.hpp"
#include "zelevinsky/multisegment.hpp"

namespace zelevinsky {

/// Speh multisegment {Δ, ν^{-1}Δ, …, ν^{-(count-1)}Δ}, stored top-anchored at Δ = top.
///
/// The centered presentation m(count, Δ_c) = {ν^{-(count-1)/2}Δ_c, …, ν^{(count-1)/2}Δ_c} has
/// Δ_c = ν^{-(count-1)/2}·top.
class SpehBlock {
public:
    /// Throws std::invalid_argument when count < 1.
    SpehBlock(Segment top, int count);

    const Segment& top() const { return top_; }
    int count() const { return count_; }
    /// L: relative length of the defining segment.
    int relative_length() const { return top_.relative_length(); }
    Exponent b() const { return top_.b(); }
    Segment centered() const;

    /// top first, then successive ν^{-1} shifts.
    std::vector<Segment> members() const;
    Multisegment multisegment() const { return Multisegment(members()); }

    bool operator==(const SpehBlock&) const = default;

private:
    Segment top_;
    int count_;
};

std::optional<SpehBlock> is_speh(const Multisegment& m);

/// u_r(count, i, Δ_c): the i lowest members truncated once at the b-end. Throws std::out_of_range.
Multisegment speh_right_derivative(const SpehBlock& block, int i);
/// u_l(count, i, Δ_c): the i highest members truncated once at the a-end. Throws std::out_of_range.
Multisegment speh_left_derivative(const SpehBlock& block, int i);
/// Order-indexed: absent unless the line size divides `order`, or beyond the level.
std::optional<Multisegment> speh_derivative_of_order(const SpehBlock& block, int order, Side side);

/// Greedy decomposition m = m_1 + … + m_r into Speh multisegments, with the certified properties.
struct SpehDecomposition {
    std::vector<SpehBlock> blocks;
    /// members of block k as canonical indices into the source; member t is ν^{-t}·top.
    std::vector<std::vector<std::size_t>> member_indices;

    bool covers = false;        // sum of the blocks is m
    bool no_extension = false;  // no segment of a later block extends an earlier one to a Speh multisegment
    bool ordered_tops = false;  // b(m_i) does not precede b(m_j) for i < j
    bool nested = false;        // overlapping blocks are nested: m_j ⊂ m_i for i ≤ j

    bool certified() const { return covers && no_extension && ordered_tops && nested; }
};

SpehDecomposition speh_decompose(const Multisegment& m);

/// Recomputes the four certificate flags of a decomposition of m.
void certify(SpehDecomposition& decomposition, const Multisegment& m);

/// Candidates of order i in which every block of speh_decompose(m) is truncated along a bottom prefix
/// (Right) or a top prefix (Left), as the exact Speh derivative formulas dictate.
MultisegmentSet prefix_constrained_candidates(const Multisegment& m, int order, Side side);

/// Per-block truncation counts q_k (0 ≤ q_k ≤ count_k) with Σ q_k·size_k = order.
std::vector<std::vector<int>> block_truncation_counts(const SpehDecomposition& d, int order);

/// Applies per-block prefix truncations to m.
Multisegment apply_block_truncation(const Multisegment& m, const SpehDecomposition& d, const std::vector<int>& counts,
                                    Side side);

/// u(m, Δ_c) × ⟨Δ′⟩ is irreducible (and the factors commute) when
/// −(m−1)/2 + a ≤ k ≤ l ≤ (m−1)/2 + b, in centered coordinates. True off the block's ℤ-coset.
bool speh_times_segment_irreducible(const SpehBlock& block, const Segment& seg);

/// Hypotheses under which ζ(n1) × u(m, Δ_c) × ζ(n2) has ⟨n1 + m + n2⟩ as unique submodule.
bool speh_sandwich_embedding_ok(const Multisegment& n1, const SpehBlock& block, const Multisegment& n2);

}  // namespace zelevinsky
