#include "zelevinsky/speh.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zelevinsky {

SpehBlock::SpehBlock(Segment top, int count) : top_(std::move(top)), count_(count) {
    if (count_ < 1) throw std::invalid_argument("Speh block needs count >= 1");
}

Segment SpehBlock::centered() const { return shift(top_, Exponent::from_halves(-(count_ - 1))); }

std::vector<Segment> SpehBlock::members() const {
    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int t = 0; t < count_; ++t) out.push_back(shift(top_, -t));
    return out;
}

std::optional<SpehBlock> is_speh(const Multisegment& m) {
    if (m.empty()) return std::nullopt;
    SpehBlock block(m[0], static_cast<int>(m.size()));
    if (block.multisegment() != m) return std::nullopt;
    return block;
}

namespace {

// Member t of the centered presentation, t = 0 the lowest: ν^{-(m-1)/2 + t}·Δ_c.
Segment centered_member(const SpehBlock& block, int t) {
    return shift(block.centered(), Exponent::from_halves(-(block.count() - 1) + 2 * t));
}

void check_range(const SpehBlock& block, int i) {
    if (i < 0 || i > block.count())
        throw std::out_of_range("Speh derivative index " + std::to_string(i) + " outside 0.." +
                                std::to_string(block.count()));
}

}  // namespace

Multisegment speh_right_derivative(const SpehBlock& block, int i) {
    check_range(block, i);
    std::vector<Segment> out;
    for (int t = 0; t < block.count(); ++t) {
        const Segment member = centered_member(block, t);
        if (t >= i) {
            out.push_back(member);
        } else if (auto cut = truncate(member, Side::Right, 1)) {
            out.push_back(*cut);
        }
    }
    return Multisegment(std::move(out));
}

Multisegment speh_left_derivative(const SpehBlock& block, int i) {
    check_range(block, i);
    std::vector<Segment> out;
    for (int t = 0; t < block.count(); ++t) {
        const Segment member = centered_member(block, t);
        if (t < block.count() - i) {
            out.push_back(member);
        } else if (auto cut = truncate(member, Side::Left, 1)) {
            out.push_back(*cut);
        }
    }
    return Multisegment(std::move(out));
}

std::optional<Multisegment> speh_derivative_of_order(const SpehBlock& block, int order, Side side) {
    const int size = block.top().line().size;
    if (order < 0 || order % size != 0 || order / size > block.count()) return std::nullopt;
    return side == Side::Right ? speh_right_derivative(block, order / size) : speh_left_derivative(block, order / size);
}

SpehDecomposition speh_decompose(const Multisegment& m) {
    SpehDecomposition d;
    std::vector<bool> used(m.size(), false);
    auto take = [&](const Segment& seg) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (!used[k] && m[k] == seg) {
                used[k] = true;
                return k;
            }
        }
        return std::nullopt;
    };
    for (std::size_t first = 0; first < m.size(); ++first) {
        if (used[first]) continue;
        used[first] = true;
        const Segment top = m[first];
        std::vector<std::size_t> indices{first};
        for (int t = 1;; ++t) {
            auto k = take(shift(top, -t));
            if (!k) break;
            indices.push_back(*k);
        }
        d.blocks.emplace_back(top, static_cast<int>(indices.size()));
        d.member_indices.push_back(std::move(indices));
    }
    certify(d, m);
    return d;
}

void certify(SpehDecomposition& d, const Multisegment& m) {
    Multisegment sum;
    for (const auto& block : d.blocks) sum = sum.plus(block.multisegment());
    d.covers = sum == m;

    d.no_extension = true;
    d.ordered_tops = true;
    d.nested = true;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const Multisegment earlier = d.blocks[i].multisegment();
        for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
            const Multisegment later = d.blocks[j].multisegment();
            for (const auto& seg : later)
                if (is_speh(earlier.plus(seg))) d.no_extension = false;
            if (precedes(d.blocks[i].top().end_point(), d.blocks[j].top().end_point())) d.ordered_tops = false;
            const bool overlap =
                std::any_of(later.begin(), later.end(), [&](const Segment& s) { return earlier.count(s) > 0; });
            if (overlap && !earlier.contains_all(later)) d.nested = false;
        }
    }
}

std::vector<std::vector<int>> block_truncation_counts(const SpehDecomposition& d, int order) {
    std::vector<std::vector<int>> out;
    if (order < 0) return out;
    std::vector<int> counts(d.blocks.size(), 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t k, int remaining) {
        if (k == d.blocks.size()) {
            if (remaining == 0) out.push_back(counts);
            return;
        }
        const int size = d.blocks[k].top().line().size;
        for (int q = 0; q <= d.blocks[k].count() && q * size <= remaining; ++q) {
            counts[k] = q;
            go(k + 1, remaining - q * size);
        }
        counts[k] = 0;
    };
    go(0, order);
    return out;
}

Multisegment apply_block_truncation(const Multisegment& m, const SpehDecomposition& d, const std::vector<int>& counts,
                                    Side side) {
    if (counts.size() != d.blocks.size()) throw std::invalid_argument("one truncation count per block required");
    TruncationVector vec{std::vector<Truncation>(m.size(), Truncation::Keep), 0};
    for (std::size_t k = 0; k < d.blocks.size(); ++k) {
        const auto& idx = d.member_indices[k];
        const int q = counts[k];
        if (q < 0 || q > d.blocks[k].count()) throw std::out_of_range("block truncation count out of range");
        // members are stored top first: the bottom prefix is the tail, the top prefix the head
        for (int t = 0; t < q; ++t) {
            const std::size_t member = side == Side::Right ? idx[idx.size() - 1 - static_cast<std::size_t>(t)]
                                                           : idx[static_cast<std::size_t>(t)];
            vec.entries[member] = Truncation::TruncOnce;
        }
        vec.order += q * d.blocks[k].top().line().size;
    }
    return apply_truncation(m, vec, side);
}

MultisegmentSet prefix_constrained_candidates(const Multisegment& m, int order, Side side) {
    const auto d = speh_decompose(m);
    MultisegmentSet out;
    for (const auto& counts : block_truncation_counts(d, order)) out.insert(apply_block_truncation(m, d, counts, side));
    return out;
}

bool speh_times_segment_irreducible(const SpehBlock& block, const Segment& seg) {
    const Segment& top = block.top();
    if (seg.line() != top.line() || !seg.a().same_coset(top.a())) return true;
    const Segment c = block.centered();
    const Exponent half_span = Exponent::from_halves(block.count() - 1);
    const Exponent lo = c.a() - half_span;
    const Exponent hi = c.b() + half_span;
    return lo <= seg.a() && seg.a() <= seg.b() && seg.b() <= hi;
}

bool speh_sandwich_embedding_ok(const Multisegment& n1, const SpehBlock& block, const Multisegment& n2) {
    const Segment delta = block.centered();
    const CuspidalPoint end = delta.end_point();
    for (const auto& seg : n1) {
        const CuspidalPoint other = seg.end_point();
        if (!(precedes(end, other) || end == other)) return false;
    }
    for (const auto& seg : n2) {
        if (!precedes(end, seg.end_point())) continue;
        if (truncate(seg, Side::Right, 1) != delta) return false;
    }
    return true;
}

}  // namespace zelevinsky
