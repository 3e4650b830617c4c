#include "zelevinsky/derivatives.hpp"

#include <functional>
#include <stdexcept>

namespace zelevinsky {

const char* to_string(Side side) { return side == Side::Right ? "right" : "left"; }

std::optional<Segment> truncate(const Segment& seg, Side side, int k) {
    if (k < 0) throw std::invalid_argument("negative truncation count");
    if (k >= seg.relative_length()) return std::nullopt;
    if (side == Side::Right) return Segment(seg.line(), seg.a(), seg.b() - k);
    return Segment(seg.line(), seg.a() + k, seg.b());
}

std::optional<Segment> truncate_order(const Segment& seg, Side side, int order) {
    if (order % seg.line().size != 0) return std::nullopt;
    return truncate(seg, side, order / seg.line().size);
}

std::vector<TruncationVector> truncation_vectors(const Multisegment& m, int order) {
    std::vector<TruncationVector> out;
    if (order < 0) return out;
    const std::size_t r = m.size();
    // suffix[k]: total size still available from index k on, for pruning
    std::vector<int> suffix(r + 1, 0);
    for (std::size_t k = r; k-- > 0;) suffix[k] = suffix[k + 1] + m[k].line().size;

    std::vector<Truncation> entries(r, Truncation::Keep);
    std::function<void(std::size_t, int)> go = [&](std::size_t k, int remaining) {
        if (remaining > suffix[k]) return;
        if (k == r) {
            if (remaining == 0) out.push_back({entries, order});
            return;
        }
        entries[k] = Truncation::Keep;
        go(k + 1, remaining);
        const int sz = m[k].line().size;
        if (sz <= remaining) {
            entries[k] = Truncation::TruncOnce;
            go(k + 1, remaining - sz);
            entries[k] = Truncation::Keep;
        }
    };
    go(0, order);
    return out;
}

Multisegment apply_truncation(const Multisegment& m, const TruncationVector& vec, Side side) {
    if (vec.entries.size() != m.size()) throw std::invalid_argument("truncation vector length mismatch");
    std::vector<Segment> out;
    out.reserve(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (!vec.truncates(k)) {
            out.push_back(m[k]);
        } else if (auto t = truncate(m[k], side, 1)) {
            out.push_back(*t);
        }
    }
    return Multisegment(std::move(out));
}

MultisegmentSet derivative_candidates(const Multisegment& m, int order, Side side) {
    MultisegmentSet out;
    for (const auto& vec : truncation_vectors(m, order)) out.insert(apply_truncation(m, vec, side));
    return out;
}

HighestDerivative highest_derivative(const Multisegment& m, Side side) {
    std::vector<Segment> out;
    int lvl = 0;
    for (const auto& s : m) {
        lvl += s.line().size;
        if (auto t = truncate(s, side, 1)) out.push_back(*t);
    }
    return {Multisegment(std::move(out)), lvl};
}

int level(const Multisegment& m) { return highest_derivative(m, Side::Right).level; }

Multisegment shifted(const Multisegment& m, Side side) {
    return shift(m, side == Side::Right ? Exponent::half() : -Exponent::half());
}

bool check_csupp_containment(const Multisegment& m, int order) {
    const auto bottom = csupp(highest_derivative(m, Side::Right).multisegment);
    for (const auto& n : derivative_candidates(m, order, Side::Right))
        if (!multiset_includes(csupp(n), bottom)) return false;
    return true;
}

MultisegmentSet generic_derivative_pieces(const Multisegment& m, int order, Side side) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (linked(m[i], m[j]))
                throw std::invalid_argument("St(m) is not generic: " + m[i].to_string() + " and " + m[j].to_string() +
                                            " are linked");
    MultisegmentSet out;
    std::vector<Segment> pieces;
    std::function<void(std::size_t, int)> go = [&](std::size_t k, int remaining) {
        if (k == m.size()) {
            if (remaining == 0) out.insert(Multisegment(pieces));
            return;
        }
        const Segment& seg = m[k];
        const int sz = seg.line().size;
        for (int t = 0; t <= seg.relative_length() && t * sz <= remaining; ++t) {
            auto piece = truncate(seg, side, t);
            if (piece) pieces.push_back(*piece);
            go(k + 1, remaining - t * sz);
            if (piece) pieces.pop_back();
        }
    };
    if (order >= 0) go(0, order);
    return out;
}

}  // namespace zelevinsky
