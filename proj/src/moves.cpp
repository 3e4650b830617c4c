#include "zelevinsky/moves.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "zelevinsky/derivatives.hpp"

namespace zelevinsky {

std::vector<UIStep> ui_steps(const Multisegment& m) {
    std::vector<UIStep> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!linked(m[i], m[j])) continue;
            const Segment uni = segment_union(m[i], m[j]);
            Multisegment next = m.minus(m[i]).minus(m[j]).plus(uni);
            if (auto cap = intersection(m[i], m[j])) next = next.plus(*cap);
            out.push_back({i, j, std::move(next), uni.relative_length()});
        }
    }
    return out;
}

UIClosure::UIClosure(const Multisegment& source) {
    entries_.push_back({source, std::nullopt, 0});
    index_.emplace(source, 0);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        // copy: entries_ may reallocate while we append
        const Multisegment current = entries_[k].multisegment;
        for (auto& step : ui_steps(current)) {
            if (index_.contains(step.result)) continue;
            index_.emplace(step.result, entries_.size());
            entries_.push_back({std::move(step.result), k, step.union_length});
        }
    }
}

std::optional<std::size_t> UIClosure::find(const Multisegment& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Multisegment> UIClosure::chain_to(std::size_t entry) const {
    std::vector<Multisegment> chain;
    for (std::optional<std::size_t> k = entry; k; k = entries_.at(*k).parent) chain.push_back(entries_[*k].multisegment);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<int> UIClosure::union_lengths_to(std::size_t entry) const {
    std::vector<int> lengths;
    for (std::size_t k = entry; entries_.at(k).parent; k = *entries_[k].parent) lengths.push_back(entries_[k].union_length);
    std::reverse(lengths.begin(), lengths.end());
    return lengths;
}

MultisegmentSet UIClosure::as_set() const {
    MultisegmentSet out;
    for (const auto& e : entries_) out.insert(e.multisegment);
    return out;
}

MultisegmentSet ui_closure(const Multisegment& m) { return UIClosure(m).as_set(); }

namespace {

int max_length(const Multisegment& m) {
    int out = 0;
    for (const auto& s : m) out = std::max(out, s.relative_length());
    return out;
}

}  // namespace

std::optional<int> check_N_monotonicity(const Multisegment& m, const Multisegment& m_prime) {
    if (m == m_prime) throw std::invalid_argument("check_N_monotonicity needs m' != m");
    const int top = std::max(max_length(m), max_length(m_prime));
    // scan downwards while N(m', l') >= N(m, l') holds for everything above
    for (int l = top; l >= 1; --l) {
        const int now = count_by_length(m_prime, l);
        const int before = count_by_length(m, l);
        if (now > before) return l;
        if (now < before) return std::nullopt;
    }
    return std::nullopt;
}

std::optional<int> check_N_monotonicity_along(const std::vector<Multisegment>& chain,
                                              const std::vector<int>& union_lengths) {
    if (chain.size() < 2 || union_lengths.size() + 1 != chain.size())
        throw std::invalid_argument("a chain needs at least one step and one union length per step");
    auto witness = check_N_monotonicity(chain.front(), chain.back());
    if (!witness) return std::nullopt;
    for (int l : union_lengths)
        if (*witness < l) return std::nullopt;
    return witness;
}

Multisegment generic_from_csupp(std::vector<CuspidalPoint> points) {
    std::sort(points.begin(), points.end());
    std::map<CosetClass, std::map<Exponent, int>> mult;
    for (const auto& p : points) ++mult[{p.line, p.exp.residue()}][p.exp];

    std::vector<Segment> out;
    for (const auto& [coset, counts] : mult) {
        int height = 0;
        for (const auto& [e, c] : counts) height = std::max(height, c);
        for (int h = 1; h <= height; ++h) {
            std::optional<Exponent> start;
            std::optional<Exponent> last;
            for (const auto& [e, c] : counts) {
                if (c < h) continue;
                if (start && *last + 1 == e) {
                    last = e;
                    continue;
                }
                if (start) out.emplace_back(coset.line, *start, *last);
                start = e;
                last = e;
            }
            if (start) out.emplace_back(coset.line, *start, *last);
        }
    }
    return Multisegment(std::move(out));
}

std::vector<CuspidalPoint> standard_to_singletons(const Multisegment& m) {
    std::vector<CuspidalPoint> out;
    Multisegment rest = m;
    while (!rest.empty()) {
        const Segment first = rest[0];
        out.push_back(first.end_point());
        rest = rest.minus(first);
        if (auto t = truncate(first, Side::Right, 1)) rest = rest.plus(*t);
    }
    return out;
}

}  // namespace zelevinsky
