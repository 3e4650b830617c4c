#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zelevinsky/multisegment.hpp"

namespace zelevinsky {

/// Replacing a linked pair {Δ, Δ′} by {Δ ∩ Δ′, Δ ∪ Δ′}; an empty intersection is dropped.
struct UIStep {
    std::size_t first = 0;  // canonical indices in the source, first < second
    std::size_t second = 0;
    Multisegment result;
    int union_length = 0;
};

/// One step per linked index pair, ordered by (first, second).
std::vector<UIStep> ui_steps(const Multisegment& m);

/// Everything reachable from a multisegment by union-intersection steps, in breadth-first order,
/// with one recorded chain back to the source for each element.
class UIClosure {
public:
    explicit UIClosure(const Multisegment& source);

    struct Entry {
        Multisegment multisegment;
        std::optional<std::size_t> parent;  // index of the predecessor entry
        int union_length = 0;               // of the step from the parent
    };

    const Multisegment& source() const { return entries_.front().multisegment; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(const Multisegment& m) const { return index_.contains(m); }
    std::optional<std::size_t> find(const Multisegment& m) const;

    /// Chain source = m_1, …, m_k = target.
    std::vector<Multisegment> chain_to(std::size_t entry) const;
    /// Union lengths l_2, …, l_k of the steps along chain_to(entry).
    std::vector<int> union_lengths_to(std::size_t entry) const;

    MultisegmentSet as_set() const;

private:
    std::vector<Entry> entries_;
    std::map<Multisegment, std::size_t> index_;
};

MultisegmentSet ui_closure(const Multisegment& m);

/// Largest l with N(m′, l) > N(m, l) and N(m′, l′) ≥ N(m, l′) for all l′ > l; nullopt if none exists.
/// Throws std::invalid_argument when m′ = m.
std::optional<int> check_N_monotonicity(const Multisegment& m, const Multisegment& m_prime);

/// The witness of check_N_monotonicity for the chain's endpoints, provided it dominates every
/// union length along the chain; nullopt otherwise.
std::optional<int> check_N_monotonicity_along(const std::vector<Multisegment>& chain,
                                              const std::vector<int>& union_lengths);

/// The unique multisegment with the given cuspidal support whose segments are pairwise unlinked.
Multisegment generic_from_csupp(std::vector<CuspidalPoint> points);

/// Emission order of the singleton-embedding algorithm: repeatedly take the first canonical segment
/// (maximal b, shortest among those), emit b(Δ), replace Δ by Δ^-.
std::vector<CuspidalPoint> standard_to_singletons(const Multisegment& m);

}  // namespace zelevinsky
