#include "zelevinsky/classify.hpp"

#include <algorithm>

#include "zelevinsky/speh.hpp"

namespace zelevinsky {

bool is_generic_St(const Multisegment& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (linked(m[i], m[j])) return false;
    return true;
}

bool is_relatively_projective(const Multisegment& m) {
    if (m.size() == 1) return true;
    if (m.size() != 2) return false;
    const Segment& first = m[0];
    const Segment& second = m[1];
    return first.relative_length() == 1 && second.relative_length() == 1 && !linked(first, second) &&
           first.absolute_length() == second.absolute_length();
}

bool is_one_dimensional(const Multisegment& m) { return m.size() == 1 && m[0].line().size == 1; }

bool hom_opposite_nonzero(const Multisegment& m_up, const Multisegment& m_down) {
    if (m_up.degree() != m_down.degree() + 1)
        throw DegreeMismatch("expected degrees n+1 and n, got " + std::to_string(m_up.degree()) + " and " +
                             std::to_string(m_down.degree()));
    if (!is_one_dimensional(m_up) || !is_one_dimensional(m_down)) return false;
    const Segment& up = m_up[0];
    const Segment& down = m_down[0];
    // centers (a+b)/2 compared as a+b
    return up.line() == down.line() && up.a() + up.b() == down.a() + down.b();
}

bool generic_hom_necessary(const Multisegment& m_down) {
    return std::all_of(m_down.begin(), m_down.end(), [](const Segment& s) { return s.relative_length() <= 2; });
}

ComponentSpec restriction_components(const Multisegment& m) {
    if (m.empty()) throw std::invalid_argument("restriction needs a representation of G_{n+1} with n >= 0");
    const auto highest = highest_derivative(m, Side::Right);
    ComponentSpec spec;
    for (const auto& p : csupp(highest.multisegment)) ++spec.mandatory[{p.line.id, p.line.size}];
    spec.ambient = m.degree() - 1;
    spec.free_budget = spec.ambient - highest.multisegment.degree();
    return spec;
}

bool component_nonzero(const ComponentSpec& spec, const InertialMultiset& s) {
    int total = 0;
    for (const auto& [cls, mult] : s) total += cls.size * mult;
    if (total != spec.ambient)
        throw std::invalid_argument("component has total size " + std::to_string(total) + ", expected " +
                                    std::to_string(spec.ambient));
    for (const auto& [cls, mult] : spec.mandatory) {
        auto it = s.find(cls);
        if (it == s.end() || it->second < mult) return false;
    }
    return true;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::LevelCase: return "LevelCase";
        case Verdict::CertifiedDisjoint: return "CertifiedDisjoint";
        case Verdict::Undecided: return "Undecided";
    }
    return "?";
}

const char* to_string(Obstruction o) { return o == Obstruction::SpehPrefix ? "SpehPrefix" : "CountObstruction"; }

std::size_t AsymmetryReport::survivors() const {
    return static_cast<std::size_t>(std::count_if(naive_pairs.begin(), naive_pairs.end(),
                                                  [](const NaivePair& p) { return !p.eliminated_by; }));
}

namespace {

Multisegment restrict_to(const Multisegment& m, const CosetClass& coset) {
    std::vector<Segment> out;
    for (const auto& s : m)
        if (coset_of(s) == coset) out.push_back(s);
    return Multisegment(std::move(out));
}

// [a,b] ↦ [-b,-a] on the same line: the dual without a change of line.
Multisegment reflect(const Multisegment& m) {
    std::vector<Segment> out;
    for (const auto& s : m) out.emplace_back(s.line(), -s.b(), -s.a());
    return Multisegment(std::move(out));
}

std::optional<std::vector<int>> prefix_representative(const Multisegment& m, const SpehDecomposition& d,
                                                      const Multisegment& target, Side side) {
    const int order = m.degree() - target.degree();
    for (auto& counts : block_truncation_counts(d, order))
        if (apply_block_truncation(m, d, counts, side) == target) return counts;
    return std::nullopt;
}

// First block of relative length L that the counts leave below its level.
std::optional<std::size_t> first_unsaturated(const SpehDecomposition& d, const std::vector<int>& counts, int L) {
    for (std::size_t k = 0; k < d.blocks.size(); ++k)
        if (d.blocks[k].relative_length() == L && counts[k] < d.blocks[k].count()) return k;
    return std::nullopt;
}

int count_containing(const Multisegment& m, const Segment& target) {
    return static_cast<int>(std::count_if(m.begin(), m.end(), [&](const Segment& s) { return s.contains(target); }));
}

CountEvidence evaluate_counts(const Multisegment& component, const Multisegment& right_result,
                              const Multisegment& left_result, int L, const Segment& delta_star, bool mirrored) {
    const Segment target = shift(delta_star, Exponent::half());
    std::vector<Segment> special;
    for (const auto& s : component)
        if (s.relative_length() >= L + 1) special.push_back(shift(*truncate(s, Side::Right, 1), Exponent::half()));

    CountEvidence ev{L, delta_star};
    ev.mirrored = mirrored;
    ev.right_count = count_containing(shift(right_result, Exponent::half()), target);
    ev.left_count = count_containing(shift(left_result, -Exponent::half()), target);
    ev.special_count = count_containing(Multisegment(std::move(special)), target);
    ev.lower_bound_holds = ev.right_count >= ev.special_count + 1;
    ev.equality_holds = ev.left_count == ev.special_count;
    return ev;
}

std::optional<CountEvidence> count_obstruction_impl(const Multisegment& component, const Multisegment& right_result,
                                                    const Multisegment& left_result, int L, bool allow_mirror) {
    const auto d = speh_decompose(component);
    const auto right_counts = prefix_representative(component, d, right_result, Side::Right);
    const auto left_counts = prefix_representative(component, d, left_result, Side::Left);
    if (!right_counts || !left_counts) return std::nullopt;

    const auto k_right = first_unsaturated(d, *right_counts, L);
    const auto k_left = first_unsaturated(d, *left_counts, L);
    if (k_right && (!k_left || *k_left >= *k_right))
        return evaluate_counts(component, right_result, left_result, L, d.blocks[*k_right].top(), !allow_mirror);
    if (k_left && allow_mirror) {
        // exchange the roles of the two sides through the reflection a ↦ -a
        return count_obstruction_impl(reflect(component), reflect(left_result), reflect(right_result), L, false);
    }
    return std::nullopt;
}

}  // namespace

std::optional<CountEvidence> count_obstruction(const Multisegment& component, const Multisegment& right_result,
                                               const Multisegment& left_result, int L) {
    return count_obstruction_impl(component, right_result, left_result, L, true);
}

AsymmetryReport asymmetry_check(const Multisegment& m, int order) {
    AsymmetryReport report;
    report.order = order;
    report.level = level(m);

    const auto vectors = truncation_vectors(m, order);
    std::map<Multisegment, std::vector<std::size_t>> right_by_image;  // ν·m^{(i⃗)} ↦ vectors
    for (std::size_t k = 0; k < vectors.size(); ++k)
        right_by_image[shift(apply_truncation(m, vectors[k], Side::Right), 1)].push_back(k);
    for (const auto& left : vectors) {
        const Multisegment left_result = apply_truncation(m, left, Side::Left);
        auto it = right_by_image.find(left_result);
        if (it == right_by_image.end()) continue;
        for (std::size_t k : it->second)
            report.naive_pairs.push_back(
                {vectors[k], left, apply_truncation(m, vectors[k], Side::Right), left_result, std::nullopt, std::nullopt});
    }

    if (order == report.level) {
        const bool has_full_pair = std::any_of(report.naive_pairs.begin(), report.naive_pairs.end(), [](const NaivePair& p) {
            auto full = [](const TruncationVector& v) {
                return std::all_of(v.entries.begin(), v.entries.end(), [](Truncation t) { return t == Truncation::TruncOnce; });
            };
            return full(p.right) && full(p.left);
        });
        if (!has_full_pair) throw InvariantViolation("level identity ν·m^- = ^-m fails for " + m.to_string());
        report.verdict = Verdict::LevelCase;
        return report;
    }

    const auto right_prefix = prefix_constrained_candidates(m, order, Side::Right);
    const auto left_prefix = prefix_constrained_candidates(m, order, Side::Left);
    for (auto& pair : report.naive_pairs) {
        if (!right_prefix.contains(pair.right_result) || !left_prefix.contains(pair.left_result)) {
            pair.eliminated_by = Obstruction::SpehPrefix;
            continue;
        }
        // first (line, coset) component not truncated to its own level
        std::map<CosetClass, std::vector<std::size_t>> components;
        for (std::size_t k = 0; k < m.size(); ++k) components[coset_of(m[k])].push_back(k);
        for (const auto& [coset, indices] : components) {
            const bool saturated = std::all_of(indices.begin(), indices.end(), [&](std::size_t k) {
                return pair.right.truncates(k) && pair.left.truncates(k);
            });
            if (saturated) continue;
            int L = 0;
            for (std::size_t k : indices)
                if (!pair.right.truncates(k) || !pair.left.truncates(k)) L = std::max(L, m[k].relative_length());
            pair.evidence = count_obstruction(restrict_to(m, coset), restrict_to(pair.right_result, coset),
                                              restrict_to(pair.left_result, coset), L);
            if (!report.L_choice) report.L_choice = L;
            break;
        }
        if (pair.evidence && !(pair.evidence->lower_bound_holds && pair.evidence->equality_holds))
            pair.eliminated_by = Obstruction::CountObstruction;
    }
    report.verdict = report.survivors() == 0 ? Verdict::CertifiedDisjoint : Verdict::Undecided;
    return report;
}

}  // namespace zelevinsky
