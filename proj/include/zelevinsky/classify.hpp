#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zelevinsky/derivatives.hpp"
#include "zelevinsky/multisegment.hpp"

namespace zelevinsky {

/// St(m) is generic iff the segments are pairwise unlinked.
bool is_generic_St(const Multisegment& m);

/// St(m) restricts to a projective representation: one segment, or two unlinked singletons of equal size.
bool is_relatively_projective(const Multisegment& m);

/// ⟨m⟩ is a character: a single segment on a line of size 1.
bool is_one_dimensional(const Multisegment& m);

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Hom_{G_n}(⟨m_down⟩, ⟨m_up⟩|_{G_n}) ≠ 0: both characters on one line with equal centers.
/// Throws DegreeMismatch unless degree(m_up) = degree(m_down) + 1.
bool hom_opposite_nonzero(const Multisegment& m_up, const Multisegment& m_down);

/// Necessary condition for Hom from a generic representation to ⟨m_down⟩: relative lengths ≤ 2.
bool generic_hom_necessary(const Multisegment& m_down);

/// Inertial class of a cuspidal point: the line, with every ν-shift identified.
struct InertialClass {
    std::string line;
    int size = 1;

    auto operator<=>(const InertialClass&) const = default;
};

using InertialMultiset = std::map<InertialClass, int>;

/// Bernstein components of π|_{G_n} for π = ⟨m⟩ on G_{n+1}: those containing `mandatory`,
/// filled with any cuspidal classes of total size `free_budget`.
struct ComponentSpec {
    InertialMultiset mandatory;
    int free_budget = 0;
    int ambient = 0;
};

/// Throws std::invalid_argument for the empty multisegment (no G_{n+1} with n ≥ 0).
ComponentSpec restriction_components(const Multisegment& m);

/// Throws std::invalid_argument when the sizes in `s` do not add up to spec.ambient.
bool component_nonzero(const ComponentSpec& spec, const InertialMultiset& s);

enum class Verdict { LevelCase, CertifiedDisjoint, Undecided };
enum class Obstruction { SpehPrefix, CountObstruction };

const char* to_string(Verdict v);
const char* to_string(Obstruction o);

/// Data of the counting comparison: ν^{1/2}Δ* against the right side, the left side and the special segments.
struct CountEvidence {
    int L = 0;
    Segment delta_star;
    bool mirrored = false;  // evaluated with left and right exchanged
    int right_count = 0;    // segments of ν^{1/2}·right containing ν^{1/2}Δ*
    int left_count = 0;     // segments of ν^{-1/2}·left containing ν^{1/2}Δ*
    int special_count = 0;  // special segments containing ν^{1/2}Δ*
    bool lower_bound_holds = false;  // right_count ≥ special_count + 1
    bool equality_holds = false;     // left_count = special_count
};

/// A right vector and a left vector with ν·m^{(i⃗)} = ^{(j⃗)}m.
struct NaivePair {
    TruncationVector right;
    TruncationVector left;
    Multisegment right_result;
    Multisegment left_result;
    std::optional<Obstruction> eliminated_by;
    std::optional<CountEvidence> evidence;
};

struct AsymmetryReport {
    int order = 0;
    int level = 0;
    Verdict verdict = Verdict::Undecided;
    std::vector<NaivePair> naive_pairs;
    /// L of the first pair reaching the count comparison.
    std::optional<int> L_choice;

    std::size_t survivors() const;
};

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Decides whether ν^{1/2}·π^{(i)} and ν^{-1/2}·^{(i)}π can share an irreducible quotient, for π = ⟨m⟩.
/// Throws InvariantViolation if the level identity ν·m^- = ^-m fails.
AsymmetryReport asymmetry_check(const Multisegment& m, int order);

/// The count comparison for one component (single line and ℤ-coset) of a naive pair.
/// `L` is the largest relative length kept by either side. Exposed for testing.
std::optional<CountEvidence> count_obstruction(const Multisegment& component, const Multisegment& right_result,
                                               const Multisegment& left_result, int L);

}  // namespace zelevinsky
