#include "zelevinsky/multisegment.hpp"

#include <algorithm>
#include <numeric>

namespace zelevinsky {

Multisegment::Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
    std::sort(segments_.begin(), segments_.end(), CanonicalOrder{});
}

Multisegment::Multisegment(std::initializer_list<Segment> segments)
    : Multisegment(std::vector<Segment>(segments)) {}

int Multisegment::degree() const {
    return std::accumulate(segments_.begin(), segments_.end(), 0,
                           [](int acc, const Segment& s) { return acc + s.absolute_length(); });
}

std::size_t Multisegment::count(const Segment& seg) const {
    return static_cast<std::size_t>(std::count(segments_.begin(), segments_.end(), seg));
}

Multisegment Multisegment::plus(const Segment& seg) const {
    std::vector<Segment> out = segments_;
    out.insert(std::upper_bound(out.begin(), out.end(), seg, CanonicalOrder{}), seg);
    Multisegment m;
    m.segments_ = std::move(out);
    return m;
}

Multisegment Multisegment::plus(const Multisegment& other) const {
    std::vector<Segment> out;
    out.reserve(size() + other.size());
    std::merge(segments_.begin(), segments_.end(), other.segments_.begin(), other.segments_.end(),
               std::back_inserter(out), CanonicalOrder{});
    Multisegment m;
    m.segments_ = std::move(out);
    return m;
}

Multisegment Multisegment::minus(const Segment& seg) const {
    Multisegment m = *this;
    auto it = std::find(m.segments_.begin(), m.segments_.end(), seg);
    if (it == m.segments_.end()) throw std::invalid_argument(seg.to_string() + " is not in " + to_string());
    m.segments_.erase(it);
    return m;
}

bool Multisegment::contains_all(const Multisegment& sub) const {
    return std::includes(segments_.begin(), segments_.end(), sub.segments_.begin(), sub.segments_.end(),
                         CanonicalOrder{});
}

std::string Multisegment::to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < segments_.size(); ++k) {
        if (k) out += ", ";
        out += segments_[k].to_string();
    }
    return out + "}";
}

bool Multisegment::operator<(const Multisegment& other) const {
    return std::lexicographical_compare(segments_.begin(), segments_.end(), other.segments_.begin(),
                                        other.segments_.end(), CanonicalOrder{});
}

Multisegment shift(const Multisegment& m, Exponent c) {
    std::vector<Segment> out;
    out.reserve(m.size());
    for (const auto& s : m) out.push_back(shift(s, c));
    return Multisegment(std::move(out));
}

Multisegment dual(const Multisegment& m, const LineRegistry& lines) {
    std::vector<Segment> out;
    out.reserve(m.size());
    for (const auto& s : m) out.push_back(dual(s, lines));
    return Multisegment(std::move(out));
}

int count_by_length(const Multisegment& m, int l) {
    return static_cast<int>(
        std::count_if(m.begin(), m.end(), [l](const Segment& s) { return s.relative_length() == l; }));
}

std::vector<CuspidalPoint> csupp(const Multisegment& m) {
    std::vector<CuspidalPoint> out;
    for (const auto& s : m) {
        auto pts = s.points();
        out.insert(out.end(), pts.begin(), pts.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<CuspidalPoint> csupp_set(const Multisegment& m) {
    auto pts = csupp(m);
    return {pts.begin(), pts.end()};
}

CosetClass coset_of(const Segment& seg) { return {seg.line(), seg.a().residue()}; }

std::set<CosetClass> csupp_z(const Multisegment& m) {
    std::set<CosetClass> out;
    for (const auto& s : m) out.insert(coset_of(s));
    return out;
}

bool multiset_includes(const std::vector<CuspidalPoint>& super, const std::vector<CuspidalPoint>& sub) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace zelevinsky
