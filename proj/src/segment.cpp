#include "zelevinsky/segment.hpp"

#include <algorithm>

namespace zelevinsky {

Line character_line() { return Line{"chr", 1}; }

LineRegistry::LineRegistry() { declare("chr", 1, "chr"); }

void LineRegistry::declare(const std::string& id, int size, std::optional<std::string> dual_id) {
    if (size < 1) throw std::invalid_argument("line '" + id + "' must have size >= 1");
    if (auto it = decls_.find(id); it != decls_.end()) {
        const bool same_dual = !dual_id || it->second.dual == dual_id;
        if (it->second.size != size || !same_dual)
            throw std::invalid_argument("conflicting redeclaration of line '" + id + "'");
        return;
    }
    decls_.emplace(id, Decl{size, std::move(dual_id)});
    resolved_ = false;
}

void LineRegistry::resolve() const {
    if (resolved_) return;
    std::map<std::string, std::string> dual;
    for (const auto& [id, decl] : decls_) {
        if (!decl.dual) continue;
        const std::string& other = *decl.dual;
        auto it = decls_.find(other);
        if (it == decls_.end()) throw UnknownLine("dual line '" + other + "' of '" + id + "' is not declared");
        if (it->second.size != decl.size)
            throw std::invalid_argument("line '" + id + "' and its dual '" + other + "' differ in size");
        for (const auto& [from, to] : {std::pair{id, other}, std::pair{other, id}}) {
            auto [pos, inserted] = dual.emplace(from, to);
            if (!inserted && pos->second != to)
                throw std::invalid_argument("line '" + from + "' has conflicting duals '" + pos->second + "' and '" +
                                            to + "'");
        }
    }
    for (const auto& [id, decl] : decls_) dual.emplace(id, id);
    resolved_dual_ = std::move(dual);
    resolved_ = true;
}

Line LineRegistry::line(const std::string& id) const {
    auto it = decls_.find(id);
    if (it == decls_.end()) throw UnknownLine("undeclared line '" + id + "'");
    return Line{id, it->second.size};
}

CuspidalLine LineRegistry::declaration(const std::string& id) const {
    resolve();
    const Line l = line(id);
    return CuspidalLine{l.id, l.size, resolved_dual_.at(id)};
}

Line LineRegistry::dual(const Line& l) const {
    resolve();
    auto it = resolved_dual_.find(l.id);
    if (it == resolved_dual_.end()) throw UnknownLine("no dual registered for line '" + l.id + "'");
    return line(it->second);
}

std::vector<CuspidalLine> LineRegistry::declarations() const {
    std::vector<CuspidalLine> out;
    for (const auto& [id, decl] : decls_) out.push_back(declaration(id));
    return out;
}

bool precedes(const CuspidalPoint& lhs, const CuspidalPoint& rhs) {
    return lhs.line == rhs.line && lhs.exp.same_coset(rhs.exp) && lhs.exp < rhs.exp;
}

Segment::Segment(Line line, Exponent a, Exponent b) : line_(std::move(line)), a_(a), b_(b) {
    if (!a_.same_coset(b_) || b_ < a_)
        throw InvalidSegment("segment [" + a_.to_string() + "," + b_.to_string() + "]@" + line_.id +
                             ": b - a must be a non-negative integer");
}

bool Segment::contains(const CuspidalPoint& p) const {
    return p.line == line_ && p.exp.same_coset(a_) && a_ <= p.exp && p.exp <= b_;
}

bool Segment::contains(const Segment& other) const {
    return other.line_ == line_ && other.a_.same_coset(a_) && a_ <= other.a_ && other.b_ <= b_;
}

std::vector<CuspidalPoint> Segment::points() const {
    std::vector<CuspidalPoint> out;
    out.reserve(static_cast<std::size_t>(relative_length()));
    for (Exponent e = a_; e <= b_; e += 1) out.push_back({line_, e});
    return out;
}

std::string Segment::to_string() const {
    if (a_ == b_) return "[" + a_.to_string() + "]@" + line_.id;
    return "[" + a_.to_string() + "," + b_.to_string() + "]@" + line_.id;
}

bool CanonicalOrder::operator()(const Segment& lhs, const Segment& rhs) const {
    if (lhs.line().id != rhs.line().id) return lhs.line().id < rhs.line().id;
    if (lhs.line().size != rhs.line().size) return lhs.line().size < rhs.line().size;
    if (lhs.b() != rhs.b()) return lhs.b() > rhs.b();
    return lhs.a() > rhs.a();
}

Segment shift(const Segment& seg, Exponent c) { return Segment(seg.line(), seg.a() + c, seg.b() + c); }

Segment dual(const Segment& seg, const LineRegistry& lines) {
    return Segment(lines.dual(seg.line()), -seg.b(), -seg.a());
}

bool linked(const Segment& lhs, const Segment& rhs) {
    if (lhs.line() != rhs.line() || !lhs.a().same_coset(rhs.a())) return false;
    if (lhs.contains(rhs) || rhs.contains(lhs)) return false;
    // union is contiguous: overlap or adjacency
    return rhs.a() <= lhs.b() + 1 && lhs.a() <= rhs.b() + 1;
}

bool precedes(const Segment& lhs, const Segment& rhs) { return linked(lhs, rhs) && lhs.b() < rhs.b(); }

std::optional<Segment> intersection(const Segment& lhs, const Segment& rhs) {
    if (lhs.line() != rhs.line() || !lhs.a().same_coset(rhs.a())) return std::nullopt;
    const Exponent a = std::max(lhs.a(), rhs.a());
    const Exponent b = std::min(lhs.b(), rhs.b());
    if (b < a) return std::nullopt;
    return Segment(lhs.line(), a, b);
}

Segment segment_union(const Segment& lhs, const Segment& rhs) {
    if (!linked(lhs, rhs) && !lhs.contains(rhs) && !rhs.contains(lhs))
        throw std::invalid_argument("union of " + lhs.to_string() + " and " + rhs.to_string() + " is not a segment");
    return Segment(lhs.line(), std::min(lhs.a(), rhs.a()), std::max(lhs.b(), rhs.b()));
}

}  // namespace zelevinsky
