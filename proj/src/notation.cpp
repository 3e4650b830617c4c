#include "zelevinsky/notation.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>

namespace zelevinsky {

NotationError::NotationError(const std::string& message, SourcePosition where)
    : std::runtime_error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      message_(message),
      where_(where) {}

namespace {

struct Number {
    std::int64_t num = 0;
    std::int64_t den = 1;
    SourcePosition where;
};

class Parser {
public:
    Parser(std::string_view text, SessionInput& session) : text_(text), session_(session) {}

    void run() {
        std::optional<SourcePosition> last_dual_decl;
        for (skip_blank(); !at_end(); skip_blank()) {
            if (peek() == '{') {
                session_.multisegments.push_back(multisegment());
                skip_blank();
                if (!at_end() && peek() == ';') advance();
                continue;
            }
            const SourcePosition where = position();
            if (identifier_starts(peek()) && identifier() == "line") {
                if (declaration()) last_dual_decl = where;
                continue;
            }
            throw ParseError("expected a line declaration or '{'", where);
        }
        try {
            session_.lines.resolve();
        } catch (const std::invalid_argument& e) {
            throw SemanticError(e.what(), last_dual_decl.value_or(SourcePosition{}));
        }
    }

    Multisegment lone_multisegment() {
        skip_blank();
        if (at_end() || peek() != '{') throw ParseError("expected '{'", position());
        Multisegment m = multisegment();
        skip_blank();
        if (!at_end()) throw ParseError("unexpected text after the multisegment", position());
        return m;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    SourcePosition position() const { return {line_, column_}; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (!at_end()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    static bool identifier_starts(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool identifier_continues(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string identifier() {
        skip_blank();
        if (at_end() || !identifier_starts(peek())) throw ParseError("expected a name", position());
        std::string out;
        while (!at_end() && identifier_continues(peek())) {
            out += peek();
            advance();
        }
        return out;
    }

    void expect(char c) {
        skip_blank();
        if (at_end()) throw ParseError(std::string("expected '") + c + "', found end of input", position());
        if (peek() != c) throw ParseError(std::string("expected '") + c + "', found '" + peek() + "'", position());
        advance();
    }

    bool accept(char c) {
        skip_blank();
        if (at_end() || peek() != c) return false;
        advance();
        return true;
    }

    std::int64_t digits() {
        const SourcePosition where = position();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
        if (pos_ == start) throw ParseError("expected digits", where);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc()) throw ParseError("number out of range", where);
        return value;
    }

    void reject_decimal() {
        if (!at_end() && peek() == '.') throw ParseError("decimals are not accepted, write a fraction such as 1/2", position());
    }

    Number number() {
        skip_blank();
        Number n;
        n.where = position();
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            advance();
        }
        reject_decimal();
        n.num = digits();
        reject_decimal();
        if (!at_end() && peek() == '/') {
            advance();
            n.den = digits();
            reject_decimal();
        }
        if (negative) n.num = -n.num;
        return n;
    }

    Exponent exponent(const Number& n) {
        if (n.den == 0) throw SemanticError("zero denominator", n.where);
        try {
            return Exponent::from_fraction(n.num, n.den);
        } catch (const std::invalid_argument&) {
            throw SemanticError("exponent " + std::to_string(n.num) + "/" + std::to_string(n.den) +
                                    " is not in (1/2)Z; denominators must reduce to 1 or 2",
                                n.where);
        }
    }

    // Returns whether the declaration names a dual.
    bool declaration() {
        skip_blank();
        const SourcePosition name_at = position();
        const std::string name = identifier();
        skip_blank();
        const SourcePosition kw_at = position();
        if (identifier() != "size") throw ParseError("expected 'size'", kw_at);
        skip_blank();
        const SourcePosition size_at = position();
        reject_decimal();
        const std::int64_t size = digits();
        reject_decimal();
        std::optional<std::string> dual;
        skip_blank();
        if (!at_end() && identifier_starts(peek())) {
            const SourcePosition dual_kw = position();
            if (identifier() != "dual") throw ParseError("expected 'dual' or ';'", dual_kw);
            dual = identifier();
        }
        expect(';');
        if (size < 1 || size > 1'000'000) throw SemanticError("line size must be a positive integer", size_at);
        try {
            session_.lines.declare(name, static_cast<int>(size), dual);
        } catch (const std::invalid_argument& e) {
            throw SemanticError(e.what(), name_at);
        }
        return dual.has_value();
    }

    Segment segment() {
        skip_blank();
        const SourcePosition seg_at = position();
        expect('[');
        const Number a = number();
        std::optional<Number> b;
        if (accept(',')) b = number();
        expect(']');
        expect('@');
        skip_blank();
        const SourcePosition line_at = position();
        const std::string name = identifier();
        const Exponent ea = exponent(a);
        const Exponent eb = b ? exponent(*b) : ea;
        if (!session_.lines.contains(name)) throw SemanticError("undeclared line '" + name + "'", line_at);
        try {
            return Segment(session_.lines.line(name), ea, eb);
        } catch (const InvalidSegment& e) {
            throw SemanticError(e.what(), seg_at);
        }
    }

    Multisegment multisegment() {
        expect('{');
        std::vector<Segment> segs;
        if (accept('}')) return Multisegment(std::move(segs));
        do {
            segs.push_back(segment());
        } while (accept(','));
        expect('}');
        return Multisegment(std::move(segs));
    }

    std::string_view text_;
    SessionInput& session_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

SessionInput parse_session(std::string_view text) {
    SessionInput session;
    Parser(text, session).run();
    return session;
}

Multisegment parse_multisegment(std::string_view text, const LineRegistry& lines) {
    SessionInput session{lines, {}};
    return Parser(text, session).lone_multisegment();
}

std::string print_session(const SessionInput& session) {
    std::ostringstream out;
    for (const auto& decl : session.lines.declarations()) {
        if (decl.id == character_line().id) continue;
        out << "line " << decl.id << " size " << decl.size << " dual " << decl.dual_id << ";\n";
    }
    for (const auto& m : session.multisegments) out << m.to_string() << "\n";
    return out.str();
}

bool same_session(const SessionInput& lhs, const SessionInput& rhs) {
    const auto a = lhs.lines.declarations();
    const auto b = rhs.lines.declarations();
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].id != b[k].id || a[k].size != b[k].size || a[k].dual_id != b[k].dual_id) return false;
    return lhs.multisegments == rhs.multisegments;
}

}  // namespace zelevinsky
