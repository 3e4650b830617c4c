#include "zelevinsky/exponent.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace zelevinsky {

Exponent Exponent::from_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    if (den == 1) return Exponent(num);
    if (den == 2) return from_halves(num);
    throw std::invalid_argument("exponent denominator must be 1 or 2, got " + std::to_string(den));
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
    if (s.empty()) throw std::invalid_argument("malformed exponent '" + whole + "'");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("malformed exponent '" + whole + "'");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("exponent out of range '" + whole + "'");
    return v;
}

}  // namespace

Exponent Exponent::parse(const std::string& text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::int64_t num = parse_int(s.substr(0, slash), text);
    std::int64_t den = 1;
    if (slash != std::string_view::npos) den = parse_int(s.substr(slash + 1), text);
    return from_fraction(negative ? -num : num, den);
}

std::string Exponent::to_string() const {
    if (is_integer()) return std::to_string(halves_ / 2);
    return std::to_string(halves_) + "/2";
}

}  // namespace zelevinsky
