#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace zelevinsky {

/// Exact exponent c of an unramified twist ν^c, restricted to the half lattice ½ℤ.
///
/// Stored as twice its value, so all arithmetic is exact integer arithmetic.
class Exponent {
public:
    constexpr Exponent() = default;
    constexpr Exponent(std::int64_t integer) : halves_(2 * integer) {}  // NOLINT: integers convert implicitly

    static constexpr Exponent from_halves(std::int64_t halves) {
        Exponent e;
        e.halves_ = halves;
        return e;
    }

    /// Builds num/den; throws std::invalid_argument unless the reduced denominator is 1 or 2.
    static Exponent from_fraction(std::int64_t num, std::int64_t den);

    /// Parses "3", "-1/2", "+5/2". Decimals are rejected.
    static Exponent parse(const std::string& text);

    static constexpr Exponent half() { return from_halves(1); }

    constexpr std::int64_t halves() const { return halves_; }
    constexpr bool is_integer() const { return halves_ % 2 == 0; }

    /// Exponents lie in the same ℤ-coset iff they differ by an integer.
    constexpr bool same_coset(Exponent other) const { return (halves_ - other.halves_) % 2 == 0; }

    /// Representative of the ℤ-coset in [0, 1): either 0 or 1/2.
    constexpr Exponent residue() const { return from_halves(is_integer() ? 0 : 1); }

    /// Integer value; only meaningful when is_integer().
    constexpr std::int64_t as_integer() const { return halves_ / 2; }

    constexpr Exponent operator-() const { return from_halves(-halves_); }
    constexpr Exponent operator+(Exponent o) const { return from_halves(halves_ + o.halves_); }
    constexpr Exponent operator-(Exponent o) const { return from_halves(halves_ - o.halves_); }
    constexpr Exponent& operator+=(Exponent o) {
        halves_ += o.halves_;
        return *this;
    }
    constexpr Exponent& operator-=(Exponent o) {
        halves_ -= o.halves_;
        return *this;
    }

    constexpr auto operator<=>(const Exponent&) const = default;

    /// "2", "-3/2", "1/2".
    std::string to_string() const;

private:
    std::int64_t halves_ = 0;
};

}  // namespace zelevinsky

template <>
struct std::hash<zelevinsky::Exponent> {
    std::size_t operator()(zelevinsky::Exponent e) const noexcept { return std::hash<std::int64_t>{}(e.halves()); }
};
