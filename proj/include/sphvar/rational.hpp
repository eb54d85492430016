#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sphvar {

/**
 * Exact rational number with 64-bit numerator and positive denominator,
 * always stored in lowest terms. Intermediate products use 128-bit
 * integers; results that do not fit in 64 bits throw InvalidInput.
 */
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    /** Parses "a", "a/b" or a finite decimal such as "2.25" exactly. */
    static Rational parse(const std::string& text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace sphvar
