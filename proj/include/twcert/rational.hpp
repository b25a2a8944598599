#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twcert {

/// Exact rational number over 64-bit integers, always kept in lowest terms
/// with a positive denominator. Arithmetic is carried out in 128 bits and
/// throws std::overflow_error if the reduced result does not fit.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    [[nodiscard]] bool is_integer() const { return den_ == 1; }
    [[nodiscard]] bool is_positive() const { return num_ > 0; }

    /// Largest integer not exceeding the value.
    [[nodiscard]] std::int64_t floor() const
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) {
            --q;
        }
        return q;
    }

    /// "num/den" (denominator always written, "3/1" for integers).
    [[nodiscard]] std::string to_string() const
    {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational & a, const Rational & b)
    {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational & a, const Rational & b)
    {
        return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational & a, const Rational & b)
    {
        return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational & a, const Rational & b)
    {
        if (b.num_ == 0) {
            throw std::domain_error("rational division by zero");
        }
        return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    }
    Rational & operator+=(const Rational & o) { return *this = *this + o; }
    Rational & operator-=(const Rational & o) { return *this = *this - o; }
    Rational & operator*=(const Rational & o) { return *this = *this * o; }
    Rational & operator/=(const Rational & o) { return *this = *this / o; }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational & a, const Rational & b)
    {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream & operator<<(std::ostream & os, const Rational & r) { return os << r.to_string(); }

private:
    void assign(std::int64_t num, std::int64_t den)
    {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        *this = from_wide(num, den);
    }

    static Rational from_wide(__int128 num, __int128 den)
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr __int128 lo = INT64_MIN;
        constexpr __int128 hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) {
            throw std::overflow_error("rational overflow");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Least common multiple with overflow checking.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

} // namespace twcert
