#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace tableau {

// Exact rational number backed by GMP. Values are kept in canonical form:
// positive denominator, numerator and denominator coprime.
class Rational {
public:
    Rational() = default;
    template <std::integral T>
        requires(sizeof(T) <= sizeof(long))
    Rational(T value)
    {
        if constexpr (std::is_signed_v<T>) {
            value_ = static_cast<long>(value);
        } else {
            value_ = static_cast<unsigned long>(value);
        }
    }
    /// Throws ParseError on a zero denominator.
    Rational(long long numerator, long long denominator);
    explicit Rational(mpq_class value);

    /// Accepts "p" or "p/q" with an optional leading minus; q must be positive.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class &raw() const { return value_; }

    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    /// Throws std::domain_error on division by zero.
    Rational &operator/=(const Rational &rhs);

    /// this -= a * b, without a temporary.
    void sub_mul(const Rational &a, const Rational &b);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational &x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational &lhs, const Rational &rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs);

private:
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &x);

} // namespace tableau
