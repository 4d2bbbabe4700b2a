#include "tableau/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "tableau/errors.hpp"

namespace tableau {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(long long numerator, long long denominator)
{
    if (denominator == 0) {
        throw ParseError("zero denominator");
    }
    value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("invalid rational '" + std::string(text) + "': zero denominator");
    }
    if (negative) {
        n = -n;
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational &Rational::operator+=(const Rational &rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

void Rational::sub_mul(const Rational &a, const Rational &b)
{
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs)
{
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.str(); }

} // namespace tableau
