#pragma once

/**
 * @file rational.hpp
 * @brief Exact integers and canonical rationals.
 *
 * Integer is GMP's mpz_class. Rational keeps a reduced fraction with a
 * positive denominator at all times; zero is 0/1. Structural equality of
 * two Rationals is therefore value equality.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace psum {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(const Integer& n) : v_(n) {}

    /// Throws std::domain_error("division by zero") when den == 0.
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.v_, b.v_) <=> 0;
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) { check(); }
    void check() const;

    mpq_class v_;

    friend Rational pow(const Rational& base, unsigned long exponent);
};

Rational rat(const Integer& num, const Integer& den);

/// Exact power; pow(x, 0) == 1 for every x including zero.
Rational pow(const Rational& base, unsigned long exponent);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
/// Throws std::domain_error for n < 0.
Integer binomial(std::int64_t n, std::int64_t k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace psum
