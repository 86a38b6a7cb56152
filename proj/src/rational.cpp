#include "psum/rational.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace psum {

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
    check();
}

void Rational::check() const
{
#ifndef NDEBUG
    Integer g;
    mpz_gcd(g.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    assert(v_.get_den() > 0);
    assert(g == 1);
#endif
}

Rational& Rational::operator+=(const Rational& o)
{
    v_ += o.v_;
    check();
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    v_ -= o.v_;
    check();
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    v_ *= o.v_;
    check();
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    v_ /= o.v_;
    check();
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-v_));
}

std::string Rational::to_string() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

Rational rat(const Integer& num, const Integer& den)
{
    return Rational(num, den);
}

Rational pow(const Rational& base, unsigned long exponent)
{
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), exponent);
    // powers of coprime integers stay coprime and den^e > 0
    return Rational(std::move(r));
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    // After step i the running value is C(n - k + i, i), so each division is exact.
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

}  // namespace psum
