#include "psum/faulhaber.hpp"

#include <stdexcept>
#include <string>

#include "psum/bernoulli.hpp"

namespace psum {

namespace {

using Index = std::int64_t;

Index idx(std::size_t v) { return static_cast<Index>(v); }

void require_index(bool ok, const char* fn, std::size_t m, std::size_t j)
{
    if (!ok)
        throw std::out_of_range(std::string(fn) + ": index j=" + std::to_string(j) +
                                " out of range for m=" + std::to_string(m));
}

// sum_{k=lo}^{m} 4^-k C(top, 2k + odd) C(k, pick) B_{2m-2k}(1/2)
Rational weighted_half_sum(std::size_t m, std::size_t lo, std::size_t pick, Index top, bool odd)
{
    Rational sum;
    for (std::size_t k = lo; k <= m; ++k) {
        const Rational half = bernoulli_half_value(2 * m - 2 * k);
        if (half.is_zero())
            continue;
        const Integer c = binomial(top, 2 * idx(k) + (odd ? 1 : 0)) * binomial(idx(k), idx(pick));
        sum += Rational(c) * half * pow(rat(1, 4), k);
    }
    return sum;
}

Integer to_integer(const Rational& r, const char* what)
{
    if (!r.is_integer())
        throw std::logic_error(std::string(what) + " produced non-integer " + r.to_string());
    return r.numerator();
}

void require_n(const Integer& n)
{
    if (n < 1)
        throw std::invalid_argument("power sums require n >= 1");
}

}  // namespace

Rational hat_b_even(std::size_t m, std::size_t j)
{
    require_index(j <= m, "hat_b_even", m, j);
    return pow(Rational(8), j) * weighted_half_sum(m, j, j, 2 * idx(m), false);
}

Rational hat_b_odd(std::size_t m, std::size_t j)
{
    require_index(j <= m, "hat_b_odd", m, j);
    return pow(Rational(8), j) * weighted_half_sum(m, j, j, 2 * idx(m) + 1, true);
}

Rational coeff_b(std::size_t m, std::size_t j)
{
    require_index(m >= 1 && j < m, "coeff_b", m, j);
    const Rational lead = rat(3, 4 * idx(m) + 2) * pow(Rational(8), j + 1);
    return lead * weighted_half_sum(m, j + 1, j + 1, 2 * idx(m) + 1, true);
}

Rational coeff_c(std::size_t m, std::size_t j)
{
    require_index(m >= 1 && j < m, "coeff_c", m, j);
    const Rational lead = pow(Rational(8), j + 1) / Rational(idx(j) + 2);
    return lead * weighted_half_sum(m, j + 1, j + 1, 2 * idx(m) + 1, true);
}

bool bc_relation_check(std::size_t m, std::size_t j)
{
    return coeff_c(m, j) * Rational(3 * idx(j) + 6) == Rational(4 * idx(m) + 2) * coeff_b(m, j);
}

std::string_view parity_name(Parity p)
{
    return p == Parity::Even ? "even" : "odd";
}

FaulhaberForm faulhaber_form(std::size_t exponent)
{
    if (exponent < 2)
        throw std::invalid_argument("S_0 and S_1 have no Faulhaber form; use power_sum_* directly");
    FaulhaberForm form;
    form.exponent = exponent;
    form.parity = exponent % 2 == 0 ? Parity::Even : Parity::Odd;
    const std::size_t m = exponent / 2;
    form.coeffs.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Rational c = form.parity == Parity::Even ? coeff_b(m, j) : coeff_c(m, j);
        if (c.is_zero())
            throw std::logic_error("zero Faulhaber coefficient at exponent " + std::to_string(exponent) +
                                   ", j=" + std::to_string(j));
        form.coeffs.push_back(std::move(c));
    }
    return form;
}

Integer power_sum_bruteforce(std::size_t m, const Integer& n)
{
    require_n(n);
    Integer sum = 0;
    Integer term;
    for (Integer i = 1; i <= n; ++i) {
        mpz_pow_ui(term.get_mpz_t(), i.get_mpz_t(), m);
        sum += term;
    }
    return sum;
}

Integer power_sum_bernoulli(std::size_t m, const Integer& n)
{
    if (m < 1)
        throw std::invalid_argument("the Bernoulli power-sum formula requires m >= 1");
    require_n(n);
    const Polynomial b = bernoulli_polynomial(m + 1);
    // Horner over a common denominator keeps every step in the integers.
    Integer den = 1;
    for (const auto& c : b.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    const Integer x = n + 1;
    Integer acc = 0;
    const auto& c = b.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += it->numerator() * (den / it->denominator());
    }
    const Integer constant = c.front().numerator() * (den / c.front().denominator());
    const Rational value = Rational(acc - constant, den) / Rational(idx(m) + 1);
    return to_integer(value, "power_sum_bernoulli");
}

Integer s1_value(const Integer& n)
{
    Integer v = n * (n + 1);
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
    return v;
}

Integer s2_value(const Integer& n)
{
    Integer v = n * (n + 1) * (2 * n + 1);
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 6);
    return v;
}

Integer eval_faulhaber(const FaulhaberForm& form, const Integer& n)
{
    require_n(n);
    const Integer s1 = s1_value(n);
    Integer den = 1;
    for (const auto& c : form.coeffs)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    Integer acc = 0;
    for (auto it = form.coeffs.rbegin(); it != form.coeffs.rend(); ++it) {
        acc *= s1;
        acc += it->numerator() * (den / it->denominator());
    }
    acc *= form.parity == Parity::Even ? s2_value(n) : Integer(s1 * s1);
    return to_integer(Rational(acc, den), "eval_faulhaber");
}

Polynomial s1_polynomial()
{
    return Polynomial({Rational(0), rat(1, 2), rat(1, 2)});
}

Polynomial s2_polynomial()
{
    return Polynomial({Rational(0), rat(1, 6), rat(1, 2), rat(1, 3)});
}

Polynomial power_sum_polynomial(std::size_t m)
{
    const Polynomial b = bernoulli_polynomial(m + 1);
    const Polynomial shifted = compose_linear(b, 1, 1);
    return scale(shifted - Polynomial::constant(bernoulli_number(m + 1)), rat(1, idx(m) + 1));
}

Polynomial faulhaber_as_polynomial(const FaulhaberForm& form)
{
    const Polynomial s1 = s1_polynomial();
    const Polynomial prefactor = form.parity == Parity::Even ? s2_polynomial() : s1 * s1;
    return prefactor * compose(form.f_polynomial(), s1);
}

bool faulhaber_polynomial_identity(std::size_t exponent)
{
    return faulhaber_as_polynomial(faulhaber_form(exponent)) == power_sum_polynomial(exponent);
}

}  // namespace psum
