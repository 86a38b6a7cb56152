#include "psum/bernoulli.hpp"

namespace psum {

BernoulliCache::BernoulliCache() : computed_{Rational(1)} {}

std::size_t BernoulliCache::size() const
{
    std::lock_guard lock(mutex_);
    return computed_.size();
}

Rational BernoulliCache::number(std::size_t j)
{
    std::lock_guard lock(mutex_);
    extend_to(j);
    return computed_[j];
}

void BernoulliCache::extend_to(std::size_t j)
{
    while (computed_.size() <= j) {
        // B_m = -1/(m+1) * sum_{i<m} C(m+1, i) B_i
        const std::size_t m = computed_.size();
        Rational sum;
        Integer c = 1;  // C(m+1, i), advanced along the row
        for (std::size_t i = 0; i < m; ++i) {
            if (!computed_[i].is_zero())
                sum += Rational(c) * computed_[i];
            c *= static_cast<unsigned long>(m + 1 - i);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
        }
        computed_.push_back(-sum / Rational(static_cast<long>(m + 1)));
    }
}

BernoulliCache& shared_bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(std::size_t j)
{
    return shared_bernoulli_cache().number(j);
}

Polynomial bernoulli_polynomial(std::size_t m)
{
    std::vector<Rational> coeffs(m + 1);
    Integer c = 1;  // C(m, j)
    for (std::size_t j = 0; j <= m; ++j) {
        coeffs[m - j] = Rational(c) * bernoulli_number(j);
        c *= static_cast<unsigned long>(m - j);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
    }
    return Polynomial(std::move(coeffs));
}

Rational bernoulli_half_value(std::size_t m)
{
    // 2^(1-m) as an exact rational
    const Rational two_pow = m == 0 ? Rational(2) : rat(1, Integer(1) << static_cast<mp_bitcnt_t>(m - 1));
    return (two_pow - 1) * bernoulli_number(m);
}

bool check_half_value(std::size_t m)
{
    return eval(bernoulli_polynomial(m), rat(1, 2)) == bernoulli_half_value(m);
}

bool check_derivative_property(std::size_t m, std::size_t k)
{
    const Polynomial lhs = derivative(bernoulli_polynomial(m), static_cast<unsigned>(k));
    if (k > m)
        return lhs.is_zero();
    Integer factor = binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(k));
    for (std::size_t i = 2; i <= k; ++i)
        factor *= static_cast<unsigned long>(i);
    return lhs == scale(bernoulli_polynomial(m - k), Rational(factor));
}

}  // namespace psum
