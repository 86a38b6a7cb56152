#include <doctest.h>

#include <thread>

#include "oracle.hpp"
#include "psum/bernoulli.hpp"

using namespace psum;

TEST_CASE("bernoulli_number small values")
{
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == rat(-1, 2));
    CHECK(bernoulli_number(2) == rat(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(4) == rat(-1, 30));
    CHECK(bernoulli_number(12) == rat(-691, 2730));
    CHECK(bernoulli_number(20) == rat(-174611, 330));
}

TEST_CASE("recurrence agrees with Akiyama-Tanigawa up to 120")
{
    const auto reference = oracle::bernoulli_numbers(121);
    for (std::size_t j = 0; j <= 120; ++j)
        REQUIRE(bernoulli_number(j) == reference[j]);
}

TEST_CASE("odd Bernoulli numbers vanish")
{
    for (std::size_t k = 1; k <= 100; ++k)
        REQUIRE(bernoulli_number(2 * k + 1).is_zero());
}

TEST_CASE("bernoulli_polynomial")
{
    CHECK(bernoulli_polynomial(0) == Polynomial({1}));
    CHECK(bernoulli_polynomial(2) == Polynomial({rat(1, 6), -1, 1}));
    CHECK(bernoulli_polynomial(3) == Polynomial({0, rat(1, 2), rat(-3, 2), 1}));
    for (std::size_t m = 0; m <= 100; ++m) {
        REQUIRE(bernoulli_polynomial(m).degree() == static_cast<long>(m));
        REQUIRE(eval(bernoulli_polynomial(m), 0) == bernoulli_number(m));
    }
}

TEST_CASE("half-value property")
{
    CHECK(check_half_value(1));
    CHECK(eval(bernoulli_polynomial(1), rat(1, 2)) == 0);
    CHECK(check_half_value(3));
    CHECK(check_half_value(4));
    CHECK(bernoulli_half_value(4) == rat(7, 240));
    CHECK(eval(bernoulli_polynomial(4), rat(1, 2)) == rat(7, 240));
    CHECK(bernoulli_half_value(0) == 1);
    for (std::size_t m = 0; m <= 100; ++m)
        REQUIRE(check_half_value(m));
}

TEST_CASE("derivative property")
{
    CHECK(check_derivative_property(4, 1));
    CHECK(check_derivative_property(5, 5));
    CHECK(derivative(bernoulli_polynomial(5), 5) == Polynomial({120}));
    CHECK(check_derivative_property(3, 0));
    CHECK(check_derivative_property(3, 7));
    for (std::size_t m = 0; m <= 40; ++m)
        for (std::size_t k = 0; k <= m; ++k)
            REQUIRE(check_derivative_property(m, k));
}

TEST_CASE("cache grows monotonically and is safe to share")
{
    BernoulliCache cache;
    CHECK(cache.size() == 1);
    CHECK(cache.number(10) == rat(5, 66));
    CHECK(cache.size() == 11);
    CHECK(cache.number(4) == rat(-1, 30));
    CHECK(cache.size() == 11);

    BernoulliCache shared;
    std::vector<Rational> seen(8);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < seen.size(); ++t)
            pool.emplace_back([&, t] { seen[t] = shared.number(60 + t); });
    }
    const auto reference = oracle::bernoulli_numbers(68);
    for (std::size_t t = 0; t < seen.size(); ++t)
        CHECK(seen[t] == reference[60 + t]);
}

TEST_CASE("von Staudt-Clausen: even-index denominators are squarefree")
{
    for (std::size_t k = 1; k <= 60; ++k) {
        const Integer d = bernoulli_number(2 * k).denominator();
        for (unsigned long p = 2; p * p <= d; ++p)
            REQUIRE(d % (p * p) != 0);
    }
}
