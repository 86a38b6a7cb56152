#include <doctest.h>

#include <stdexcept>

#include "oracle.hpp"
#include "psum/bernoulli.hpp"
#include "psum/faulhaber.hpp"

using namespace psum;

TEST_CASE("hat_b_even")
{
    CHECK(hat_b_even(2, 2) == 4);
    CHECK(hat_b_even(2, 1) == 0);
    CHECK(hat_b_even(2, 0) == rat(-1, 30));
    CHECK(hat_b_even(0, 0) == 1);
    // B_6 = 1/42 - 2U^2 + 8U^3
    CHECK(hat_b_even(3, 0) == rat(1, 42));
    CHECK(hat_b_even(3, 2) == -2);
    CHECK(hat_b_even(3, 3) == 8);
    CHECK_THROWS_AS(hat_b_even(2, 3), std::out_of_range);
}

TEST_CASE("hat_b_odd")
{
    CHECK(hat_b_odd(1, 1) == 2);
    CHECK(hat_b_odd(1, 0) == 0);
    const USplit b5 = to_u_basis(bernoulli_polynomial(5));
    CHECK(hat_b_odd(2, 2) == b5.odd.coeff(2));
    CHECK(hat_b_odd(2, 2) == 4);
    CHECK(hat_b_odd(2, 1) == rat(-2, 3));
    CHECK_THROWS_AS(hat_b_odd(1, 2), std::out_of_range);
}

TEST_CASE("closed forms agree with the U-basis expansion")
{
    for (std::size_t m = 0; m <= 40; ++m) {
        const USplit even = to_u_basis(bernoulli_polynomial(2 * m));
        const USplit odd = to_u_basis(bernoulli_polynomial(2 * m + 1));
        REQUIRE(even.odd.is_zero());
        REQUIRE(odd.even.is_zero());
        for (std::size_t j = 0; j <= m; ++j) {
            REQUIRE(hat_b_even(m, j) == even.even.coeff(j));
            REQUIRE(hat_b_odd(m, j) == odd.odd.coeff(j));
        }
    }
}

TEST_CASE("structural zeros and nonzeros of the hat coefficients")
{
    for (std::size_t m = 0; m <= 40; ++m) {
        REQUIRE(hat_b_even(m, 0) == bernoulli_number(2 * m));
        if (m >= 2)
            REQUIRE(hat_b_even(m, 1) == 0);
        if (m >= 1)
            REQUIRE(hat_b_odd(m, 0) == 0);
        for (std::size_t j = 2; j <= m; ++j)
            REQUIRE_FALSE(hat_b_even(m, j).is_zero());
        for (std::size_t j = 1; j <= m; ++j)
            REQUIRE_FALSE(hat_b_odd(m, j).is_zero());
    }
}

TEST_CASE("coeff_b and coeff_c")
{
    CHECK(coeff_b(1, 0) == 1);
    CHECK(coeff_b(2, 0) == rat(-1, 5));
    CHECK(coeff_b(2, 1) == rat(6, 5));
    CHECK(coeff_c(1, 0) == 1);
    CHECK(coeff_c(2, 0) == rat(-1, 3));
    CHECK(coeff_c(2, 1) == rat(4, 3));
    CHECK_THROWS_AS(coeff_b(0, 0), std::out_of_range);
    CHECK_THROWS_AS(coeff_c(2, 2), std::out_of_range);

    CHECK(bc_relation_check(2, 0));
    CHECK(bc_relation_check(2, 1));
    CHECK(bc_relation_check(1, 0));
}

TEST_CASE("coefficients match a brute-force fit of the power sums")
{
    for (std::size_t e = 2; e <= 16; ++e) {
        const auto fitted = oracle::fit_faulhaber(e);
        const FaulhaberForm form = faulhaber_form(e);
        REQUIRE(form.coeffs == fitted);
    }
}

TEST_CASE("coefficient anchors and equivalent closed forms")
{
    for (std::size_t m = 1; m <= 40; ++m) {
        REQUIRE(coeff_b(m, 0) == 6 * bernoulli_number(2 * m));
        REQUIRE(coeff_c(m, 0) == Rational(static_cast<long>(4 * m + 2)) * bernoulli_number(2 * m));
        for (std::size_t j = 0; j < m; ++j) {
            REQUIRE(bc_relation_check(m, j));
            REQUIRE(coeff_b(m, j) == rat(3, 4 * m + 2) * hat_b_odd(m, j + 1));
            REQUIRE(coeff_c(m, j) == hat_b_even(m + 1, j + 2) / Rational(static_cast<long>(2 * m + 2)));
        }
    }
}

TEST_CASE("power sums")
{
    CHECK(power_sum_bruteforce(1, 3) == 6);
    CHECK(power_sum_bruteforce(2, 2) == 5);
    CHECK(power_sum_bruteforce(0, 7) == 7);
    CHECK(power_sum_bernoulli(1, 1) == 1);
    CHECK(power_sum_bernoulli(3, 2) == 9);
    CHECK(power_sum_bernoulli(7, 10) == power_sum_bruteforce(7, 10));
    CHECK(power_sum_bernoulli(7, 10) == oracle::brute_sum(7, 10));
    CHECK_THROWS_AS(power_sum_bernoulli(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(power_sum_bruteforce(2, 0), std::invalid_argument);
    CHECK(s1_value(4) == 10);
    CHECK(s2_value(4) == 30);
}

TEST_CASE("faulhaber_form")
{
    const FaulhaberForm f2 = faulhaber_form(2);
    CHECK(f2.parity == Parity::Even);
    CHECK(f2.coeffs == std::vector<Rational>{1});

    const FaulhaberForm f3 = faulhaber_form(3);
    CHECK(f3.parity == Parity::Odd);
    CHECK(f3.coeffs == std::vector<Rational>{1});

    const FaulhaberForm f4 = faulhaber_form(4);
    CHECK(f4.parity == Parity::Even);
    CHECK(f4.coeffs == std::vector<Rational>{rat(-1, 5), rat(6, 5)});

    CHECK_THROWS_WITH_AS(faulhaber_form(1), "S_0 and S_1 have no Faulhaber form; use power_sum_* directly",
                         std::invalid_argument);
    CHECK_THROWS_AS(faulhaber_form(0), std::invalid_argument);
}

TEST_CASE("eval_faulhaber")
{
    CHECK(eval_faulhaber(faulhaber_form(4), 2) == 17);
    CHECK(eval_faulhaber(faulhaber_form(5), 2) == 33);
    const Integer big("1000000");
    const Integer value = eval_faulhaber(faulhaber_form(100), big);
    CHECK(value == power_sum_bernoulli(100, big));
    CHECK(value.get_str().size() == 604);
}

TEST_CASE("Faulhaber form as a polynomial identity in n")
{
    CHECK(faulhaber_polynomial_identity(2));
    CHECK(faulhaber_polynomial_identity(3));
    CHECK(faulhaber_polynomial_identity(21));
    // S_3 = S_1^2 = (B_4(n+1) - B_4)/4
    const Polynomial s1 = s1_polynomial();
    CHECK(s1 * s1 == power_sum_polynomial(3));
    CHECK(power_sum_polynomial(2) == s2_polynomial());
    CHECK(power_sum_polynomial(1) == s1);
}

TEST_CASE("property: integer-valued evaluation across paths")
{
    for (std::size_t e = 2; e <= 12; ++e) {
        const FaulhaberForm form = faulhaber_form(e);
        for (long n = 1; n <= 30; ++n) {
            const Integer expected = oracle::brute_sum(e, n);
            REQUIRE(eval_faulhaber(form, n) == expected);
            REQUIRE(power_sum_bernoulli(e, n) == expected);
        }
    }
}
