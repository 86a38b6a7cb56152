#pragma once

/**
 * @file faulhaber.hpp
 * @brief Power sums S_m(n) = 1^m + ... + n^m and their Faulhaber forms.
 *
 * For m >= 1,
 *   S_{2m}   = S_2   * (b_{m,0} + b_{m,1} S_1 + ... + b_{m,m-1} S_1^{m-1})
 *   S_{2m+1} = S_1^2 * (c_{m,0} + c_{m,1} S_1 + ... + c_{m,m-1} S_1^{m-1})
 *
 * The b and c coefficients come from closed forms built on the U-basis
 * expansion coefficients of Bernoulli polynomials,
 *   B_{2m}(x)   = sum_j hat_b_even(m, j) U(x)^j
 *   B_{2m+1}(x) = (x - 1/2) sum_j hat_b_odd(m, j) U(x)^j
 * with U(x) = x(x - 1)/2.
 */

#include <cstddef>
#include <string_view>
#include <vector>

#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

/// 8^j sum_{k=j}^{m} 4^-k C(2m, 2k) C(k, j) B_{2m-2k}(1/2). Requires j <= m.
Rational hat_b_even(std::size_t m, std::size_t j);

/// 8^j sum_{k=j}^{m} 4^-k C(2m+1, 2k+1) C(k, j) B_{2m-2k}(1/2). Requires j <= m.
Rational hat_b_odd(std::size_t m, std::size_t j);

/// b_{m,j} for m >= 1, j < m.
Rational coeff_b(std::size_t m, std::size_t j);

/// c_{m,j} for m >= 1, j < m.
Rational coeff_c(std::size_t m, std::size_t j);

/// c_{m,j} (3j + 6) == (4m + 2) b_{m,j}
bool bc_relation_check(std::size_t m, std::size_t j);

enum class Parity { Even, Odd };

std::string_view parity_name(Parity p);

/// S_e = prefactor * F_e(S_1); prefactor is S_2 (Even) or S_1^2 (Odd).
struct FaulhaberForm {
    std::size_t exponent = 0;
    Parity parity = Parity::Even;
    std::vector<Rational> coeffs;  ///< F_e coefficients in ascending powers of S_1

    /// m such that exponent is 2m or 2m + 1.
    std::size_t half() const { return exponent / 2; }
    Polynomial f_polynomial() const { return Polynomial(coeffs); }
};

/// Requires exponent >= 2; throws std::invalid_argument otherwise.
FaulhaberForm faulhaber_form(std::size_t exponent);

/// Sum of i^m for i = 1..n, term by term. n >= 1.
Integer power_sum_bruteforce(std::size_t m, const Integer& n);

/// (B_{m+1}(n+1) - B_{m+1}) / (m+1). Requires m >= 1, n >= 1.
Integer power_sum_bernoulli(std::size_t m, const Integer& n);

Integer s1_value(const Integer& n);
Integer s2_value(const Integer& n);

/// Horner in S_1 then multiplication by the prefactor. n >= 1.
Integer eval_faulhaber(const FaulhaberForm& form, const Integer& n);

/// S_1(n) = n(n+1)/2 and S_2(n) = n(n+1)(2n+1)/6 as PowerX polynomials in n.
Polynomial s1_polynomial();
Polynomial s2_polynomial();

/// (B_{m+1}(n+1) - B_{m+1}) / (m+1) as a polynomial in n.
Polynomial power_sum_polynomial(std::size_t m);

/// prefactor(n) * F_e(S_1(n)) as a polynomial in n.
Polynomial faulhaber_as_polynomial(const FaulhaberForm& form);

/// Structural equality of faulhaber_as_polynomial and power_sum_polynomial.
bool faulhaber_polynomial_identity(std::size_t exponent);

}  // namespace psum
