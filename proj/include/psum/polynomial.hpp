#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over Rational in one of three bases.
 *
 * A Polynomial stores coefficients c_0, c_1, ... of
 *   PowerX:       x^k
 *   CenteredHalf: (x - 1/2)^k
 *   UBasis:       U(x)^k,  U(x) = x(x - 1)/2
 *
 * The zero polynomial is the empty coefficient list and has degree -1.
 * Trailing zeros are stripped on construction and after every operation.
 */

#include <string_view>
#include <vector>

#include "psum/rational.hpp"

namespace psum {

enum class Basis { PowerX, CenteredHalf, UBasis };

std::string_view basis_name(Basis b);

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs, Basis basis = Basis::PowerX);

    static Polynomial constant(const Rational& c, Basis basis = Basis::PowerX);
    /// x in PowerX, (x - 1/2) in CenteredHalf, U in UBasis.
    static Polynomial variable(Basis basis = Basis::PowerX);
    /// U(x) = (x^2 - x)/2 written in PowerX.
    static Polynomial quadratic_u();

    Basis basis() const { return basis_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of the k-th basis element; zero past the end.
    Rational coeff(std::size_t k) const;

    /// Degree in the polynomial's own basis; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Degree as a function of x (twice the stored degree in UBasis).
    long degree_in_x() const;
    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
    Basis basis_ = Basis::PowerX;
};

/// Exact value at x0. UBasis polynomials are evaluated at u = U(x0).
Rational eval(const Polynomial& p, const Rational& x0);

/// Horner evaluation with the basis variable itself as argument.
Rational eval_in_basis(const Polynomial& p, const Rational& t);

/// Same-basis arithmetic; mismatched bases throw std::invalid_argument.
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& c, const Polynomial& p);

/// k-th derivative with respect to x. PowerX and CenteredHalf only.
Polynomial derivative(const Polynomial& p, unsigned k = 1);

Polynomial to_centered(const Polynomial& p);
Polynomial from_centered(const Polynomial& p);

/// p(x) = even(U(x)) + (x - 1/2) * odd(U(x)); defined for every polynomial.
struct USplit {
    Rational constant;  ///< even.coeff(0)
    Polynomial even;
    Polynomial odd;
};

/// Accepts PowerX or CenteredHalf input.
USplit to_u_basis(const Polynomial& p);
Polynomial from_u_basis(const Polynomial& even, const Polynomial& odd);

/// p(a*x + b), PowerX only.
Polynomial compose_linear(const Polynomial& p, const Rational& a, const Rational& b);

/// p(q(x)) for PowerX p and q.
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// Converts any basis to PowerX; a UBasis input is read as p(U(x)).
Polynomial to_power_x(const Polynomial& p);

}  // namespace psum
