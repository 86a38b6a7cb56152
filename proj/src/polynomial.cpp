#include "psum/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace psum {

namespace {

const Rational kHalf = rat(1, 2);

void require_same_basis(const Polynomial& p, const Polynomial& q, const char* op)
{
    if (p.basis() != q.basis())
        throw std::invalid_argument(std::string(op) + ": basis mismatch (" +
                                    std::string(basis_name(p.basis())) + " vs " +
                                    std::string(basis_name(q.basis())) + ")");
}

// Coefficients of p(t + shift) given those of p(t).
std::vector<Rational> taylor_shift(const std::vector<Rational>& c, const Rational& shift)
{
    std::vector<Rational> out(c.size());
    const auto n = static_cast<std::int64_t>(c.size());
    std::vector<Rational> shift_pow{Rational(1)};
    for (std::int64_t i = 1; i < n; ++i)
        shift_pow.push_back(shift_pow.back() * shift);
    for (std::int64_t i = 0; i < n; ++i) {
        if (c[i].is_zero())
            continue;
        for (std::int64_t k = 0; k <= i; ++k)
            out[k] += c[i] * Rational(binomial(i, k)) * shift_pow[i - k];
    }
    return out;
}

}  // namespace

std::string_view basis_name(Basis b)
{
    switch (b) {
    case Basis::PowerX: return "x";
    case Basis::CenteredHalf: return "centered";
    case Basis::UBasis: return "u";
    }
    return "?";
}

Polynomial::Polynomial(std::vector<Rational> coeffs, Basis basis)
    : coeffs_(std::move(coeffs)), basis_(basis)
{
    normalize();
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c, Basis basis)
{
    return Polynomial({c}, basis);
}

Polynomial Polynomial::variable(Basis basis)
{
    return Polynomial({Rational(0), Rational(1)}, basis);
}

Polynomial Polynomial::quadratic_u()
{
    return Polynomial({Rational(0), -kHalf, kHalf});
}

Rational Polynomial::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

long Polynomial::degree_in_x() const
{
    return basis_ == Basis::UBasis && !is_zero() ? 2 * degree() : degree();
}

Rational eval_in_basis(const Polynomial& p, const Rational& t)
{
    Rational acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Rational eval(const Polynomial& p, const Rational& x0)
{
    switch (p.basis()) {
    case Basis::PowerX: return eval_in_basis(p, x0);
    case Basis::CenteredHalf: return eval_in_basis(p, x0 - kHalf);
    case Basis::UBasis: return eval_in_basis(p, x0 * (x0 - 1) / 2);
    }
    return {};
}

Polynomial add(const Polynomial& p, const Polynomial& q)
{
    require_same_basis(p, q, "add");
    std::vector<Rational> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = p.coeff(i) + q.coeff(i);
    return Polynomial(std::move(c), p.basis());
}

Polynomial sub(const Polynomial& p, const Polynomial& q)
{
    require_same_basis(p, q, "sub");
    return add(p, scale(q, -1));
}

Polynomial mul(const Polynomial& p, const Polynomial& q)
{
    require_same_basis(p, q, "mul");
    if (p.is_zero() || q.is_zero())
        return Polynomial({}, p.basis());
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Rational> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return Polynomial(std::move(c), p.basis());
}

Polynomial scale(const Polynomial& p, const Rational& c)
{
    std::vector<Rational> out = p.coeffs();
    for (auto& v : out)
        v *= c;
    return Polynomial(std::move(out), p.basis());
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
Polynomial operator*(const Rational& c, const Polynomial& p) { return scale(p, c); }

Polynomial derivative(const Polynomial& p, unsigned k)
{
    if (p.basis() == Basis::UBasis)
        throw std::invalid_argument("derivative: convert UBasis polynomial first");
    const auto& c = p.coeffs();
    if (k >= c.size())
        return Polynomial({}, p.basis());
    // d^k/dx^k t^i = i!/(i-k)! t^(i-k) for t = x or t = x - 1/2
    std::vector<Rational> out(c.size() - k);
    for (std::size_t i = k; i < c.size(); ++i) {
        Integer falling = 1;
        for (std::size_t r = 0; r < k; ++r)
            falling *= static_cast<unsigned long>(i - r);
        out[i - k] = c[i] * Rational(falling);
    }
    return Polynomial(std::move(out), p.basis());
}

Polynomial to_centered(const Polynomial& p)
{
    switch (p.basis()) {
    case Basis::CenteredHalf: return p;
    case Basis::PowerX:
        // x = t + 1/2
        return Polynomial(taylor_shift(p.coeffs(), kHalf), Basis::CenteredHalf);
    case Basis::UBasis: return to_centered(to_power_x(p));
    }
    return p;
}

Polynomial from_centered(const Polynomial& p)
{
    if (p.basis() != Basis::CenteredHalf)
        return to_power_x(p);
    // t = x - 1/2
    return Polynomial(taylor_shift(p.coeffs(), -kHalf), Basis::PowerX);
}

USplit to_u_basis(const Polynomial& p)
{
    if (p.basis() == Basis::UBasis)
        throw std::invalid_argument("to_u_basis: input is already a U-basis polynomial");
    const Polynomial centered = to_centered(p);
    const auto& v = centered.coeffs();

    // t^(2i) = 4^-i (1 + 8U)^i = 4^-i sum_j C(i, j) 8^j U^j, with t = x - 1/2
    const std::size_t half_len = (v.size() + 1) / 2;
    std::vector<Rational> even(half_len), odd(half_len);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        const std::size_t i = k / 2;
        auto& target = (k % 2 == 0) ? even : odd;
        const Rational base = v[k] * pow(rat(1, 4), i);
        for (std::size_t j = 0; j <= i; ++j)
            target[j] += base * Rational(binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j))) *
                         pow(Rational(8), j);
    }
    USplit out{Rational(0), Polynomial(std::move(even), Basis::UBasis),
               Polynomial(std::move(odd), Basis::UBasis)};
    out.constant = out.even.coeff(0);
    return out;
}

Polynomial from_u_basis(const Polynomial& even, const Polynomial& odd)
{
    if (even.basis() != Basis::UBasis || odd.basis() != Basis::UBasis)
        throw std::invalid_argument("from_u_basis: parts must be UBasis polynomials");
    const Polynomial u = Polynomial::quadratic_u();
    const Polynomial shifted_x({-kHalf, Rational(1)});
    const Polynomial e = compose(Polynomial(even.coeffs()), u);
    const Polynomial o = compose(Polynomial(odd.coeffs()), u);
    return e + shifted_x * o;
}

Polynomial compose(const Polynomial& p, const Polynomial& q)
{
    if (p.basis() != Basis::PowerX || q.basis() != Basis::PowerX)
        throw std::invalid_argument("compose: PowerX polynomials required");
    Polynomial acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * q + Polynomial::constant(*it);
    return acc;
}

Polynomial compose_linear(const Polynomial& p, const Rational& a, const Rational& b)
{
    if (p.basis() != Basis::PowerX)
        throw std::invalid_argument("compose_linear: PowerX polynomial required");
    return compose(p, Polynomial({b, a}));
}

Polynomial to_power_x(const Polynomial& p)
{
    switch (p.basis()) {
    case Basis::PowerX: return p;
    case Basis::CenteredHalf: return from_centered(p);
    case Basis::UBasis: return from_u_basis(p, Polynomial({}, Basis::UBasis));
    }
    return p;
}

}  // namespace psum
