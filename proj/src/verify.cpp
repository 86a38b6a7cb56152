#include "psum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "psum/bernoulli.hpp"
#include "psum/faulhaber.hpp"

namespace psum {

namespace {

const Rational kHalf = rat(1, 2);

std::string list_witness(const std::vector<Rational>& values)
{
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += values[i].to_string();
    }
    return out + "]";
}

std::vector<Rational> coeff_range(const Polynomial& p, std::size_t count)
{
    std::vector<Rational> out;
    for (std::size_t j = 0; j < count; ++j)
        out.push_back(p.coeff(j));
    return out;
}

// Every B_k with k odd and 3 <= k <= top is zero.
Check odd_bernoulli_zero(std::size_t top, const std::string& name)
{
    Check c{name, true, "none"};
    for (std::size_t k = 3; k <= top; k += 2) {
        if (!bernoulli_number(k).is_zero()) {
            c.pass = false;
            c.witness = "B_" + std::to_string(k) + " = " + bernoulli_number(k).to_string();
            return c;
        }
    }
    if (top >= 3)
        c.witness = "B_3..B_" + std::to_string(top % 2 ? top : top - 1) + " = 0";
    return c;
}

// B_k(1/2) evaluated from the polynomial for every k in ks; all must vanish.
// Since B_k(1/2) = (2^(1-k) - 1) B_k and the factor is nonzero for k >= 2, this pins B_k = 0.
Check half_values_vanish(const std::vector<std::size_t>& ks, const std::string& name)
{
    Check c{name, true, ""};
    for (std::size_t k : ks) {
        const Rational v = eval(bernoulli_polynomial(k), kHalf);
        if (!v.is_zero() || (k >= 2 && bernoulli_half_value(k) != v)) {
            c.pass = false;
            c.witness = "B_" + std::to_string(k) + "(1/2) = " + v.to_string();
            return c;
        }
    }
    c.witness = std::to_string(ks.size()) + " values";
    return c;
}

TheoremReport finish(TheoremId id, std::size_t m, std::vector<Check> checks)
{
    TheoremReport r{id, m, std::move(checks), true};
    r.verdict = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
    return r;
}

void require_m(TheoremId id, std::size_t m)
{
    if (m < theorem_min_m(id))
        throw std::invalid_argument(std::string(theorem_name(id)) + " requires m >= " +
                                    std::to_string(theorem_min_m(id)));
}

Check symmetry_check(const Polynomial& p, SymmetryKind kind, const std::string& name)
{
    const SymmetryReport s = check_symmetry(p, kHalf, kind);
    Check c{name, s.verdict && s.methods_agree(), ""};
    if (!s.methods_agree())
        c.witness = "derivative and reflection methods disagree";
    else if (!s.failures.empty())
        c.witness = "order " + std::to_string(s.failures.front().order) + " = " +
                    s.failures.front().value.to_string();
    else
        c.witness = std::to_string(s.orders_checked.size()) + " orders vanish";
    return c;
}

}  // namespace

SymmetryReport check_symmetry(const Polynomial& p, const Rational& s, SymmetryKind kind)
{
    const Polynomial f = to_power_x(p);
    if (f.degree() <= 1)
        throw std::invalid_argument("Theorem 1 requires degree > 1");

    SymmetryReport report;
    report.center = s;
    report.kind = kind;
    const unsigned deg = static_cast<unsigned>(f.degree());
    for (unsigned i = kind == SymmetryKind::Line ? 1 : 2; i <= deg; i += 2) {
        report.orders_checked.push_back(i);
        Rational v = eval(derivative(f, i), s);
        if (!v.is_zero())
            report.failures.push_back({i, std::move(v)});
    }
    report.verdict = report.failures.empty();

    const Polynomial right = compose_linear(f, 1, s);
    const Polynomial left = compose_linear(f, -1, s);
    if (kind == SymmetryKind::Line)
        report.reflection_holds = right == left;
    else
        report.reflection_holds = right + left == Polynomial::constant(2 * eval(f, s));
    return report;
}

std::string_view theorem_name(TheoremId id)
{
    switch (id) {
    case TheoremId::T2Even: return "T2-even";
    case TheoremId::T2Odd: return "T2-odd";
    case TheoremId::T3Even: return "T3-even";
    case TheoremId::T3Odd: return "T3-odd";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name)
{
    for (TheoremId id : all_theorems())
        if (theorem_name(id) == name)
            return id;
    return std::nullopt;
}

std::size_t theorem_min_m(TheoremId id)
{
    return id == TheoremId::T2Even ? 2 : 1;
}

std::set<TheoremId> all_theorems()
{
    return {TheoremId::T2Even, TheoremId::T2Odd, TheoremId::T3Even, TheoremId::T3Odd};
}

TheoremReport verify_theorem2_even(std::size_t m)
{
    require_m(TheoremId::T2Even, m);
    const Polynomial b = bernoulli_polynomial(2 * m);
    const USplit split = to_u_basis(b);
    std::vector<Check> checks;

    checks.push_back({"odd part vanishes", split.odd.is_zero(),
                      "odd degree " + std::to_string(split.odd.degree())});

    const auto hat = coeff_range(split.even, m + 1);
    bool shape = split.even.degree() == static_cast<long>(m) && hat[0] == bernoulli_number(2 * m) &&
                 hat[1].is_zero();
    for (std::size_t j = 2; j <= m; ++j)
        shape = shape && !hat[j].is_zero();
    checks.push_back({"hat_b_0 = B_2m, hat_b_1 = 0, rest nonzero", shape, list_witness(hat)});

    bool closed = true;
    std::string where = std::to_string(m + 1) + " coefficients";
    for (std::size_t j = 0; j <= m && closed; ++j)
        if (hat_b_even(m, j) != hat[j]) {
            closed = false;
            where = "mismatch at j=" + std::to_string(j);
        }
    checks.push_back({"closed form matches expansion", closed, where});

    checks.push_back(symmetry_check(b, SymmetryKind::Line, "line symmetry at 1/2"));

    checks.push_back({"U-expansion reproduces B_2m",
                      from_u_basis(split.even, Polynomial({}, Basis::UBasis)) == b,
                      "degree " + std::to_string(b.degree())});

    // Converse: odd derivatives vanish at 1/2, so B_{2m-i}(1/2) = 0 for odd i.
    std::vector<std::size_t> ks;
    for (std::size_t i = 1; i < 2 * m; i += 2)
        ks.push_back(2 * m - i);
    checks.push_back(half_values_vanish(ks, "B_{2m-i}(1/2) = 0 for odd i"));
    checks.push_back(odd_bernoulli_zero(2 * m - 1, "B_3..B_{2m-1} vanish"));
    return finish(TheoremId::T2Even, m, std::move(checks));
}

TheoremReport verify_theorem2_odd(std::size_t m)
{
    require_m(TheoremId::T2Odd, m);
    const Polynomial b = bernoulli_polynomial(2 * m + 1);
    const USplit split = to_u_basis(b);
    std::vector<Check> checks;

    checks.push_back({"even part vanishes", split.even.is_zero(),
                      "even degree " + std::to_string(split.even.degree())});

    const auto hat = coeff_range(split.odd, m + 1);
    bool shape = split.odd.degree() == static_cast<long>(m) && hat[0].is_zero();
    for (std::size_t j = 1; j <= m; ++j)
        shape = shape && !hat[j].is_zero();
    checks.push_back({"hat_b_0 = 0, rest nonzero", shape, list_witness(hat)});

    bool closed = true;
    std::string where = std::to_string(m + 1) + " coefficients";
    for (std::size_t j = 0; j <= m && closed; ++j)
        if (hat_b_odd(m, j) != hat[j]) {
            closed = false;
            where = "mismatch at j=" + std::to_string(j);
        }
    checks.push_back({"closed form matches expansion", closed, where});

    Check sym = symmetry_check(b, SymmetryKind::Point, "point symmetry at (1/2, 0)");
    const Rational at_half = eval(b, kHalf);
    if (!at_half.is_zero()) {
        sym.pass = false;
        sym.witness = "B_2m+1(1/2) = " + at_half.to_string();
    }
    checks.push_back(sym);

    checks.push_back({"U-expansion reproduces B_2m+1",
                      from_u_basis(Polynomial({}, Basis::UBasis), split.odd) == b,
                      "degree " + std::to_string(b.degree())});

    // Converse: even derivatives vanish at 1/2, so B_{2m+1-i}(1/2) = 0 for even i.
    std::vector<std::size_t> ks;
    for (std::size_t i = 0; i < 2 * m; i += 2)
        ks.push_back(2 * m + 1 - i);
    checks.push_back(half_values_vanish(ks, "B_{2m+1-i}(1/2) = 0 for even i"));
    checks.push_back(odd_bernoulli_zero(2 * m + 1, "B_3..B_{2m+1} vanish"));
    return finish(TheoremId::T2Odd, m, std::move(checks));
}

TheoremReport verify_theorem3_even(std::size_t m)
{
    require_m(TheoremId::T3Even, m);
    const FaulhaberForm form = faulhaber_form(2 * m);
    std::vector<Check> checks;

    checks.push_back({"S_2m = S_2 F(S_1) as polynomials in n", faulhaber_polynomial_identity(2 * m),
                      list_witness(form.coeffs)});

    // b_{m,j} = 3/(4m+2) hat_b_{j+1} with hat_b taken from the expansion of B_{2m+1}
    const USplit split = to_u_basis(bernoulli_polynomial(2 * m + 1));
    bool from_expansion = form.coeffs.size() == m;
    for (std::size_t j = 0; j < m && from_expansion; ++j)
        from_expansion = form.coeffs[j] == rat(3, 4 * m + 2) * split.odd.coeff(j + 1);
    checks.push_back({"b_{m,j} = 3/(4m+2) hat_b_{j+1}", from_expansion, std::to_string(m) + " coefficients"});

    const Rational anchor = 6 * bernoulli_number(2 * m);
    checks.push_back({"b_{m,0} = 6 B_2m", form.coeffs.front() == anchor, anchor.to_string()});

    const Rational s2_at = eval(s2_polynomial(), -kHalf);
    checks.push_back({"S_2(-1/2) = 0", s2_at.is_zero(), s2_at.to_string()});

    // (2m+1) S_2 F(S_1) = B_{2m+1}(n+1) - B_{2m+1} evaluated at n = -1/2
    const Rational b_odd = bernoulli_number(2 * m + 1);
    const Rational lhs = Rational(static_cast<long>(2 * m + 1)) * eval(faulhaber_as_polynomial(form), -kHalf);
    const Rational rhs = eval(bernoulli_polynomial(2 * m + 1), kHalf) - b_odd;
    checks.push_back({"B_{2m+1}(1/2) = B_{2m+1} from the identity at n = -1/2", lhs == rhs && lhs.is_zero(),
                      rhs.to_string()});

    // B(1/2) = B and B(1/2) = (2^-2m - 1) B together give (2 - 2^-2m) B = 0.
    const Rational factor = 2 - pow(rat(1, 4), m);
    const bool p1 = bernoulli_half_value(2 * m + 1) == eval(bernoulli_polynomial(2 * m + 1), kHalf);
    checks.push_back({"half-value property forces B_{2m+1} = 0", p1 && !factor.is_zero() && (factor * b_odd).is_zero() &&
                                                     b_odd.is_zero(),
                      "B_" + std::to_string(2 * m + 1) + " = " + b_odd.to_string()});
    return finish(TheoremId::T3Even, m, std::move(checks));
}

TheoremReport verify_theorem3_odd(std::size_t m)
{
    require_m(TheoremId::T3Odd, m);
    const FaulhaberForm form = faulhaber_form(2 * m + 1);
    std::vector<Check> checks;

    checks.push_back({"S_2m+1 = S_1^2 F(S_1) as polynomials in n", faulhaber_polynomial_identity(2 * m + 1),
                      list_witness(form.coeffs)});

    // c_{m,j} = hat_b_{j+2} / (2m+2) with hat_b taken from the expansion of B_{2m+2}
    const Polynomial b_next = bernoulli_polynomial(2 * m + 2);
    const USplit split = to_u_basis(b_next);
    bool from_expansion = form.coeffs.size() == m;
    for (std::size_t j = 0; j < m && from_expansion; ++j)
        from_expansion = form.coeffs[j] == split.even.coeff(j + 2) / Rational(static_cast<long>(2 * m + 2));
    checks.push_back({"c_{m,j} = hat_b_{j+2} / (2m+2)", from_expansion, std::to_string(m) + " coefficients"});

    const Rational anchor = Rational(static_cast<long>(4 * m + 2)) * bernoulli_number(2 * m);
    bool relation = form.coeffs.front() == anchor;
    for (std::size_t j = 0; j < m; ++j)
        relation = relation && bc_relation_check(m, j);
    checks.push_back({"c_{m,0} = (4m+2) B_2m and c/b relation", relation, anchor.to_string()});

    // Converse: S_1 = U(n+1), so the form rebuilds B_{2m+2}(x) = B_{2m+2} + (2m+2) U^2 F(U).
    std::vector<Rational> u_coeffs(2);
    u_coeffs[0] = bernoulli_number(2 * m + 2);
    for (const auto& c : form.coeffs)
        u_coeffs.push_back(Rational(static_cast<long>(2 * m + 2)) * c);
    const Polynomial rebuilt_u(std::move(u_coeffs), Basis::UBasis);
    const Polynomial rebuilt = to_power_x(rebuilt_u);
    checks.push_back({"B_2m+2(x) = B_2m+2 + (2m+2) U^2 F(U)", rebuilt == b_next,
                      "degree " + std::to_string(rebuilt.degree())});

    Check sym = symmetry_check(rebuilt, SymmetryKind::Line, "rebuilt B_2m+2 has line symmetry at 1/2");
    checks.push_back(sym);

    // B'_{2m+2}(1/2) = (2m+2) B_{2m+1}(1/2) = 0 and (2^-2m - 1) != 0 give B_{2m+1} = 0.
    const Rational slope = eval(derivative(rebuilt, 1), kHalf);
    const Rational b_odd = bernoulli_number(2 * m + 1);
    const bool forced = slope.is_zero() && check_derivative_property(2 * m + 2, 1) &&
                        check_half_value(2 * m + 1) && b_odd.is_zero();
    checks.push_back({"line symmetry forces B_{2m+1} = 0", forced,
                      "B_" + std::to_string(2 * m + 1) + " = " + b_odd.to_string()});
    return finish(TheoremId::T3Odd, m, std::move(checks));
}

std::vector<TheoremReport> verify_theorem3(std::size_t m)
{
    return {verify_theorem3_even(m), verify_theorem3_odd(m)};
}

TheoremReport verify(TheoremId id, std::size_t m)
{
    switch (id) {
    case TheoremId::T2Even: return verify_theorem2_even(m);
    case TheoremId::T2Odd: return verify_theorem2_odd(m);
    case TheoremId::T3Even: return verify_theorem3_even(m);
    case TheoremId::T3Odd: return verify_theorem3_odd(m);
    }
    throw std::invalid_argument("unknown theorem");
}

std::vector<TheoremReport> sweep(std::size_t max_m, const std::set<TheoremId>& which, unsigned threads)
{
    if (max_m == 0)
        throw std::invalid_argument("sweep requires max_m >= 1");

    struct Task {
        TheoremId id;
        std::size_t m;
    };
    std::vector<Task> tasks;
    for (TheoremId id : which)
        for (std::size_t m = theorem_min_m(id); m <= max_m; ++m)
            tasks.push_back({id, m});

    std::vector<TheoremReport> reports(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                reports[i] = verify(tasks[i].id, tasks[i].m);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return reports;
}

}  // namespace psum
