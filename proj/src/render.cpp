#include "psum/render.hpp"

namespace psum {

namespace {

std::string plain_power(const std::string& var, std::size_t k)
{
    return k == 1 ? var : var + "^" + std::to_string(k);
}

std::string latex_power(const std::string& var, std::size_t k)
{
    return k == 1 ? var : var + "^{" + std::to_string(k) + "}";
}

std::string latex_magnitude(const Rational& mag)
{
    if (mag.is_integer())
        return mag.to_string();
    return "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name)
{
    if (name == "plain")
        return OutputFormat::Plain;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "latex")
        return OutputFormat::Latex;
    return std::nullopt;
}

nlohmann::json rational_json(const Rational& r)
{
    return {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

nlohmann::json rationals_json(const std::vector<Rational>& values)
{
    auto arr = nlohmann::json::array();
    for (const auto& v : values)
        arr.push_back(rational_json(v));
    return arr;
}

std::string latex_rational(const Rational& r)
{
    const Rational mag = r.sign() < 0 ? -r : r;
    return (r.sign() < 0 ? "-" : "") + latex_magnitude(mag);
}

std::string render_series(const std::vector<Rational>& coeffs, const std::string& var, bool latex)
{
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c.is_zero())
            continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        std::string term;
        if (k == 0)
            term = latex ? latex_magnitude(mag) : mag.to_string();
        else if (mag == 1)
            term = latex ? latex_power(var, k) : plain_power(var, k);
        else if (latex)
            term = latex_magnitude(mag) + " " + latex_power(var, k);
        else
            term = mag.to_string() + "*" + plain_power(var, k);

        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

std::string render_rational(const Rational& r, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::Plain: return r.to_string();
    case OutputFormat::Json: return rational_json(r).dump(2);
    case OutputFormat::Latex: return latex_display(latex_rational(r));
    }
    return {};
}

std::string render_polynomial(const Polynomial& p, bool latex)
{
    std::string var;
    switch (p.basis()) {
    case Basis::PowerX: var = "x"; break;
    case Basis::CenteredHalf: var = latex ? "\\left(x - \\frac{1}{2}\\right)" : "(x - 1/2)"; break;
    case Basis::UBasis: var = "U"; break;
    }
    return render_series(p.coeffs(), var, latex);
}

std::string render_u_split(const USplit& split, bool latex)
{
    const std::string even = render_series(split.even.coeffs(), "U", latex);
    if (split.odd.is_zero())
        return even;
    const std::string odd = render_series(split.odd.coeffs(), "U", latex);
    const std::string odd_term = latex ? "\\left(x - \\frac{1}{2}\\right)\\left(" + odd + "\\right)"
                                       : "(x - 1/2)*(" + odd + ")";
    if (split.even.is_zero())
        return odd_term;
    return even + " + " + odd_term;
}

std::string render_form(const FaulhaberForm& form, OutputFormat fmt)
{
    const bool even = form.parity == Parity::Even;
    switch (fmt) {
    case OutputFormat::Plain:
        return "S_" + std::to_string(form.exponent) + " = " + (even ? "S_2" : "S_1^2") + "*(" +
               render_series(form.coeffs, "S_1", false) + ")";
    case OutputFormat::Latex:
        return latex_display("S_{" + std::to_string(form.exponent) + "} = " + (even ? "S_{2}" : "S_{1}^{2}") +
                             "\\left(" + render_series(form.coeffs, "S_{1}", true) + "\\right)");
    case OutputFormat::Json: return form_json(form).dump(2);
    }
    return {};
}

nlohmann::json form_json(const FaulhaberForm& form)
{
    return {{"exponent", form.exponent},
            {"parity", std::string(parity_name(form.parity))},
            {"prefactor", form.parity == Parity::Even ? "S_2" : "S_1^2"},
            {"variable", "S_1"},
            {"coeffs", rationals_json(form.coeffs)}};
}

nlohmann::json report_json(const TheoremReport& report)
{
    auto checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return {{"theorem", std::string(theorem_name(report.theorem))},
            {"m", report.m},
            {"verdict", report.verdict},
            {"checks", std::move(checks)}};
}

std::string latex_display(const std::string& body)
{
    return "\\[ " + body + " \\]";
}

}  // namespace psum
