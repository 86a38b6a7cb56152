#pragma once

/**
 * @file render.hpp
 * @brief Plain, JSON and LaTeX renderings of rationals, polynomials and forms.
 *
 * Plain and LaTeX polynomials are written in ascending degree with explicit
 * signs; zero terms are dropped and the zero polynomial renders as "0".
 * JSON carries every big integer as a decimal string.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "psum/faulhaber.hpp"
#include "psum/polynomial.hpp"
#include "psum/rational.hpp"
#include "psum/verify.hpp"

namespace psum {

enum class OutputFormat { Plain, Json, Latex };

std::optional<OutputFormat> parse_format(std::string_view name);

nlohmann::json rational_json(const Rational& r);
nlohmann::json rationals_json(const std::vector<Rational>& values);

std::string latex_rational(const Rational& r);

/// Ascending sum of coeffs[k] * var^k. `var` is the plain or LaTeX spelling
/// of the basis variable; LaTeX mode uses ^{k} and \frac.
std::string render_series(const std::vector<Rational>& coeffs, const std::string& var, bool latex);

std::string render_rational(const Rational& r, OutputFormat fmt);

/// PowerX or CenteredHalf polynomial, plain or LaTeX.
std::string render_polynomial(const Polynomial& p, bool latex);

/// even(U) + (x - 1/2)*(odd(U)), plain or LaTeX.
std::string render_u_split(const USplit& split, bool latex);

std::string render_form(const FaulhaberForm& form, OutputFormat fmt);

nlohmann::json form_json(const FaulhaberForm& form);
nlohmann::json report_json(const TheoremReport& report);

/// Wraps a LaTeX expression as a display-math fragment.
std::string latex_display(const std::string& body);

}  // namespace psum
