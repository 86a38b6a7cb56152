#include "psum/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "psum/bernoulli.hpp"
#include "psum/faulhaber.hpp"
#include "psum/render.hpp"
#include "psum/verify.hpp"

namespace psum {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer parse_positive(const std::string& text, const char* what)
{
    const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return c >= '0' && c <= '9';
    });
    if (!digits)
        throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
    Integer v(text);
    if (v < 1)
        throw UsageError(std::string(what) + " must be >= 1");
    return v;
}

std::set<TheoremId> parse_only(const std::vector<std::string>& names)
{
    if (names.empty())
        return all_theorems();
    std::set<TheoremId> out;
    for (const auto& n : names) {
        if (n == "T3") {
            out.insert(TheoremId::T3Even);
            out.insert(TheoremId::T3Odd);
        } else if (auto id = parse_theorem(n)) {
            out.insert(*id);
        } else {
            throw UsageError("unknown theorem '" + n + "' (expected T2-even, T2-odd, T3, T3-even or T3-odd)");
        }
    }
    return out;
}

int cmd_bernoulli(std::size_t j, OutputFormat fmt, std::ostream& out)
{
    out << render_rational(bernoulli_number(j), fmt) << "\n";
    return kExitOk;
}

int cmd_poly(const std::string& kind, std::size_t m, const std::string& basis, OutputFormat fmt,
             std::ostream& out)
{
    if (kind != "bernoulli")
        throw UsageError("unknown polynomial family '" + kind + "' (expected bernoulli)");
    const Polynomial b = bernoulli_polynomial(m);
    const bool latex = fmt == OutputFormat::Latex;

    nlohmann::json doc{{"kind", kind}, {"m", m}, {"basis", basis}};
    std::string text;
    if (basis == "x") {
        text = render_polynomial(b, latex);
        doc["coeffs"] = rationals_json(b.coeffs());
    } else if (basis == "centered") {
        const Polynomial c = to_centered(b);
        text = render_polynomial(c, latex);
        doc["coeffs"] = rationals_json(c.coeffs());
    } else if (basis == "u") {
        const USplit split = to_u_basis(b);
        text = render_u_split(split, latex);
        doc["even"] = rationals_json(split.even.coeffs());
        doc["odd"] = rationals_json(split.odd.coeffs());
    } else {
        throw UsageError("unknown basis '" + basis + "' (expected x, centered or u)");
    }

    switch (fmt) {
    case OutputFormat::Plain: out << text << "\n"; break;
    case OutputFormat::Latex: out << latex_display("B_{" + std::to_string(m) + "}(x) = " + text) << "\n"; break;
    case OutputFormat::Json: out << doc.dump(2) << "\n"; break;
    }
    return kExitOk;
}

int cmd_faulhaber(std::size_t exponent, OutputFormat fmt, std::ostream& out)
{
    if (exponent < 2)
        throw UsageError("S_0 and S_1 have no Faulhaber form; use `eval` with --method brute or bernoulli");
    out << render_form(faulhaber_form(exponent), fmt) << "\n";
    return kExitOk;
}

int cmd_eval(std::size_t exponent, const std::string& n_text, std::string method, OutputFormat fmt,
             std::ostream& out)
{
    const Integer n = parse_positive(n_text, "n");
    if (method.empty())
        method = exponent >= 2 ? "faulhaber" : exponent == 1 ? "bernoulli" : "brute";

    Integer value;
    if (method == "brute") {
        value = power_sum_bruteforce(exponent, n);
    } else if (method == "bernoulli") {
        if (exponent < 1)
            throw UsageError("--method bernoulli requires exponent >= 1");
        value = power_sum_bernoulli(exponent, n);
    } else if (method == "faulhaber") {
        if (exponent < 2)
            throw UsageError("--method faulhaber requires exponent >= 2");
        value = eval_faulhaber(faulhaber_form(exponent), n);
    } else {
        throw UsageError("unknown method '" + method + "' (expected brute, bernoulli or faulhaber)");
    }

    switch (fmt) {
    case OutputFormat::Plain: out << value.get_str() << "\n"; break;
    case OutputFormat::Latex:
        out << latex_display("\\sum_{i=1}^{" + n.get_str() + "} i^{" + std::to_string(exponent) +
                             "} = " + value.get_str())
            << "\n";
        break;
    case OutputFormat::Json: {
        nlohmann::json doc{{"exponent", exponent}, {"n", n.get_str()}, {"method", method},
                           {"value", value.get_str()}};
        out << doc.dump(2) << "\n";
        break;
    }
    }
    return kExitOk;
}

int cmd_verify(std::size_t max_m, const std::set<TheoremId>& which, unsigned threads, OutputFormat fmt,
               std::ostream& out)
{
    if (max_m < 1)
        throw UsageError("--max-m must be >= 1");
    const auto reports = sweep(max_m, which, threads);
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict; });

    switch (fmt) {
    case OutputFormat::Plain: {
        out << "theorem   m    verdict  checks\n";
        for (const auto& r : reports) {
            const auto passed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
            std::ostringstream line;
            line << std::left << std::setw(10) << theorem_name(r.theorem) << std::setw(5) << r.m << std::setw(9)
                 << (r.verdict ? "pass" : "FAIL") << passed << "/" << r.checks.size();
            for (const auto& c : r.checks)
                if (!c.pass)
                    line << "  [" << c.name << ": " << c.witness << "]";
            out << line.str() << "\n";
        }
        out << (all_pass ? "all pass" : "FAILURES") << ": " << reports.size() << " reports, verified for m <= "
            << max_m << "\n";
        break;
    }
    case OutputFormat::Json: {
        nlohmann::json doc;
        doc["max_m"] = max_m;
        auto names = nlohmann::json::array();
        for (TheoremId id : which)
            names.push_back(std::string(theorem_name(id)));
        doc["theorems"] = names;
        doc["all_pass"] = all_pass;
        doc["report_count"] = reports.size();
        auto arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back(report_json(r));
        doc["reports"] = std::move(arr);
        out << doc.dump(2) << "\n";
        break;
    }
    case OutputFormat::Latex: {
        std::string body = "\\begin{array}{lrl}\n\\text{theorem} & m & \\text{verdict} \\\\\n\\hline\n";
        for (const auto& r : reports)
            body += "\\text{" + std::string(theorem_name(r.theorem)) + "} & " + std::to_string(r.m) + " & \\text{" +
                    (r.verdict ? "pass" : "fail") + "} \\\\\n";
        body += "\\end{array}";
        out << latex_display(body) << "\n";
        break;
    }
    }
    return sweep_exit_status(reports);
}

}  // namespace

int sweep_exit_status(const std::vector<TheoremReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict; })
               ? kExitOk
               : kExitVerificationFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Bernoulli numbers, power sums and Faulhaber forms", "psum"};
    app.require_subcommand(1);

    std::string format_name = "plain";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"plain", "json", "latex"}))
        ->capture_default_str();

    std::size_t index = 0;
    auto* bern = app.add_subcommand("bern", "Bernoulli number B_j");
    bern->add_option("j", index, "Index j >= 0")->required();

    std::string kind;
    std::string basis = "x";
    auto* poly = app.add_subcommand("poly", "Bernoulli polynomial B_m(x) in a chosen basis");
    poly->add_option("kind", kind, "Polynomial family (bernoulli)")->required();
    poly->add_option("m", index, "Degree m >= 0")->required();
    poly->add_option("--basis", basis, "x, centered or u")->capture_default_str();

    auto* faul = app.add_subcommand("faulhaber", "Faulhaber form of S_e");
    faul->add_option("exponent", index, "Exponent e >= 2")->required();

    std::string n_text;
    std::string method;
    auto* ev = app.add_subcommand("eval", "Exact power sum 1^e + ... + n^e");
    ev->add_option("exponent", index, "Exponent e >= 0")->required();
    ev->add_option("n", n_text, "Upper limit n >= 1 (arbitrary size)")->required();
    ev->add_option("--method", method, "brute, bernoulli or faulhaber (default: faulhaber for e >= 2)");

    std::size_t max_m = 40;
    std::vector<std::string> only;
    unsigned threads = 0;
    auto* ver = app.add_subcommand("verify", "Check the symmetry, U-basis and Faulhaber-form statements");
    ver->add_option("--max-m", max_m, "Largest m to verify")->capture_default_str();
    ver->add_option("--only", only, "Comma-separated subset of T2-even, T2-odd, T3, T3-even, T3-odd")
        ->delimiter(',');
    ver->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    for (auto* sub : {bern, poly, faul, ev, ver})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const OutputFormat fmt = *parse_format(format_name);
    try {
        if (bern->parsed())
            return cmd_bernoulli(index, fmt, out);
        if (poly->parsed())
            return cmd_poly(kind, index, basis, fmt, out);
        if (faul->parsed())
            return cmd_faulhaber(index, fmt, out);
        if (ev->parsed())
            return cmd_eval(index, n_text, method, fmt, out);
        return cmd_verify(max_m, parse_only(only), threads, fmt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace psum
