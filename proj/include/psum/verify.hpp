#pragma once

/**
 * @file verify.hpp
 * @brief Machine checks of the symmetry criterion and of the U-basis and
 *        Faulhaber-form equivalences, instance by instance.
 *
 * Every check computes both the premise and the conclusion of the
 * statement it exercises and records a witness value, so a report reads
 * as "verified for this m" and never as a proof for all m.
 */

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

enum class SymmetryKind { Line, Point };

struct SymmetryFailure {
    unsigned order;
    Rational value;

    friend bool operator==(const SymmetryFailure&, const SymmetryFailure&) = default;
};

struct SymmetryReport {
    Rational center;
    SymmetryKind kind = SymmetryKind::Line;
    std::vector<unsigned> orders_checked;
    std::vector<SymmetryFailure> failures;
    /// Whether p(s + x) == p(s - x) (Line) or p(s + x) - p(s) == p(s) - p(s - x) (Point).
    bool reflection_holds = false;
    bool verdict = false;

    bool methods_agree() const { return verdict == reflection_holds; }

    friend bool operator==(const SymmetryReport&, const SymmetryReport&) = default;
};

/// Derivative criterion: odd orders vanish at s (Line), even orders >= 2
/// vanish at s (Point). Also computes the reflection identity so callers
/// can cross-check. Throws std::invalid_argument when deg(p) <= 1.
SymmetryReport check_symmetry(const Polynomial& p, const Rational& s, SymmetryKind kind);

enum class TheoremId { T2Even, T2Odd, T3Even, T3Odd };

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
/// Smallest m the statement applies to.
std::size_t theorem_min_m(TheoremId id);

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;

    friend bool operator==(const Check&, const Check&) = default;
};

struct TheoremReport {
    TheoremId theorem = TheoremId::T2Even;
    std::size_t m = 0;
    std::vector<Check> checks;
    bool verdict = false;

    friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// B_{2m}(x) = B_{2m} + sum_{j>=2} hat_b U^j, m >= 2.
TheoremReport verify_theorem2_even(std::size_t m);
/// B_{2m+1}(x) = (x - 1/2) sum_{j>=1} hat_b U^j, m >= 1.
TheoremReport verify_theorem2_odd(std::size_t m);
/// S_{2m} = S_2 F_{2m}(S_1), both directions, m >= 1.
TheoremReport verify_theorem3_even(std::size_t m);
/// S_{2m+1} = S_1^2 F_{2m+1}(S_1), both directions, m >= 1.
TheoremReport verify_theorem3_odd(std::size_t m);
/// Both Faulhaber-form reports for m.
std::vector<TheoremReport> verify_theorem3(std::size_t m);

TheoremReport verify(TheoremId id, std::size_t m);

/// Runs every requested theorem for each valid m <= max_m, possibly in
/// parallel. Output is ordered by (theorem, m). Throws for max_m == 0.
std::vector<TheoremReport> sweep(std::size_t max_m, const std::set<TheoremId>& which,
                                 unsigned threads = 0);

std::set<TheoremId> all_theorems();

}  // namespace psum
