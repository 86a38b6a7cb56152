#pragma once

/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers and polynomials.
 *
 * Convention: B_1 = -1/2, so that B_m(0) = B_m and
 *   S_m(n) = (B_{m+1}(n + 1) - B_{m+1}) / (m + 1),  m >= 1.
 *
 * Numbers are generated by sum_{i=0}^{m} C(m+1, i) B_i = 0 (m >= 1) and
 * memoized. The odd zeros B_3, B_5, ... fall out of the recurrence; they
 * are never special-cased.
 */

#include <cstddef>
#include <mutex>
#include <vector>

#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

/// Grows monotonically: asking for B_j fills every index <= j.
/// Safe to share between threads.
class BernoulliCache {
public:
    BernoulliCache();

    Rational number(std::size_t j);
    std::size_t size() const;

private:
    void extend_to(std::size_t j);

    mutable std::mutex mutex_;
    std::vector<Rational> computed_;
};

/// The process-wide cache used by the free functions below.
BernoulliCache& shared_bernoulli_cache();

Rational bernoulli_number(std::size_t j);

/// B_m(x) = sum_j C(m, j) B_j x^(m-j), in PowerX.
Polynomial bernoulli_polynomial(std::size_t m);

/// B_m(1/2) computed as (2^(1-m) - 1) B_m.
Rational bernoulli_half_value(std::size_t m);

/// Evaluates B_m(1/2) from the polynomial and compares with (2^(1-m) - 1) B_m.
bool check_half_value(std::size_t m);

/// Structural check of B_m^(k)(x) = k! C(m, k) B_{m-k}(x). For k > m the
/// derivative is the zero polynomial and the check passes.
bool check_derivative_property(std::size_t m, std::size_t k);

}  // namespace psum
