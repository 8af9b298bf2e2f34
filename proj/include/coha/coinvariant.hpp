#pragma once

#include <map>

#include "coha/multipoly.hpp"
#include "coha/partitions.hpp"

namespace coha {

// Element of R(n) = Q[x_1..x_n]/(e_1..e_n) stored in normal form: every
// monomial satisfies a_i <= n - i (1-based).
class CoinvariantElement {
public:
    explicit CoinvariantElement(int n) : n_(n), normal_form_(n) {}
    CoinvariantElement(int n, MultiPoly normal_form);

    int n() const noexcept { return n_; }
    const MultiPoly& normal_form() const noexcept { return normal_form_; }
    bool is_zero() const noexcept { return normal_form_.is_zero(); }

    friend bool operator==(const CoinvariantElement&, const CoinvariantElement&) = default;

private:
    int n_;
    MultiPoly normal_form_;
};

// Normal-form reduction modulo the coinvariant ideal, using the rewriting
// basis g_i = h_{n-i+1}(x_1..x_i), i = 1..n. Under lex order with
// x_n > ... > x_1 the leading term of g_i is x_i^{n-i+1}, so reduced
// monomials have a_i <= n - i.
//
// Normal forms of monomials are memoised, so reuse one reducer for many
// reductions in the same ring. Not safe for concurrent use.
class CoinvariantReducer {
public:
    explicit CoinvariantReducer(int n);

    int n() const noexcept { return n_; }
    CoinvariantElement reduce(const MultiPoly& p);
    bool is_standard(const Exponent& e) const;

private:
    const MultiPoly& monomial_normal_form(const Exponent& e);

    int n_;
    // tails_[i] = x_i^{n-i} - h_{n-i}(x_0..x_i) (0-based i), i.e. what the
    // leading power of x_i rewrites to.
    std::vector<MultiPoly> tails_;
    std::map<Exponent, MultiPoly> cache_;
};

// One-shot convenience wrapper. p may have fewer than n variables; it is
// embedded as x_1.. of the n-variable ring.
CoinvariantElement coinvariant_reduce(const MultiPoly& p, int n);

// Standard monomials a_i <= n-i; there are n! of them.
std::vector<Exponent> standard_monomials(int n);

// h_r(x_1..x_d) == (-1)^r e_r(x_{d+1}..x_n) in R(n).
bool verify_he_duality(int n, int d, int r, CoinvariantReducer& reducer);
bool verify_he_duality(int n, int d, int r);

// s_lambda(x_1..x_d) == (-1)^|lambda| s_lambda'(x_{d+1}..x_n) in R(n).
// Throws std::invalid_argument if lambda does not fit the d x (n-d) box.
bool verify_transpose_identity(int n, int d, const Partition& lambda, CoinvariantReducer& reducer);
bool verify_transpose_identity(int n, int d, const Partition& lambda);

}  // namespace coha
