#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "coha/partitions.hpp"
#include "coha/rational.hpp"
#include "coha/symfunc.hpp"

namespace coha {

// Rational combination of canonical wedge monomials Phi_k. With a bound n
// this lives in the exterior algebra on phi_0..phi_{n-1}; without one it
// is an element of the free (unbounded) algebra.
class ExteriorElement {
public:
    using Terms = std::map<WedgeIndex, Rational>;

    ExteriorElement() = default;
    explicit ExteriorElement(std::optional<int> bound) : bound_(bound) {}

    static ExteriorElement monomial(const WedgeIndex& k, std::optional<int> bound = std::nullopt, const Rational& c = 1);
    static ExteriorElement unit(std::optional<int> bound = std::nullopt) { return monomial(WedgeIndex{}, bound); }
    // The degree-one generator phi_i.
    static ExteriorElement generator(int i, std::optional<int> bound = std::nullopt) { return monomial(WedgeIndex{i}, bound); }

    const std::optional<int>& bound() const noexcept { return bound_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const WedgeIndex& k) const;

    // Throws std::invalid_argument if k has an entry outside the bound.
    void add_term(const WedgeIndex& k, const Rational& c);

    ExteriorElement& operator+=(const ExteriorElement& other);
    ExteriorElement& operator-=(const ExteriorElement& other);
    ExteriorElement& operator*=(const Rational& c);
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
    friend ExteriorElement operator*(ExteriorElement a, const Rational& c) { return a *= c; }
    friend ExteriorElement operator*(const Rational& c, ExteriorElement a) { return a *= c; }

    friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

private:
    void check_bound(const ExteriorElement& other) const;

    std::optional<int> bound_;
    Terms terms_;
};

// Sorts a generator sequence, returning the signed canonical monomial, or
// zero when a generator repeats.
ExteriorElement canonicalize(std::span<const int> generators, std::optional<int> bound = std::nullopt);

// Throws std::invalid_argument on mismatched bounds.
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

// Deletes phi_i at 1-based position p of a degree-d monomial with sign
// (-1)^{d-p} (right) or (-1)^{p-1} (left).
ExteriorElement d_right(int i, const ExteriorElement& a);
ExteriorElement d_left(int i, const ExteriorElement& a);

// Degree shared by all terms, nullopt for zero. Throws
// std::invalid_argument if a is not homogeneous.
std::optional<int> homogeneous_degree(const ExteriorElement& a);

// Phi_k -> s_{lambda(k)} in H*(Gr(d,n)). Throws std::invalid_argument if
// a has a term of degree other than box.d or an entry >= box.n.
SchurClass to_schur(const ExteriorElement& a, const BoxShape& box);
ExteriorElement from_schur(const SchurClass& c);

// Multiplication by e_d^p on degree-d elements of the free algebra:
// Phi_k -> Phi_{k+p}. Throws std::invalid_argument for bounded or
// non-homogeneous input.
ExteriorElement multiply_ed_power(const ExteriorElement& a, int p);

// Quotient to the exterior algebra on phi_0..phi_{n-1}: drops every
// monomial containing some phi_i with i >= n.
ExteriorElement truncate(const ExteriorElement& a, int n);

// "+1 * [0,1] -1/2 * [2]", terms in WedgeIndex order; "0" for zero.
std::string to_string(const ExteriorElement& a);
std::ostream& operator<<(std::ostream& os, const ExteriorElement& a);

}  // namespace coha
