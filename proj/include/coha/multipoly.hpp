#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "coha/rational.hpp"

namespace coha {

using Exponent = std::vector<int>;

// Sparse polynomial in x_1..x_nvars with exact rational coefficients.
// Terms are keyed by dense exponent vectors; zero coefficients are never
// stored. std::map ordering is lexicographic with x_1 most significant.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    explicit MultiPoly(int nvars = 0);
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int var, int power = 1);
    static MultiPoly monomial(const Exponent& exponent, const Rational& c);

    int nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const Exponent& exponent) const;
    int total_degree() const;

    // Adds c * x^exponent, erasing the term if it cancels.
    void add_term(const Exponent& exponent, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Substitutes x_i <- x_{target[i]} into a polynomial with target_nvars
    // variables.
    MultiPoly embed(std::span<const int> target, int target_nvars) const;
    MultiPoly swap_variables(int a, int b) const;
    bool is_symmetric() const;

    Rational evaluate(std::span<const Rational> point) const;

    // Exact quotient by (x_a - x_b). Returns false (leaving *quotient
    // unspecified) if the remainder is non-zero.
    bool divide_by_difference(int a, int b, MultiPoly* quotient) const;

private:
    void check_compatible(const MultiPoly& other) const;

    int nvars_ = 0;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);
std::string to_string(const MultiPoly& p);

}  // namespace coha
