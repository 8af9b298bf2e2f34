#pragma once

#include <map>
#include <span>
#include <vector>

#include "coha/multipoly.hpp"
#include "coha/partitions.hpp"
#include "coha/rational.hpp"

namespace coha {

// An ordered subset of the variables x_0..x_{nvars-1} of an ambient
// polynomial ring (0-based internally; x_1 in prose is variable 0).
struct VarSet {
    int nvars = 0;
    std::vector<int> vars;

    // x_first .. x_{last-1} inside nvars variables.
    static VarSet range(int nvars, int first, int last);
    // All variables of an nvars-variable ring.
    static VarSet all(int nvars) { return range(nvars, 0, nvars); }
    int size() const noexcept { return static_cast<int>(vars.size()); }
};

MultiPoly elementary(int r, const VarSet& vars);
MultiPoly complete(int r, const VarSet& vars);

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}); zero when the
// partition is longer than the variable set.
MultiPoly schur(const Partition& lambda, const VarSet& vars);

// Bialternant ratio det(x_i^{lambda_j + m - j}) / det(x_i^{m - j}) at
// the given points. Throws std::invalid_argument on repeated points.
Rational schur_eval(const Partition& lambda, std::span<const Rational> points);

// Coefficients c_lambda with p = sum c_lambda s_lambda(x_1..x_m) where m is
// the variable count of p. Throws std::domain_error if p is not symmetric
// or a leading exponent is not a partition.
std::map<Partition, Rational> schur_expand(const MultiPoly& p);

// A class in H*(Gr(d,n)) written in the Schur basis; every partition fits
// the d x (n-d) box and no coefficient is zero.
class SchurClass {
public:
    explicit SchurClass(BoxShape box) : box_(box) {}

    const BoxShape& box() const noexcept { return box_; }
    const std::map<Partition, Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Rational coefficient(const Partition& lambda) const;

    // Throws std::invalid_argument if lambda does not fit the box.
    void add(const Partition& lambda, const Rational& c);
    // Same as add, but silently drops partitions outside the box (they
    // vanish in the Grassmannian cohomology).
    void add_truncated(const Partition& lambda, const Rational& c);

    SchurClass& operator+=(const SchurClass& other);
    SchurClass& operator*=(const Rational& c);
    friend SchurClass operator+(SchurClass a, const SchurClass& b) { return a += b; }
    friend SchurClass operator*(SchurClass a, const Rational& c) { return a *= c; }

    friend bool operator==(const SchurClass&, const SchurClass&) = default;

private:
    BoxShape box_;
    std::map<Partition, Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const SchurClass& c);

}  // namespace coha
