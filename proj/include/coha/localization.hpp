#pragma once

#include "coha/multipoly.hpp"
#include "coha/symfunc.hpp"

namespace coha {

// Parameters of a shuffle (localization) sum over m variables: left is a
// polynomial in `chosen` variables, right one in the remaining m - chosen.
struct ShuffleSumSpec {
    int total_vars = 0;
    int chosen = 0;
    MultiPoly left;
    MultiPoly right;
};

// sum over increasing subsets I of size `chosen`, with complement J, of
//   left(x_I) right(x_J) / prod_{a in I, b in J} (x_a - x_b).
// Computed over the Vandermonde common denominator and divided out
// exactly. Throws std::domain_error if the sum is not a polynomial.
MultiPoly shuffle_sum(const ShuffleSumSpec& spec);

// Increasing action of phi_i: H*(Gr(d,n)) -> H*(Gr(d+1,n)) by the
// pushforward sum, expanded in Schur polynomials and truncated to the
// target box. Throws std::invalid_argument if d + 1 > n.
SchurClass raise_localized(int i, const SchurClass& c);

// Decreasing action of phi_i: H*(Gr(d,n)) -> H*(Gr(d-1,n)) through the
// transpose presentation, with the wedge taken combinatorially on the
// complementary index. Throws std::invalid_argument if d = 0.
SchurClass lower_via_transpose(int i, const SchurClass& c);

// The same decreasing action, but evaluating the complementary wedge as
// an explicit shuffle sum of Schur polynomials in n - d + 1 variables.
SchurClass lower_localized_raw(int i, const SchurClass& c);

// Twisted decreasing action: lower_via_transpose scaled by (-1)^{d-1}.
SchurClass twisted_lower_via_transpose(int i, const SchurClass& c);

}  // namespace coha
