#pragma once

#include "coha/report.hpp"

namespace coha {

// s_lambda(x_1..x_d) = (-1)^|lambda| s_lambda'(x_{d+1}..x_n) in R(n) for
// every lambda in every d x (n-d) box.
VerificationReport verify_transpose_suite(int n);

// h_r(x_1..x_d) = (-1)^r e_r(x_{d+1}..x_n) in R(n), 0 <= d, r <= n.
VerificationReport verify_he_duality_suite(int n);

// Pushforward formulas against the wedge/derivative operators on every
// basis class of every Gr(d,n).
VerificationReport verify_equivalence_suite(int n);

// e_d^n Phi_k = Phi_{k+n} in the free algebra, and truncation to n
// generators annihilates it, for every Phi_k of degree >= 1 with entries < n.
VerificationReport verify_kernel_suite(int n);

}  // namespace coha
