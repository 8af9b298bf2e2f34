#pragma once

#include <ostream>
#include <vector>

#include "coha/operators.hpp"
#include "coha/report.hpp"

namespace coha {

// Square integer matrix over nodes 0..m-1.
class CartanMatrix {
public:
    explicit CartanMatrix(int m);

    int size() const noexcept { return m_; }
    int at(int i, int j) const { return entries_.at(index(i, j)); }
    void set(int i, int j, int value) { entries_.at(index(i, j)) = value; }
    bool is_symmetric() const;

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    std::size_t index(int i, int j) const;

    int m_;
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const CartanMatrix& a);

// D_m under the labeling where nodes 0 and 1 both attach to node 2 and
// 2 - 3 - ... - (m-1) is a chain. Throws std::invalid_argument if m < 3.
CartanMatrix cartan_D(int m);

// Matrix the Serre suite uses for the generators E_0..E_n: cartan_D(n+1)
// for n >= 2, and the two disconnected nodes diag(2, 2) for n = 1.
CartanMatrix serre_cartan(int n);

// Reads a_{ji} off [H_i, E_j] = a_{ji} E_j. Throws std::invalid_argument
// for n < 2 and std::domain_error if some E_j is zero or [H_i, E_j] is not
// an integer multiple of E_j.
CartanMatrix extract_cartan(int n);

// [H_i,H_j] = 0, [E_i,F_j] = delta_ij H_i, [H_i,E_j] = a_ji E_j,
// [H_i,F_j] = -a_ji F_j, (ad E_i)^{1-a_ji} E_j = (ad F_i)^{1-a_ji} F_j = 0.
VerificationReport check_serre(int n, int jobs = 1);

enum class Annihilator { twisted, untwisted };

// alpha_i^+ alpha_j^+ + alpha_j^+ alpha_i^+ = 0, the same for the
// annihilators, and alpha_i^+ a_j + a_j alpha_i^+ = delta_ij Id where a_j
// is the twisted (left derivative) or untwisted (right derivative)
// annihilator.
VerificationReport check_clifford(int n, Annihilator kind = Annihilator::twisted, int jobs = 1);

}  // namespace coha
