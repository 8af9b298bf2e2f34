#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coha/exterior.hpp"
#include "coha/report.hpp"

namespace coha {

// Linear endomorphism of the exterior algebra on phi_0..phi_{n-1}, stored
// by its action on the 2^n basis monomials. Column m is the image of the
// monomial whose factor set has bit mask m.
class GradedOperator {
public:
    GradedOperator(int n, std::string label = {});

    template <typename Action>
    static GradedOperator from_action(int n, std::string label, Action&& action) {
        GradedOperator op(n, std::move(label));
        for (std::uint64_t m = 0; m < op.dimension(); ++m) op.columns_[m] = action(WedgeIndex::from_mask(m));
        return op;
    }

    static GradedOperator identity(int n);
    static GradedOperator zero(int n) { return GradedOperator(n, "0"); }

    int n() const noexcept { return n_; }
    std::uint64_t dimension() const noexcept { return columns_.size(); }
    const std::string& label() const noexcept { return label_; }
    GradedOperator& relabel(std::string label) {
        label_ = std::move(label);
        return *this;
    }

    const ExteriorElement& column(const WedgeIndex& k) const { return columns_.at(k.mask()); }
    const ExteriorElement& column(std::uint64_t mask) const { return columns_.at(mask); }

    ExteriorElement apply(const ExteriorElement& a) const;
    bool is_zero() const;

    // First basis mask (in WedgeIndex order) on which the operators differ.
    std::optional<WedgeIndex> first_difference(const GradedOperator& other) const;
    // c with *this == c * other; nullopt if none exists. Throws
    // std::domain_error when other is zero.
    std::optional<Rational> scalar_multiple_of(const GradedOperator& other) const;

    GradedOperator& operator+=(const GradedOperator& other);
    GradedOperator& operator-=(const GradedOperator& other);
    GradedOperator& operator*=(const Rational& c);
    friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
    friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
    friend GradedOperator operator*(GradedOperator a, const Rational& c) { return a *= c; }
    friend GradedOperator operator*(const Rational& c, GradedOperator a) { return a *= c; }

    // Composition a o b (apply b first).
    friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);

    // Equality of actions; labels are diagnostic only.
    friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
        return a.n_ == b.n_ && a.columns_ == b.columns_;
    }

private:
    void check_compatible(const GradedOperator& other) const;

    int n_;
    std::string label_;
    std::vector<ExteriorElement> columns_;
};

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);
GradedOperator anticommutator(const GradedOperator& a, const GradedOperator& b);
// (ad a)^m (b) = [a, [a, ... [a, b]]].
GradedOperator ad_pow(const GradedOperator& a, int m, const GradedOperator& b);

// alpha_i^+: left wedge by phi_i. Zero operator when i >= n.
GradedOperator raise(int i, int n);
// alpha_i^-: right partial derivative. Throws std::out_of_range unless 0 <= i < n.
GradedOperator lower(int i, int n);
// Twisted alpha_i^-: left partial derivative. Same range as lower.
GradedOperator twisted_lower(int i, int n);
// R_i^j: replaces the factor phi_i by phi_j (canonical sign), zero when
// phi_i is absent or phi_j already present.
GradedOperator replace_factor(int from, int to, int n);

// H = [alpha_0^+, alpha_0^-].
GradedOperator grading_h(int n);

struct ProjectedGenerators {
    std::vector<GradedOperator> T;  // T_i = (alpha_i^+ + [H, alpha_i^+]/2)/2
    std::vector<GradedOperator> S;  // S_i = (alpha_i^- - [H, alpha_i^-]/2)/2
};
ProjectedGenerators projected_generators(int n);

// E_i, F_i, H_i for 0 <= i <= n.
struct ChevalleyGenerators {
    GradedOperator H;
    std::vector<GradedOperator> E;
    std::vector<GradedOperator> F;
    std::vector<GradedOperator> Hi;
};
ChevalleyGenerators chevalley_generators(int n);

// Checks every item of the action table for E_i, F_i, H_i, S_i, T_i and
// H against every basis monomial. n = 0 yields a vacuous report.
VerificationReport lemma_action_table(int n);

// CLI grammar: raise:i lower:i tlower:i H T:i S:i E:i F:i Hi:i.
// Throws std::invalid_argument on unknown names or bad indices.
GradedOperator operator_by_name(const std::string& name, int n);

std::vector<int> witness_of(const WedgeIndex& k);

}  // namespace coha
