#include "coha/coinvariant.hpp"

#include <numeric>
#include <stdexcept>

#include "coha/symfunc.hpp"

namespace coha {

CoinvariantElement::CoinvariantElement(int n, MultiPoly normal_form) : n_(n), normal_form_(std::move(normal_form)) {
    if (normal_form_.nvars() != n) throw std::invalid_argument("normal form has the wrong variable count");
    for (const auto& [e, c] : normal_form_.terms())
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i)] > n - 1 - i) throw std::invalid_argument("monomial is not in normal form");
}

CoinvariantReducer::CoinvariantReducer(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("coinvariant ring needs n >= 1");
    for (int i = 0; i < n; ++i) {
        const int deg = n - i;
        MultiPoly g = complete(deg, VarSet::range(n, 0, i + 1));
        tails_.push_back(MultiPoly::variable(n, i, deg) - g);
    }
}

bool CoinvariantReducer::is_standard(const Exponent& e) const {
    for (int i = 0; i < n_; ++i)
        if (e[static_cast<std::size_t>(i)] > n_ - 1 - i) return false;
    return true;
}

const MultiPoly& CoinvariantReducer::monomial_normal_form(const Exponent& e) {
    if (auto it = cache_.find(e); it != cache_.end()) return it->second;

    MultiPoly result(n_);
    // Rewrite the highest offending variable; its tail only involves
    // x_0..x_i with x_i at lower power, so recursion terminates.
    int offender = -1;
    for (int i = n_ - 1; i >= 0; --i) {
        if (e[static_cast<std::size_t>(i)] > n_ - 1 - i) {
            offender = i;
            break;
        }
    }
    if (offender < 0) {
        result.add_term(e, 1);
    } else {
        Exponent rest = e;
        rest[static_cast<std::size_t>(offender)] -= n_ - offender;
        const MultiPoly& tail = tails_[static_cast<std::size_t>(offender)];
        Exponent m(e.size());
        for (const auto& [te, tc] : tail.terms()) {
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = rest[k] + te[k];
            const MultiPoly& sub = monomial_normal_form(m);
            for (const auto& [se, sc] : sub.terms()) result.add_term(se, tc * sc);
        }
    }
    return cache_.emplace(e, std::move(result)).first->second;
}

CoinvariantElement CoinvariantReducer::reduce(const MultiPoly& p) {
    if (p.nvars() > n_) throw std::invalid_argument("polynomial has more variables than the coinvariant ring");
    MultiPoly src = p;
    if (p.nvars() < n_) {
        std::vector<int> target(static_cast<std::size_t>(p.nvars()));
        std::iota(target.begin(), target.end(), 0);
        src = p.embed(target, n_);
    }
    MultiPoly out(n_);
    for (const auto& [e, c] : src.terms()) {
        const MultiPoly& nf = monomial_normal_form(e);
        for (const auto& [ne, nc] : nf.terms()) out.add_term(ne, c * nc);
    }
    return CoinvariantElement(n_, std::move(out));
}

CoinvariantElement coinvariant_reduce(const MultiPoly& p, int n) {
    CoinvariantReducer reducer(n);
    return reducer.reduce(p);
}

std::vector<Exponent> standard_monomials(int n) {
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(e);
        int i = 0;
        while (i < n && e[static_cast<std::size_t>(i)] == n - 1 - i) e[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
        ++e[static_cast<std::size_t>(i)];
    }
    return out;
}

bool verify_he_duality(int n, int d, int r, CoinvariantReducer& reducer) {
    if (d < 0 || d > n || r < 0) throw std::invalid_argument("he-duality needs 0 <= d <= n and r >= 0");
    MultiPoly lhs = complete(r, VarSet::range(n, 0, d));
    MultiPoly rhs = elementary(r, VarSet::range(n, d, n)) * sign_power(r);
    return reducer.reduce(lhs - rhs).is_zero();
}

bool verify_he_duality(int n, int d, int r) {
    CoinvariantReducer reducer(n);
    return verify_he_duality(n, d, r, reducer);
}

bool verify_transpose_identity(int n, int d, const Partition& lambda, CoinvariantReducer& reducer) {
    if (!fits_box(lambda, BoxShape(d, n))) throw std::invalid_argument("partition " + to_string(lambda) + " does not fit the box");
    MultiPoly lhs = schur(lambda, VarSet::range(n, 0, d));
    MultiPoly rhs = schur(transpose(lambda), VarSet::range(n, d, n)) * sign_power(lambda.weight());
    return reducer.reduce(lhs - rhs).is_zero();
}

bool verify_transpose_identity(int n, int d, const Partition& lambda) {
    CoinvariantReducer reducer(n);
    return verify_transpose_identity(n, d, lambda, reducer);
}

}  // namespace coha
