#include "coha/symfunc.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace coha {

VarSet VarSet::range(int nvars, int first, int last) {
    if (first < 0 || last > nvars || first > last) throw std::out_of_range("variable range outside the ring");
    VarSet v{nvars, {}};
    for (int i = first; i < last; ++i) v.vars.push_back(i);
    return v;
}

namespace {

void check_vars(const VarSet& vars) {
    for (int v : vars.vars)
        if (v < 0 || v >= vars.nvars) throw std::out_of_range("variable outside the ring");
}

// Enumerates multisets (repeat = true) or subsets of positions in vars of
// size r, accumulating the product monomial into out.
void accumulate_monomials(const VarSet& vars, int r, bool repeat, std::size_t start, Exponent& e, MultiPoly& out) {
    if (r == 0) {
        out.add_term(e, 1);
        return;
    }
    for (std::size_t i = start; i < vars.vars.size(); ++i) {
        auto v = static_cast<std::size_t>(vars.vars[i]);
        ++e[v];
        accumulate_monomials(vars, r - 1, repeat, repeat ? i : i + 1, e, out);
        --e[v];
    }
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace

MultiPoly elementary(int r, const VarSet& vars) {
    check_vars(vars);
    MultiPoly out(vars.nvars);
    if (r < 0 || r > vars.size()) return out;
    Exponent e(static_cast<std::size_t>(vars.nvars), 0);
    accumulate_monomials(vars, r, false, 0, e, out);
    return out;
}

MultiPoly complete(int r, const VarSet& vars) {
    check_vars(vars);
    MultiPoly out(vars.nvars);
    if (r < 0) return out;
    if (r == 0) return MultiPoly::constant(vars.nvars, 1);
    Exponent e(static_cast<std::size_t>(vars.nvars), 0);
    accumulate_monomials(vars, r, true, 0, e, out);
    return out;
}

MultiPoly schur(const Partition& lambda, const VarSet& vars) {
    check_vars(vars);
    const int len = lambda.length();
    if (len > vars.size()) return MultiPoly(vars.nvars);
    if (len == 0) return MultiPoly::constant(vars.nvars, 1);

    // h_0 .. h_{lambda_1 + len - 1} cover every matrix entry.
    std::vector<MultiPoly> h;
    for (int r = 0; r < lambda.largest() + len; ++r) h.push_back(complete(r, vars));
    auto entry = [&](int i, int j) -> const MultiPoly* {
        int r = lambda.part(i) - i + j;
        if (r < 0) return nullptr;
        return &h[static_cast<std::size_t>(r)];
    };

    // minor[mask] = det of the first popcount(mask) rows on columns mask,
    // expanded along the last of those rows.
    const std::uint32_t full = (std::uint32_t{1} << len) - 1;
    std::vector<MultiPoly> minor(full + 1, MultiPoly(vars.nvars));
    minor[0] = MultiPoly::constant(vars.nvars, 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int row = std::popcount(mask) - 1;
        MultiPoly acc(vars.nvars);
        for (int j = 0; j < len; ++j) {
            if (!(mask & (std::uint32_t{1} << j))) continue;
            const MultiPoly* a = entry(row, j);
            const auto rest = mask & ~(std::uint32_t{1} << j);
            if (!a || minor[rest].is_zero()) continue;
            const int later = std::popcount(rest >> j);
            MultiPoly term = *a * minor[rest];
            if (later % 2) acc -= term;
            else acc += term;
        }
        minor[mask] = std::move(acc);
    }
    return minor[full];
}

Rational schur_eval(const Partition& lambda, std::span<const Rational> points) {
    const auto m = points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i] == points[j]) throw std::invalid_argument("schur_eval: repeated evaluation point");
    if (static_cast<std::size_t>(lambda.length()) > m) return 0;

    auto power = [](const Rational& x, int k) {
        Rational r = 1;
        for (int i = 0; i < k; ++i) r *= x;
        return r;
    };
    std::vector<std::vector<Rational>> num(m, std::vector<Rational>(m)), den(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const int shift = static_cast<int>(m - 1 - j);
            num[i][j] = power(points[i], lambda.part(static_cast<int>(j)) + shift);
            den[i][j] = power(points[i], shift);
        }
    }
    return determinant(std::move(num)) / determinant(std::move(den));
}

std::map<Partition, Rational> schur_expand(const MultiPoly& p) {
    if (!p.is_symmetric()) throw std::domain_error("schur_expand: polynomial is not symmetric");
    const VarSet vars = VarSet::all(p.nvars());
    std::map<Partition, Rational> out;
    MultiPoly rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().rbegin();
        for (std::size_t i = 1; i < lead.size(); ++i)
            if (lead[i] > lead[i - 1]) throw std::domain_error("schur_expand: leading exponent is not a partition");
        Partition lambda(lead);
        Rational coeff = c;
        out.emplace(lambda, coeff);
        rest -= schur(lambda, vars) * coeff;
    }
    return out;
}

Rational SchurClass::coefficient(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SchurClass::add(const Partition& lambda, const Rational& c) {
    if (!fits_box(lambda, box_))
        throw std::invalid_argument("partition " + to_string(lambda) + " does not fit the " + std::to_string(box_.d) + "x" +
                                    std::to_string(box_.columns()) + " box");
    add_truncated(lambda, c);
}

void SchurClass::add_truncated(const Partition& lambda, const Rational& c) {
    if (c == 0 || !fits_box(lambda, box_)) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SchurClass& SchurClass::operator+=(const SchurClass& other) {
    if (!(box_ == other.box_)) throw std::invalid_argument("adding Schur classes on different Grassmannians");
    for (const auto& [lambda, c] : other.coeffs_) add_truncated(lambda, c);
    return *this;
}

SchurClass& SchurClass::operator*=(const Rational& c) {
    if (c == 0) coeffs_.clear();
    for (auto& [lambda, v] : coeffs_) v *= c;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const SchurClass& c) {
    if (c.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [lambda, v] : c.coeffs()) {
        os << (first ? "" : " ") << to_signed_string(v) << " * s" << lambda;
        first = false;
    }
    return os;
}

}  // namespace coha
