#include "coha/localization.hpp"

#include <stdexcept>
#include <vector>

#include "coha/exterior.hpp"

namespace coha {

namespace {

MultiPoly vandermonde(const std::vector<int>& vars, int nvars) {
    MultiPoly v = MultiPoly::constant(nvars, 1);
    for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b)
            v = v * (MultiPoly::variable(nvars, vars[a]) - MultiPoly::variable(nvars, vars[b]));
    return v;
}

// Visits increasing subsets of {0..m-1} of size p.
template <typename Visit>
void for_each_subset(int m, int p, Visit&& visit) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == p) {
            visit(chosen);
            return;
        }
        for (int a = start; a <= m - (p - static_cast<int>(chosen.size())); ++a) {
            chosen.push_back(a);
            self(self, a + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

MultiPoly power_of_single(int i) { return MultiPoly::variable(1, 0, i); }

}  // namespace

MultiPoly shuffle_sum(const ShuffleSumSpec& spec) {
    const int m = spec.total_vars;
    const int p = spec.chosen;
    if (p < 0 || p > m) throw std::invalid_argument("shuffle_sum: chosen count outside [0, m]");
    if (spec.left.nvars() != p || spec.right.nvars() != m - p)
        throw std::invalid_argument("shuffle_sum: factor variable counts do not match the split");

    // 1/prod_{I x J}(x_a - x_b) = (-1)^{inv} V_I V_J / V, where inv counts
    // pairs a in I, b in J with a > b.
    MultiPoly numerator(m);
    for_each_subset(m, p, [&](const std::vector<int>& chosen) {
        std::vector<int> rest;
        std::vector<bool> in(static_cast<std::size_t>(m), false);
        for (int a : chosen) in[static_cast<std::size_t>(a)] = true;
        for (int b = 0; b < m; ++b)
            if (!in[static_cast<std::size_t>(b)]) rest.push_back(b);
        int inversions = 0;
        for (int a : chosen)
            for (int b : rest)
                if (a > b) ++inversions;
        MultiPoly term = spec.left.embed(chosen, m) * spec.right.embed(rest, m);
        term = term * vandermonde(chosen, m) * vandermonde(rest, m);
        numerator += term * sign_power(inversions);
    });

    MultiPoly result = std::move(numerator);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            MultiPoly q;
            if (!result.divide_by_difference(a, b, &q))
                throw std::domain_error("shuffle_sum: localization sum is not a polynomial (remainder modulo x" +
                                        std::to_string(a + 1) + " - x" + std::to_string(b + 1) + ")");
            result = std::move(q);
        }
    }
    return result;
}

SchurClass raise_localized(int i, const SchurClass& c) {
    const int d = c.box().d;
    const int n = c.box().n;
    if (d + 1 > n) throw std::invalid_argument("raise_localized: target Grassmannian Gr(d+1,n) is empty");
    if (i < 0) throw std::invalid_argument("raise_localized: negative generator index");
    SchurClass out(BoxShape(d + 1, n));
    for (const auto& [lambda, v] : c.coeffs()) {
        ShuffleSumSpec spec{d + 1, d, schur(lambda, VarSet::all(d)), power_of_single(i)};
        for (const auto& [mu, w] : schur_expand(shuffle_sum(spec))) out.add_truncated(mu, v * w);
    }
    return out;
}

SchurClass lower_via_transpose(int i, const SchurClass& c) {
    const int d = c.box().d;
    const int n = c.box().n;
    if (d == 0) throw std::invalid_argument("lower_via_transpose: source Grassmannian has d = 0");
    if (i < 0) throw std::invalid_argument("lower_via_transpose: negative generator index");
    SchurClass out(BoxShape(d - 1, n));
    for (const auto& [lambda, v] : c.coeffs()) {
        const WedgeIndex k = partition_to_index(lambda, d);
        const WedgeIndex kt = transpose_index(k, n);
        // Transpose presentation (-1)^|lambda| Phi_{k'}; wedging phi_i in
        // the complementary variables contributes (-1)^{n-d}.
        const ExteriorElement wedged = truncate(wedge(ExteriorElement::generator(i), ExteriorElement::monomial(kt)), n);
        const Rational sign = sign_power(lambda.weight() + n - d);
        for (const auto& [lt, s] : wedged.terms()) {
            const Partition mu = transpose(index_to_partition(lt));
            out.add(mu, v * sign * s * sign_power(mu.weight()));
        }
    }
    return out;
}

SchurClass lower_localized_raw(int i, const SchurClass& c) {
    const int d = c.box().d;
    const int n = c.box().n;
    if (d == 0) throw std::invalid_argument("lower_localized_raw: source Grassmannian has d = 0");
    if (i < 0) throw std::invalid_argument("lower_localized_raw: negative generator index");
    const int rest = n - d;
    const BoxShape transposed_target(rest + 1, n);
    SchurClass out(BoxShape(d - 1, n));
    for (const auto& [lambda, v] : c.coeffs()) {
        ShuffleSumSpec spec{rest + 1, rest, schur(transpose(lambda), VarSet::all(rest)), power_of_single(i)};
        const Rational sign = sign_power(lambda.weight() + rest);
        for (const auto& [mut, w] : schur_expand(shuffle_sum(spec))) {
            if (!fits_box(mut, transposed_target)) continue;
            const Partition mu = transpose(mut);
            out.add(mu, v * sign * w * sign_power(mu.weight()));
        }
    }
    return out;
}

SchurClass twisted_lower_via_transpose(int i, const SchurClass& c) {
    return lower_via_transpose(i, c) * sign_power(c.box().d - 1);
}

}  // namespace coha
