#include <doctest.h>

#include <bit>
#include <vector>

#include "coha/operators.hpp"

using namespace coha;

namespace {

using Dense = std::vector<std::vector<Rational>>;

ExteriorElement phi(std::initializer_list<int> k, int n, Rational c = 1) { return ExteriorElement::monomial(WedgeIndex(k), n, c); }

Dense to_dense(const GradedOperator& op) {
    const auto dim = op.dimension();
    Dense m(dim, std::vector<Rational>(dim));
    for (std::uint64_t col = 0; col < dim; ++col)
        for (const auto& [k, c] : op.column(col).terms()) m[k.mask()][col] = c;
    return m;
}

int bits_below(std::uint64_t mask, int i) { return std::popcount(mask & ((std::uint64_t{1} << i) - 1)); }
int bits_above(std::uint64_t mask, int i) { return std::popcount(mask >> (i + 1)); }

// Fermionic creation/annihilation on occupation bit masks.
enum class Kind { create, annihilate_right, annihilate_left };

Dense fermion(Kind kind, int i, int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t bit = std::uint64_t{1} << i;
    Dense m(dim, std::vector<Rational>(dim));
    for (std::uint64_t col = 0; col < dim; ++col) {
        const bool occupied = (col & bit) != 0;
        if (kind == Kind::create && !occupied) m[col | bit][col] = sign_power(bits_below(col, i));
        if (kind == Kind::annihilate_right && occupied) m[col & ~bit][col] = sign_power(bits_above(col, i));
        if (kind == Kind::annihilate_left && occupied) m[col & ~bit][col] = sign_power(bits_below(col, i));
    }
    return m;
}

Dense matmul(const Dense& a, const Dense& b) {
    const auto dim = a.size();
    Dense c(dim, std::vector<Rational>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < dim; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Dense dense_commutator(const Dense& a, const Dense& b) {
    Dense ab = matmul(a, b);
    const Dense ba = matmul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

}  // namespace

TEST_CASE("raise examples") {
    CHECK(raise(2, 4).apply(phi({0, 1}, 4)) == phi({0, 1, 2}, 4));
    CHECK(raise(1, 4).apply(phi({0}, 4)) == phi({0, 1}, 4, -1));
    CHECK(raise(4, 4).is_zero());
    CHECK(raise(7, 3) == GradedOperator::zero(3));
}

TEST_CASE("lower examples") {
    CHECK(lower(1, 2).apply(phi({0, 1}, 2)) == phi({0}, 2));
    CHECK(lower(0, 2).apply(phi({0, 1}, 2)) == phi({1}, 2, -1));
    CHECK(lower(0, 2).apply(phi({}, 2)).is_zero());
    CHECK(twisted_lower(1, 2).apply(phi({0, 1}, 2)) == phi({0}, 2, -1));
    CHECK(twisted_lower(0, 2).apply(phi({0, 1}, 2)) == phi({1}, 2));
    CHECK_THROWS_AS(lower(2, 2), std::out_of_range);
    CHECK_THROWS_AS(lower(-1, 2), std::out_of_range);
    CHECK_THROWS_AS(twisted_lower(3, 2), std::out_of_range);
}

TEST_CASE("grading operator examples") {
    CHECK(grading_h(1).apply(phi({}, 1)) == phi({}, 1, -1));
    CHECK(grading_h(2).apply(phi({0}, 2)) == phi({0}, 2));
    CHECK(grading_h(2).apply(phi({0, 1}, 2)) == phi({0, 1}, 2, -1));
}

TEST_CASE("projected and Chevalley generator examples") {
    const auto pg = projected_generators(3);
    CHECK(pg.T[0].apply(phi({}, 3)) == phi({0}, 3));
    CHECK(pg.T[0].apply(phi({1}, 3)).is_zero());
    CHECK(pg.S[1].apply(phi({1}, 3)) == phi({}, 3));
    const auto cg = chevalley_generators(3);
    CHECK(cg.E.size() == 4);
    CHECK(cg.E[2].apply(phi({1}, 3)) == phi({0}, 3));
    CHECK(cg.F[2].apply(phi({0}, 3)) == phi({1}, 3));
    CHECK(cg.Hi[1].apply(phi({}, 3)) == phi({}, 3));
}

TEST_CASE("commutator calculus") {
    const auto a = raise(1, 3), b = lower(2, 3);
    CHECK(commutator(a, a).is_zero());
    CHECK(ad_pow(a, 0, b) == b);
    CHECK(ad_pow(a, 1, b) == commutator(a, b));
    CHECK(commutator(raise(0, 2), lower(0, 2)) == grading_h(2));
    CHECK(GradedOperator::identity(3) * a == a);
    CHECK(a * GradedOperator::identity(3) == a);
    CHECK_THROWS_AS(commutator(raise(0, 2), raise(0, 3)), std::invalid_argument);
}

TEST_CASE("scalar multiples and differences") {
    const auto a = raise(1, 3);
    CHECK(*(a * Rational(-3, 2)).scalar_multiple_of(a) == Rational(-3, 2));
    CHECK_FALSE(raise(0, 3).scalar_multiple_of(a).has_value());
    CHECK_THROWS_AS((void)a.scalar_multiple_of(GradedOperator::zero(3)), std::domain_error);
    CHECK_FALSE(a.first_difference(a).has_value());
    CHECK(raise(0, 3).first_difference(raise(1, 3)) == WedgeIndex{});
}

TEST_CASE("basis operators agree with the fermionic matrix oracle, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i < n; ++i) {
            CHECK(to_dense(raise(i, n)) == fermion(Kind::create, i, n));
            CHECK(to_dense(lower(i, n)) == fermion(Kind::annihilate_right, i, n));
            CHECK(to_dense(twisted_lower(i, n)) == fermion(Kind::annihilate_left, i, n));
        }
        CHECK(to_dense(grading_h(n)) ==
              dense_commutator(fermion(Kind::create, 0, n), fermion(Kind::annihilate_right, 0, n)));
    }
}

TEST_CASE("composition agrees with dense matrix products") {
    const int n = 4;
    const auto a = raise(1, n) + lower(2, n) * Rational(1, 3);
    const auto b = twisted_lower(0, n) - raise(3, n);
    CHECK(to_dense(a * b) == matmul(to_dense(a), to_dense(b)));
    CHECK(to_dense(commutator(a, b)) == dense_commutator(to_dense(a), to_dense(b)));
}

TEST_CASE("H acts by (-1)^{k-1} on degree k, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        const auto h = grading_h(n);
        for (const auto& k : all_indices(n)) {
            const auto m = ExteriorElement::monomial(k, n);
            CHECK(h.apply(m) == m * sign_power(k.degree() - 1));
        }
    }
}

TEST_CASE("T_i and S_i vanish on the wrong parity, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto pg = projected_generators(n);
        for (int i = 0; i < n; ++i)
            for (const auto& k : all_indices(n)) {
                const auto m = ExteriorElement::monomial(k, n);
                const bool even = k.degree() % 2 == 0;
                CHECK(pg.T[i].apply(m) == (even ? raise(i, n).apply(m) : ExteriorElement(n)));
                CHECK(pg.S[i].apply(m) == (even ? ExteriorElement(n) : lower(i, n).apply(m)));
            }
    }
}

TEST_CASE("E_i and F_i act as factor replacement for i >= 2, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const auto cg = chevalley_generators(n);
        for (int i = 2; i <= n; ++i) {
            CHECK(cg.E[i] == replace_factor(i - 1, i - 2, n));
            CHECK(cg.F[i] == replace_factor(i - 2, i - 1, n));
        }
    }
}

TEST_CASE("H_i are diagonal and commute, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto cg = chevalley_generators(n);
        for (int i = 0; i <= n; ++i) {
            for (const auto& k : all_indices(n)) {
                const auto& col = cg.Hi[i].column(k);
                CHECK(col.terms().size() <= 1);
                if (!col.is_zero()) CHECK(col.terms().begin()->first == k);
            }
            for (int j = 0; j <= n; ++j) CHECK(commutator(cg.Hi[i], cg.Hi[j]).is_zero());
        }
    }
}

TEST_CASE("action table") {
    CHECK(lemma_action_table(1).status == Status::pass);
    CHECK(lemma_action_table(3).status == Status::pass);
    CHECK(lemma_action_table(0).status == Status::vacuous);
    const auto r = lemma_action_table(5);
    CHECK(r.passed());
    CHECK(r.relations_checked > 0);
}

TEST_CASE("operator names") {
    CHECK(operator_by_name("raise:2", 4) == raise(2, 4));
    CHECK(operator_by_name("tlower:1", 3) == twisted_lower(1, 3));
    CHECK(operator_by_name("H", 3) == grading_h(3));
    CHECK(operator_by_name("E:2", 3) == chevalley_generators(3).E[2]);
    CHECK_THROWS_AS(operator_by_name("bogus:1", 3), std::invalid_argument);
    CHECK_THROWS_AS(operator_by_name("raise:", 3), std::invalid_argument);
    CHECK_THROWS_AS(operator_by_name("E:9", 3), std::invalid_argument);
    CHECK_THROWS_AS(operator_by_name("lower:3", 3), std::invalid_argument);
}
