#include "coha/relations.hpp"

#include <iomanip>
#include <memory>
#include <stdexcept>

namespace coha {

CartanMatrix::CartanMatrix(int m) : m_(m), entries_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0) {
    if (m < 1) throw std::invalid_argument("Cartan matrix needs at least one node");
}

std::size_t CartanMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= m_ || j >= m_) throw std::out_of_range("Cartan matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j);
}

bool CartanMatrix::is_symmetric() const {
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < i; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const CartanMatrix& a) {
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) os << (j ? " " : "") << std::setw(2) << a.at(i, j);
        os << '\n';
    }
    return os;
}

CartanMatrix cartan_D(int m) {
    if (m < 3) throw std::invalid_argument("cartan_D needs m >= 3");
    CartanMatrix a(m);
    for (int i = 0; i < m; ++i) a.set(i, i, 2);
    for (int fork : {0, 1}) {
        a.set(fork, 2, -1);
        a.set(2, fork, -1);
    }
    for (int i = 3; i < m; ++i) {
        a.set(i - 1, i, -1);
        a.set(i, i - 1, -1);
    }
    return a;
}

CartanMatrix serre_cartan(int n) {
    if (n < 1) throw std::invalid_argument("serre_cartan needs n >= 1");
    if (n >= 2) return cartan_D(n + 1);
    CartanMatrix a(2);
    a.set(0, 0, 2);
    a.set(1, 1, 2);
    return a;
}

CartanMatrix extract_cartan(int n) {
    if (n < 2) throw std::invalid_argument("extract_cartan needs n >= 2");
    const auto g = chevalley_generators(n);
    CartanMatrix a(n + 1);
    for (int j = 0; j <= n; ++j) {
        const auto& e = g.E[static_cast<std::size_t>(j)];
        if (e.is_zero()) throw std::domain_error("E_" + std::to_string(j) + " is zero; column is vacuous");
        for (int i = 0; i <= n; ++i) {
            const auto c = commutator(g.Hi[static_cast<std::size_t>(i)], e).scalar_multiple_of(e);
            if (!c || c->get_den() != 1)
                throw std::domain_error("[H_" + std::to_string(i) + ",E_" + std::to_string(j) + "] is not an integer multiple of E_" +
                                        std::to_string(j));
            a.set(j, i, static_cast<int>(c->get_num().get_si()));
        }
    }
    return a;
}

namespace {

std::string pair_name(const char* family, int i, int j) {
    return std::string(family) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Compares two lazily built operators; reports the first differing basis
// monomial.
RelationCheck operator_identity(std::string relation, std::function<GradedOperator()> lhs, std::function<GradedOperator()> rhs) {
    RelationCheck check;
    check.relation = relation;
    check.run = [relation, lhs = std::move(lhs), rhs = std::move(rhs)]() -> std::optional<Counterexample> {
        const GradedOperator a = lhs();
        const GradedOperator b = rhs();
        const auto k = a.first_difference(b);
        if (!k) return std::nullopt;
        return Counterexample{relation, witness_of(*k), to_string(a.column(*k)), to_string(b.column(*k))};
    };
    return check;
}

}  // namespace

VerificationReport check_serre(int n, int jobs) {
    return timed_report("serre", n, [n, jobs](VerificationReport& report) {
        if (n < 1) {
            report.params["note"] = "no generators";
            return;
        }
        auto g = std::make_shared<const ChevalleyGenerators>(chevalley_generators(n));
        const CartanMatrix a = serre_cartan(n);
        report.params["cartan"] = n >= 2 ? "D" + std::to_string(n + 1) : "D2 (two disconnected nodes)";
        const int m = n + 1;
        const GradedOperator zero = GradedOperator::zero(n);
        auto E = [g](int i) { return g->E[static_cast<std::size_t>(i)]; };
        auto F = [g](int i) { return g->F[static_cast<std::size_t>(i)]; };
        auto Hi = [g](int i) { return g->Hi[static_cast<std::size_t>(i)]; };
        auto zero_op = [zero] { return zero; };

        std::vector<RelationCheck> checks;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                const Rational aji = a.at(j, i);
                checks.push_back(operator_identity(pair_name("HH", i, j), [=] { return commutator(Hi(i), Hi(j)); }, zero_op));
                checks.push_back(operator_identity(pair_name("EF", i, j), [=] { return commutator(E(i), F(j)); },
                                                   [=] { return i == j ? Hi(i) : zero; }));
                checks.push_back(operator_identity(pair_name("HE", i, j), [=] { return commutator(Hi(i), E(j)); },
                                                   [=] { return E(j) * aji; }));
                checks.push_back(operator_identity(pair_name("HF", i, j), [=] { return commutator(Hi(i), F(j)); },
                                                   [=] { return F(j) * Rational(-aji); }));
                if (i == j) continue;
                const int power = 1 - a.at(j, i);
                checks.push_back(operator_identity(pair_name("adE", i, j), [=] { return ad_pow(E(i), power, E(j)); }, zero_op));
                checks.push_back(operator_identity(pair_name("adF", i, j), [=] { return ad_pow(F(i), power, F(j)); }, zero_op));
            }
        }
        run_checks(checks, jobs, report);
    });
}

VerificationReport check_clifford(int n, Annihilator kind, int jobs) {
    const bool twisted = kind == Annihilator::twisted;
    return timed_report(twisted ? "clifford" : "clifford-untwisted", n, [n, twisted, jobs](VerificationReport& report) {
        if (n < 1) {
            report.params["note"] = "no generators";
            return;
        }
        struct Ops {
            std::vector<GradedOperator> plus, minus;
            GradedOperator id, zero;
        };
        auto ops = std::make_shared<Ops>(Ops{{}, {}, GradedOperator::identity(n), GradedOperator::zero(n)});
        for (int i = 0; i < n; ++i) {
            ops->plus.push_back(raise(i, n));
            ops->minus.push_back(twisted ? twisted_lower(i, n) : lower(i, n));
        }
        report.params["annihilator"] = twisted ? "left derivative" : "right derivative";
        auto P = [ops](int i) -> const GradedOperator& { return ops->plus[static_cast<std::size_t>(i)]; };
        auto M = [ops](int i) -> const GradedOperator& { return ops->minus[static_cast<std::size_t>(i)]; };
        auto zero_op = [ops] { return ops->zero; };

        std::vector<RelationCheck> checks;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                checks.push_back(operator_identity(pair_name("{a+,a+}", i, j), [=] { return anticommutator(P(i), P(j)); }, zero_op));
                checks.push_back(operator_identity(pair_name("{a-,a-}", i, j), [=] { return anticommutator(M(i), M(j)); }, zero_op));
                checks.push_back(operator_identity(pair_name("{a+,a-}", i, j), [=] { return anticommutator(P(i), M(j)); },
                                                   [=] { return i == j ? ops->id : ops->zero; }));
            }
        }
        run_checks(checks, jobs, report);
    });
}

}  // namespace coha
