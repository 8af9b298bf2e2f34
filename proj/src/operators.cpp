#include "coha/operators.hpp"

#include <charconv>
#include <stdexcept>

namespace coha {

namespace {

constexpr int kMaxGenerators = 20;

void check_index(int i, int n, const char* what) {
    if (i < 0 || i >= n)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
}

}  // namespace

GradedOperator::GradedOperator(int n, std::string label) : n_(n), label_(std::move(label)) {
    if (n < 0 || n > kMaxGenerators) throw std::invalid_argument("operator rank outside the supported range");
    columns_.assign(std::size_t{1} << n, ExteriorElement(n));
}

GradedOperator GradedOperator::identity(int n) {
    return from_action(n, "Id", [n](const WedgeIndex& k) { return ExteriorElement::monomial(k, n); });
}

void GradedOperator::check_compatible(const GradedOperator& other) const {
    if (n_ != other.n_) throw std::invalid_argument("operators on different exterior algebras");
}

ExteriorElement GradedOperator::apply(const ExteriorElement& a) const {
    if (a.bound() != n_) throw std::invalid_argument("element bound does not match the operator");
    ExteriorElement out(n_);
    for (const auto& [k, c] : a.terms()) out += column(k) * c;
    return out;
}

bool GradedOperator::is_zero() const {
    for (const auto& col : columns_)
        if (!col.is_zero()) return false;
    return true;
}

std::optional<WedgeIndex> GradedOperator::first_difference(const GradedOperator& other) const {
    check_compatible(other);
    for (const auto& k : all_indices(n_))
        if (column(k) != other.column(k)) return k;
    return std::nullopt;
}

std::optional<Rational> GradedOperator::scalar_multiple_of(const GradedOperator& other) const {
    check_compatible(other);
    std::optional<Rational> c;
    for (std::size_t m = 0; m < columns_.size() && !c; ++m) {
        const auto& col = other.columns_[m];
        if (col.is_zero()) continue;
        const auto& [k, v] = *col.terms().begin();
        c = columns_[m].coefficient(k) / v;
    }
    if (!c) throw std::domain_error("scalar_multiple_of: reference operator is zero");
    if (*this == other * *c) return c;
    return std::nullopt;
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& other) {
    check_compatible(other);
    for (std::size_t m = 0; m < columns_.size(); ++m) columns_[m] += other.columns_[m];
    return *this;
}

GradedOperator& GradedOperator::operator-=(const GradedOperator& other) {
    check_compatible(other);
    for (std::size_t m = 0; m < columns_.size(); ++m) columns_[m] -= other.columns_[m];
    return *this;
}

GradedOperator& GradedOperator::operator*=(const Rational& c) {
    for (auto& col : columns_) col *= c;
    return *this;
}

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    a.check_compatible(b);
    GradedOperator out(a.n_, a.label_ + "*" + b.label_);
    for (std::size_t m = 0; m < b.columns_.size(); ++m) out.columns_[m] = a.apply(b.columns_[m]);
    return out;
}

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) {
    GradedOperator out = a * b - b * a;
    return out.relabel("[" + a.label() + "," + b.label() + "]");
}

GradedOperator anticommutator(const GradedOperator& a, const GradedOperator& b) {
    GradedOperator out = a * b + b * a;
    return out.relabel("{" + a.label() + "," + b.label() + "}");
}

GradedOperator ad_pow(const GradedOperator& a, int m, const GradedOperator& b) {
    if (m < 0) throw std::invalid_argument("ad_pow: negative power");
    GradedOperator out = b;
    for (int i = 0; i < m; ++i) out = commutator(a, out);
    return out;
}

GradedOperator raise(int i, int n) {
    if (i < 0) throw std::out_of_range("raise: negative generator index");
    const std::string label = "raise:" + std::to_string(i);
    if (i >= n) return GradedOperator(n, label);
    return GradedOperator::from_action(n, label, [i, n](const WedgeIndex& k) {
        return wedge(ExteriorElement::generator(i, n), ExteriorElement::monomial(k, n));
    });
}

GradedOperator lower(int i, int n) {
    check_index(i, n, "lower");
    return GradedOperator::from_action(n, "lower:" + std::to_string(i),
                                       [i, n](const WedgeIndex& k) { return d_right(i, ExteriorElement::monomial(k, n)); });
}

GradedOperator twisted_lower(int i, int n) {
    check_index(i, n, "tlower");
    return GradedOperator::from_action(n, "tlower:" + std::to_string(i),
                                       [i, n](const WedgeIndex& k) { return d_left(i, ExteriorElement::monomial(k, n)); });
}

GradedOperator replace_factor(int from, int to, int n) {
    check_index(from, n, "replace");
    check_index(to, n, "replace");
    return GradedOperator::from_action(n, "R" + std::to_string(from) + "->" + std::to_string(to), [=](const WedgeIndex& k) {
        if (!k.contains(from)) return ExteriorElement(n);
        std::vector<int> gens = k.indices();
        gens[static_cast<std::size_t>(k.position(from) - 1)] = to;
        return canonicalize(gens, n);
    });
}

GradedOperator grading_h(int n) {
    if (n < 1) throw std::invalid_argument("grading_h needs n >= 1");
    return commutator(raise(0, n), lower(0, n)).relabel("H");
}

namespace {

const Rational kHalf(1, 2);

// (x + [H,x]/2)/2 and (x - [H,x]/2)/2.
GradedOperator plus_half_commutator(const GradedOperator& h, const GradedOperator& x) {
    return (x + commutator(h, x) * kHalf) * kHalf;
}

GradedOperator minus_half_commutator(const GradedOperator& h, const GradedOperator& x) {
    return (x - commutator(h, x) * kHalf) * kHalf;
}

}  // namespace

ProjectedGenerators projected_generators(int n) {
    const GradedOperator h = grading_h(n);
    ProjectedGenerators out;
    for (int i = 0; i < n; ++i) {
        out.T.push_back(plus_half_commutator(h, raise(i, n)).relabel("T:" + std::to_string(i)));
        out.S.push_back(minus_half_commutator(h, lower(i, n)).relabel("S:" + std::to_string(i)));
    }
    return out;
}

ChevalleyGenerators chevalley_generators(int n) {
    if (n < 1) throw std::invalid_argument("chevalley_generators needs n >= 1");
    const auto [T, S] = projected_generators(n);
    ChevalleyGenerators g{grading_h(n), {}, {}, {}};
    const GradedOperator a0p = raise(0, n);
    const GradedOperator a0m = lower(0, n);

    g.E.push_back(plus_half_commutator(g.H, a0m) * Rational(-1));
    g.F.push_back(minus_half_commutator(g.H, a0p));
    g.E.push_back(S[0]);
    g.F.push_back(T[0]);
    for (int i = 2; i <= n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        g.E.push_back(commutator(T[u - 2], S[u - 1]));
        g.F.push_back(commutator(T[u - 1], S[u - 2]));
    }
    for (int i = 0; i <= n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        g.E[u].relabel("E:" + std::to_string(i));
        g.F[u].relabel("F:" + std::to_string(i));
        g.Hi.push_back(commutator(g.E[u], g.F[u]).relabel("Hi:" + std::to_string(i)));
    }
    return g;
}

std::vector<int> witness_of(const WedgeIndex& k) { return k.indices(); }

namespace {

// Expected images, computed straight from the monomial.
ExteriorElement wedge_front(int i, const WedgeIndex& k, int n) {
    return wedge(ExteriorElement::generator(i, n), ExteriorElement::monomial(k, n));
}

ExteriorElement scaled(const WedgeIndex& k, int n, int c) { return ExteriorElement::monomial(k, n, c); }

ExteriorElement replaced(const WedgeIndex& k, int from, int to, int n) {
    std::vector<int> gens = k.indices();
    gens[static_cast<std::size_t>(k.position(from) - 1)] = to;
    return canonicalize(gens, n);
}

}  // namespace

VerificationReport lemma_action_table(int n) {
    return timed_report("lemma-actions", n, [n](VerificationReport& report) {
        if (n < 1) {
            report.params["note"] = "no generators";
            return;
        }
        const auto g = chevalley_generators(n);
        const auto [T, S] = projected_generators(n);
        const ExteriorElement zero(n);

        // First counterexample per item only.
        std::map<std::string, bool> seen;
        auto check = [&](const std::string& item, const GradedOperator& op, const WedgeIndex& k, const ExteriorElement& expected) {
            const ExteriorElement& got = op.column(k);
            const bool ok = got == expected;
            ++report.relations_checked;
            if (!ok && !seen[item]) {
                seen[item] = true;
                report.counterexamples.push_back({item, witness_of(k), to_string(got), to_string(expected)});
            }
        };

        for (const auto& k : all_indices(n)) {
            const int deg = k.degree();
            const bool even = deg % 2 == 0;
            const bool has0 = k.contains(0);
            const auto self = ExteriorElement::monomial(k, n);

            check("1: H", g.H, k, scaled(k, n, even ? -1 : 1));
            check("2: E_0", g.E[0], k, (even && has0) ? d_right(0, self) * Rational(-1) : zero);
            check("3: F_0", g.F[0], k, (!even && !has0) ? wedge_front(0, k, n) : zero);
            check("4: E_1", g.E[1], k, (!even && has0) ? d_right(0, self) : zero);
            check("5: F_1", g.F[1], k, (even && !has0) ? wedge_front(0, k, n) : zero);
            check("10: H_0", g.Hi[0], k, (even && has0) ? scaled(k, n, -1) : (!even && !has0) ? self : zero);
            check("11: H_1", g.Hi[1], k, (even && !has0) ? self : (!even && has0) ? scaled(k, n, -1) : zero);

            for (int i = 2; i <= n; ++i) {
                const auto u = static_cast<std::size_t>(i);
                const std::string at = " (i=" + std::to_string(i) + ")";
                const bool hasA = k.contains(i - 1);  // phi_{i-1}
                const bool hasB = k.contains(i - 2);  // phi_{i-2}
                check("6: S_{i-1}" + at, S[u - 1], k, (!even && hasA) ? d_right(i - 1, self) : zero);
                check("7: T_{i-1}" + at, T[u - 1], k, (even && !hasA) ? wedge_front(i - 1, k, n) : zero);
                check("8: E_i" + at, g.E[u], k, (hasA && !hasB) ? replaced(k, i - 1, i - 2, n) : zero);
                check("9: F_i" + at, g.F[u], k, (hasB && !hasA) ? replaced(k, i - 2, i - 1, n) : zero);
                check("12: H_i" + at, g.Hi[u], k, (hasA && !hasB) ? scaled(k, n, -1) : (hasB && !hasA) ? self : zero);
            }
        }
    });
}

namespace {

int parse_index(const std::string& name, const std::string& digits) {
    int value = -1;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || ec != std::errc() || ptr != last || value < 0)
        throw std::invalid_argument("bad index in operator name '" + name + "'");
    return value;
}

}  // namespace

GradedOperator operator_by_name(const std::string& name, int n) {
    if (n < 1) throw std::invalid_argument("operators need n >= 1");
    if (name == "H") return grading_h(n);
    const auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown operator '" + name + "'");
    const std::string head = name.substr(0, colon);
    const int i = parse_index(name, name.substr(colon + 1));
    auto require = [&](int limit) {
        if (i >= limit)
            throw std::invalid_argument("index " + std::to_string(i) + " out of range for '" + head + "' (max " +
                                        std::to_string(limit - 1) + ")");
    };
    if (head == "raise") return raise(i, n);
    if (head == "lower") return require(n), lower(i, n);
    if (head == "tlower") return require(n), twisted_lower(i, n);
    if (head == "T") return require(n), projected_generators(n).T[static_cast<std::size_t>(i)];
    if (head == "S") return require(n), projected_generators(n).S[static_cast<std::size_t>(i)];
    if (head == "E") return require(n + 1), chevalley_generators(n).E[static_cast<std::size_t>(i)];
    if (head == "F") return require(n + 1), chevalley_generators(n).F[static_cast<std::size_t>(i)];
    if (head == "Hi") return require(n + 1), chevalley_generators(n).Hi[static_cast<std::size_t>(i)];
    throw std::invalid_argument("unknown operator '" + name + "'");
}

}  // namespace coha
