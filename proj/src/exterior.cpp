#include "coha/exterior.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace coha {

ExteriorElement ExteriorElement::monomial(const WedgeIndex& k, std::optional<int> bound, const Rational& c) {
    ExteriorElement a(bound);
    a.add_term(k, c);
    return a;
}

Rational ExteriorElement::coefficient(const WedgeIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorElement::add_term(const WedgeIndex& k, const Rational& c) {
    if (bound_ && k.max_entry() >= *bound_)
        throw std::invalid_argument("monomial " + to_string(k) + " outside the algebra on " + std::to_string(*bound_) + " generators");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ExteriorElement::check_bound(const ExteriorElement& other) const {
    if (bound_ != other.bound_) throw std::invalid_argument("exterior elements with different bounds");
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
    check_bound(other);
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& other) {
    check_bound(other);
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

ExteriorElement canonicalize(std::span<const int> generators, std::optional<int> bound) {
    std::vector<int> g(generators.begin(), generators.end());
    int sign = 1;
    // Insertion sort; each adjacent swap is one transposition.
    for (std::size_t i = 1; i < g.size(); ++i) {
        for (std::size_t j = i; j > 0 && g[j - 1] >= g[j]; --j) {
            if (g[j - 1] == g[j]) return ExteriorElement(bound);
            std::swap(g[j - 1], g[j]);
            sign = -sign;
        }
    }
    return ExteriorElement::monomial(WedgeIndex(std::move(g)), bound, sign);
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
    if (a.bound() != b.bound()) throw std::invalid_argument("wedge of elements with different bounds");
    ExteriorElement out(a.bound());
    std::vector<int> gens;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            gens = ka.indices();
            gens.insert(gens.end(), kb.indices().begin(), kb.indices().end());
            auto m = canonicalize(gens, a.bound());
            for (const auto& [k, s] : m.terms()) out.add_term(k, s * ca * cb);
        }
    }
    return out;
}

namespace {

template <typename SignFn>
ExteriorElement delete_generator(int i, const ExteriorElement& a, SignFn sign) {
    ExteriorElement out(a.bound());
    for (const auto& [k, c] : a.terms()) {
        const int p = k.position(i);
        if (p == 0) continue;
        std::vector<int> rest = k.indices();
        rest.erase(rest.begin() + (p - 1));
        out.add_term(WedgeIndex(std::move(rest)), c * sign(k.degree(), p));
    }
    return out;
}

}  // namespace

ExteriorElement d_right(int i, const ExteriorElement& a) {
    return delete_generator(i, a, [](int d, int p) { return sign_power(d - p); });
}

ExteriorElement d_left(int i, const ExteriorElement& a) {
    return delete_generator(i, a, [](int, int p) { return sign_power(p - 1); });
}

std::optional<int> homogeneous_degree(const ExteriorElement& a) {
    std::optional<int> deg;
    for (const auto& [k, c] : a.terms()) {
        if (deg && *deg != k.degree()) throw std::invalid_argument("element is not homogeneous");
        deg = k.degree();
    }
    return deg;
}

SchurClass to_schur(const ExteriorElement& a, const BoxShape& box) {
    SchurClass out(box);
    for (const auto& [k, c] : a.terms()) {
        if (k.degree() != box.d)
            throw std::invalid_argument("term " + to_string(k) + " does not have degree " + std::to_string(box.d));
        if (k.max_entry() >= box.n) throw std::invalid_argument("term " + to_string(k) + " has an entry >= n");
        out.add(index_to_partition(k), c);
    }
    return out;
}

ExteriorElement from_schur(const SchurClass& c) {
    ExteriorElement out(c.box().n);
    for (const auto& [lambda, v] : c.coeffs()) out.add_term(partition_to_index(lambda, c.box().d), v);
    return out;
}

ExteriorElement multiply_ed_power(const ExteriorElement& a, int p) {
    if (a.bound()) throw std::invalid_argument("multiply_ed_power acts on the free algebra");
    if (p < 0) throw std::invalid_argument("negative power");
    homogeneous_degree(a);
    ExteriorElement out;
    for (const auto& [k, c] : a.terms()) {
        std::vector<int> shifted = k.indices();
        for (int& x : shifted) x += p;
        out.add_term(WedgeIndex(std::move(shifted)), c);
    }
    return out;
}

ExteriorElement truncate(const ExteriorElement& a, int n) {
    if (n < 0) throw std::invalid_argument("negative truncation bound");
    ExteriorElement out(n);
    for (const auto& [k, c] : a.terms())
        if (k.max_entry() < n) out.add_term(k, c);
    return out;
}

std::string to_string(const ExteriorElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        os << (first ? "" : " ") << to_signed_string(c) << " * " << k;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExteriorElement& a) { return os << to_string(a); }

}  // namespace coha
