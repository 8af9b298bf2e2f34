#include "coha/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coha {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var, int power) {
    if (var < 0 || var >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = power;
    MultiPoly p(nvars);
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(const Exponent& exponent, const Rational& c) {
    MultiPoly p(static_cast<int>(exponent.size()));
    p.add_term(exponent, c);
    return p;
}

Rational MultiPoly::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

void MultiPoly::add_term(const Exponent& exponent, const Rational& c) {
    if (static_cast<int>(exponent.size()) != nvars_) throw std::invalid_argument("exponent length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials over different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::embed(std::span<const int> target, int target_nvars) const {
    if (static_cast<int>(target.size()) != nvars_) throw std::invalid_argument("embedding map has wrong length");
    MultiPoly out(target_nvars);
    Exponent e(static_cast<std::size_t>(target_nvars));
    for (const auto& [src, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            int t = target[i];
            if (t < 0 || t >= target_nvars) throw std::out_of_range("embedding target out of range");
            e[static_cast<std::size_t>(t)] += src[i];
        }
        out.add_term(e, c);
    }
    return out;
}

MultiPoly MultiPoly::swap_variables(int a, int b) const {
    MultiPoly out(nvars_);
    for (const auto& [src, c] : terms_) {
        Exponent e = src;
        std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
        out.add_term(e, c);
    }
    return out;
}

bool MultiPoly::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i)
        if (swap_variables(i, i + 1) != *this) return false;
    return true;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

bool MultiPoly::divide_by_difference(int a, int b, MultiPoly* quotient) const {
    if (a == b || a < 0 || b < 0 || a >= nvars_ || b >= nvars_) throw std::out_of_range("bad variable pair for division");
    const auto ua = static_cast<std::size_t>(a);

    // Group by power of x_a: P = sum_k c_k x_a^k, c_k free of x_a.
    std::map<int, MultiPoly> by_power;
    int top = -1;
    for (const auto& [src, c] : terms_) {
        Exponent e = src;
        int k = e[ua];
        e[ua] = 0;
        by_power.try_emplace(k, nvars_).first->second.add_term(e, c);
        top = std::max(top, k);
    }

    // Synthetic division by (x_a - t) with t = x_b:
    // q_{k-1} = c_k + t q_k, remainder c_0 + t q_0.
    MultiPoly out(nvars_);
    MultiPoly carry(nvars_);
    const MultiPoly t = variable(nvars_, b);
    for (int k = top; k >= 1; --k) {
        auto it = by_power.find(k);
        MultiPoly q = carry * t;
        if (it != by_power.end()) q += it->second;
        for (const auto& [src, c] : q.terms_) {
            Exponent e = src;
            e[ua] = k - 1;
            out.add_term(e, c);
        }
        carry = std::move(q);
    }
    MultiPoly remainder = carry * t;
    if (auto it = by_power.find(0); it != by_power.end()) remainder += it->second;
    if (!remainder.is_zero()) return false;
    if (quotient) *quotient = std::move(out);
    return true;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    // Highest terms first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        os << (first ? "" : " ") << to_signed_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
        }
        first = false;
    }
    return os;
}

std::string to_string(const MultiPoly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

}  // namespace coha
