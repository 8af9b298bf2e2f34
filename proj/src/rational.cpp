#include "coha/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace coha {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_signed_string(const Rational& q) {
    std::string s = q.get_str();
    if (sgn(q) >= 0) s.insert(s.begin(), '+');
    return s;
}

Rational parse_rational(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.erase(body.begin());
    }
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (!digits(num) || !digits(den)) throw std::invalid_argument("malformed rational '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

}  // namespace coha
