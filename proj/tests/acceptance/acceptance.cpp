#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coha/coinvariant.hpp"
#include "coha/exterior.hpp"
#include "coha/operators.hpp"
#include "coha/relations.hpp"
#include "coha/suites.hpp"

using namespace coha;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<std::string()> run;  // empty string on success, else a reason
};

std::string first_failure(const VerificationReport& r) {
    if (r.passed()) return {};
    std::string why = r.check + " n=" + std::to_string(r.n) + " " + to_string(r.status);
    if (!r.counterexamples.empty()) why += " at " + r.counterexamples.front().relation;
    return why;
}

std::string sweep(int lo, int hi, const std::function<VerificationReport(int)>& suite) {
    for (int n = lo; n <= hi; ++n)
        if (auto why = first_failure(suite(n)); !why.empty()) return why;
    return {};
}

bool cartan_entries_match(const CartanMatrix& a) {
    const int m = a.size();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int expected = 0;
            if (i == j) expected = 2;
            else if ((i <= 1 && j == 2) || (j <= 1 && i == 2)) expected = -1;
            else if (i >= 2 && j >= 2 && (i - j == 1 || j - i == 1)) expected = -1;
            if (a.at(i, j) != expected) return false;
        }
    return true;
}

std::vector<Criterion> criteria() {
    return {
        {1, "Serre relations, n = 1..6", 60, [] { return sweep(1, 6, [](int n) { return check_serre(n); }); }},
        {2, "Cartan extraction equals D_{n+1}, n = 2..6", 10,
         [] {
             for (int n = 2; n <= 6; ++n) {
                 const auto a = extract_cartan(n);
                 if (!(a == cartan_D(n + 1)) || !cartan_entries_match(a)) return "mismatch at n=" + std::to_string(n);
             }
             return std::string{};
         }},
        {3, "Clifford relations, n = 1..10", 60, [] { return sweep(1, 10, [](int n) { return check_clifford(n); }); }},
        {4, "transpose identity on every box, n <= 5", 60,
         [] {
             for (int n = 1; n <= 5; ++n) {
                 CoinvariantReducer reducer(n);
                 for (int d = 0; d <= n; ++d)
                     for (const auto& lambda : box_partitions(BoxShape(d, n)))
                         if (!verify_transpose_identity(n, d, lambda, reducer))
                             return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " lambda=" + to_string(lambda);
             }
             return std::string{};
         }},
        {5, "h/e duality, 0 <= r <= n <= 6, all d", 30,
         [] {
             for (int n = 1; n <= 6; ++n) {
                 CoinvariantReducer reducer(n);
                 for (int d = 0; d <= n; ++d)
                     for (int r = 0; r <= n; ++r)
                         if (!verify_he_duality(n, d, r, reducer))
                             return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " r=" + std::to_string(r);
             }
             return std::string{};
         }},
        {6, "localized actions equal wedge/derivative operators, n <= 5", 120,
         [] { return sweep(1, 5, verify_equivalence_suite); }},
        {7, "generator action table, n <= 6", 30, [] { return sweep(1, 6, lemma_action_table); }},
        {8, "index shift lies in the truncation kernel, n <= 5", 10, [] { return sweep(1, 5, verify_kernel_suite); }},
        {9, "untwisted annihilator breaks the mixed relation, n = 2..8", 10,
         [] {
             for (int n = 2; n <= 8; ++n) {
                 const auto r = check_clifford(n, Annihilator::untwisted);
                 if (r.status != Status::fail) return "untwisted variant passed at n=" + std::to_string(n);
                 for (const auto& c : r.counterexamples)
                     if (c.relation.rfind("{a+,a-}", 0) != 0) return "unexpected failure " + c.relation;
             }
             return std::string{};
         }},
    };
}

}  // namespace

int main() {
    int failures = 0;
    for (const auto& c : criteria()) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        try {
            why = c.run();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (why.empty() && secs > c.budget_s) why = "over time budget";
        const bool ok = why.empty();
        if (!ok) ++failures;
        std::printf("%s [%d] %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs, c.budget_s,
                    ok ? "" : ": ", why.c_str());
    }
    std::printf("%d/%zu criteria passed\n", 9 - failures, criteria().size());
    return failures == 0 ? 0 : 1;
}
