#include "coha/suites.hpp"

#include "coha/coinvariant.hpp"
#include "coha/exterior.hpp"
#include "coha/localization.hpp"
#include "coha/operators.hpp"

namespace coha {

VerificationReport verify_transpose_suite(int n) {
    return timed_report("transpose", n, [n](VerificationReport& report) {
        if (n < 1) return;
        CoinvariantReducer reducer(n);
        for (int d = 0; d <= n; ++d) {
            for (const auto& lambda : box_partitions(BoxShape(d, n))) {
                const bool ok = verify_transpose_identity(n, d, lambda, reducer);
                std::vector<int> witness{d};
                witness.insert(witness.end(), lambda.parts().begin(), lambda.parts().end());
                report.record(ok, {"transpose(d=" + std::to_string(d) + ")", witness,
                                   "s" + to_string(lambda) + "(x_1..x_d)",
                                   (lambda.weight() % 2 ? "-s" : "+s") + to_string(transpose(lambda)) + "(x_{d+1}..x_n)"});
            }
        }
    });
}

VerificationReport verify_he_duality_suite(int n) {
    return timed_report("he-duality", n, [n](VerificationReport& report) {
        if (n < 1) return;
        CoinvariantReducer reducer(n);
        for (int d = 0; d <= n; ++d) {
            for (int r = 0; r <= n; ++r) {
                const bool ok = verify_he_duality(n, d, r, reducer);
                report.record(ok, {"he-duality", {d, r}, "h_" + std::to_string(r) + "(x_1..x_" + std::to_string(d) + ")",
                                   (r % 2 ? "-e_" : "+e_") + std::to_string(r) + "(x_" + std::to_string(d + 1) + "..x_" +
                                       std::to_string(n) + ")"});
            }
        }
    });
}

VerificationReport verify_equivalence_suite(int n) {
    return timed_report("equivalence", n, [n](VerificationReport& report) {
        if (n < 1) return;
        std::vector<GradedOperator> ups, downs, twisted_downs;
        for (int i = 0; i < n; ++i) {
            ups.push_back(raise(i, n));
            downs.push_back(lower(i, n));
            twisted_downs.push_back(twisted_lower(i, n));
        }
        auto compare = [&](const std::string& relation, const WedgeIndex& k, const ExteriorElement& got, const ExteriorElement& want) {
            report.record(got == want, {relation, witness_of(k), to_string(got), to_string(want)});
        };
        for (int d = 0; d <= n; ++d) {
            const BoxShape box(d, n);
            for (const auto& k : indices_of_degree(n, d)) {
                const SchurClass cls = to_schur(ExteriorElement::monomial(k, n), box);
                for (int i = 0; i < n; ++i) {
                    const auto u = static_cast<std::size_t>(i);
                    const std::string at = "(i=" + std::to_string(i) + ")";
                    if (d < n) compare("raise" + at, k, from_schur(raise_localized(i, cls)), ups[u].column(k));
                    if (d == 0) continue;
                    const auto partner = static_cast<std::size_t>(n - i - 1);
                    const SchurClass via_transpose = lower_via_transpose(i, cls);
                    compare("lower" + at, k, from_schur(via_transpose), downs[partner].column(k));
                    compare("lower-raw" + at, k, from_schur(lower_localized_raw(i, cls)), from_schur(via_transpose));
                    compare("twisted-lower" + at, k, from_schur(twisted_lower_via_transpose(i, cls)), twisted_downs[partner].column(k));
                }
            }
        }
    });
}

VerificationReport verify_kernel_suite(int n) {
    return timed_report("kernel", n, [n](VerificationReport& report) {
        if (n < 1) return;
        for (int d = 1; d <= n; ++d) {
            for (const auto& k : indices_of_degree(n, d)) {
                const ExteriorElement phi = ExteriorElement::monomial(k);
                const ExteriorElement shifted = multiply_ed_power(phi, n);

                // Expected Phi_{k+n} built from the Schur side: every part of
                // lambda(k), padded to d parts, grows by n.
                const Partition lambda = index_to_partition(k);
                std::vector<int> grown(static_cast<std::size_t>(d));
                for (int j = 0; j < d; ++j) grown[static_cast<std::size_t>(j)] = lambda.part(j) + n;
                const ExteriorElement expected = ExteriorElement::monomial(partition_to_index(Partition(grown), d));

                report.record(shifted == expected, {"shift", witness_of(k), to_string(shifted), to_string(expected)});
                const ExteriorElement image = truncate(shifted, n);
                report.record(image.is_zero(), {"kernel", witness_of(k), to_string(image), "0"});
            }
        }
    });
}

}  // namespace coha
