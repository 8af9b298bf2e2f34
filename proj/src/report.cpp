#include "coha/report.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

namespace coha {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::vacuous: return "vacuous";
    }
    return "unknown";
}

void VerificationReport::record(bool ok, Counterexample witness_if_failed) {
    ++relations_checked;
    if (!ok) counterexamples.push_back(std::move(witness_if_failed));
}

void VerificationReport::merge(VerificationReport&& other) {
    relations_checked += other.relations_checked;
    for (auto& c : other.counterexamples) counterexamples.push_back(std::move(c));
}

void VerificationReport::finalize() {
    auto key = [](const Counterexample& c) {
        // Witness order matches WedgeIndex: degree first, then lexicographic.
        return std::make_tuple(std::cref(c.relation), c.witness.size(), std::cref(c.witness));
    };
    std::sort(counterexamples.begin(), counterexamples.end(),
              [&](const Counterexample& a, const Counterexample& b) { return key(a) < key(b); });
    if (!counterexamples.empty()) status = Status::fail;
    else if (relations_checked == 0) status = Status::vacuous;
    else status = Status::pass;
}

void run_checks(const std::vector<RelationCheck>& checks, int jobs, VerificationReport& report) {
    std::vector<std::optional<Counterexample>> results(checks.size());
    if (jobs <= 1 || checks.size() < 2) {
        for (std::size_t i = 0; i < checks.size(); ++i) results[i] = checks[i].run();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < checks.size(); i = next++) results[i] = checks[i].run();
        };
        std::vector<std::jthread> pool;
        const auto count = std::min<std::size_t>(static_cast<std::size_t>(jobs), checks.size());
        for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    for (auto& r : results) {
        ++report.relations_checked;
        if (r) report.counterexamples.push_back(std::move(*r));
    }
}

VerificationReport timed_report(std::string check, int n, const std::function<void(VerificationReport&)>& body) {
    VerificationReport report;
    report.check = std::move(check);
    report.n = n;
    const auto start = std::chrono::steady_clock::now();
    body(report);
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report.finalize();
    return report;
}

}  // namespace coha
