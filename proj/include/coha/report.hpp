#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coha {

enum class Status { pass, fail, vacuous };

std::string to_string(Status s);

struct Counterexample {
    std::string relation;
    std::vector<int> witness;  // basis monomial on which the sides differ
    std::string lhs;
    std::string rhs;
};

// Outcome of one verification suite. Status is derived by finalize():
// pass iff no counterexamples and at least one relation was checked.
struct VerificationReport {
    std::string check;
    int n = 0;
    std::map<std::string, std::string> params;
    Status status = Status::vacuous;
    long relations_checked = 0;
    std::vector<Counterexample> counterexamples;
    std::chrono::milliseconds elapsed{0};

    void record(bool ok, Counterexample witness_if_failed);
    void merge(VerificationReport&& other);
    // Sorts counterexamples by (relation, witness) and sets status.
    void finalize();
    bool passed() const noexcept { return status == Status::pass; }
};

// One relation whose evaluation yields a counterexample or nothing.
struct RelationCheck {
    std::string relation;
    std::function<std::optional<Counterexample>()> run;
};

// Evaluates checks on up to `jobs` worker threads (jobs <= 1 runs inline)
// and folds the outcomes into report in a deterministic order.
void run_checks(const std::vector<RelationCheck>& checks, int jobs, VerificationReport& report);

// Times body and stores the duration in report.elapsed, then finalizes.
VerificationReport timed_report(std::string check, int n, const std::function<void(VerificationReport&)>& body);

}  // namespace coha
