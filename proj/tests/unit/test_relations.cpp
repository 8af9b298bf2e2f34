#include <doctest.h>

#include "coha/relations.hpp"

using namespace coha;

TEST_CASE("cartan_D examples") {
    const auto a3 = cartan_D(3);
    CHECK(a3.at(0, 1) == 0);
    CHECK(a3.at(0, 2) == -1);
    CHECK(a3.at(1, 2) == -1);
    for (int i = 0; i < 3; ++i) CHECK(a3.at(i, i) == 2);
    const auto a4 = cartan_D(4);
    CHECK(a4.at(2, 3) == -1);
    CHECK(a4.at(1, 3) == 0);
    CHECK(a4.at(0, 3) == 0);
    for (int m = 3; m <= 9; ++m) {
        const auto a = cartan_D(m);
        CHECK(a.is_symmetric());
        for (int i = 0; i < m; ++i) CHECK(a.at(i, i) == 2);
        for (int i = 3; i < m; ++i) CHECK(a.at(i - 1, i) == -1);
    }
    CHECK_THROWS_AS(cartan_D(2), std::invalid_argument);
}

TEST_CASE("n = 1 uses two disconnected nodes") {
    const auto a = serre_cartan(1);
    CHECK(a.size() == 2);
    CHECK(a.at(0, 1) == 0);
    CHECK(a.at(1, 1) == 2);
    CHECK(serre_cartan(4) == cartan_D(5));
}

TEST_CASE("Serre relations hold for n = 1..6") {
    for (int n = 1; n <= 6; ++n) {
        const auto r = check_serre(n);
        CHECK_MESSAGE(r.passed(), "n = " << n);
        CHECK(r.counterexamples.empty());
        CHECK(r.relations_checked > 0);
    }
}

TEST_CASE("extracted Cartan matrix is D_{n+1}") {
    for (int n = 2; n <= 6; ++n) CHECK(extract_cartan(n) == cartan_D(n + 1));
    CHECK_THROWS_AS(extract_cartan(1), std::invalid_argument);
}

TEST_CASE("Clifford relations hold for n = 1..10") {
    for (int n = 1; n <= 10; ++n) CHECK_MESSAGE(check_clifford(n).passed(), "n = " << n);
}

TEST_CASE("untwisted annihilators break the mixed relation for n >= 2") {
    CHECK(check_clifford(1, Annihilator::untwisted).passed());
    for (int n = 2; n <= 6; ++n) {
        const auto r = check_clifford(n, Annihilator::untwisted);
        CHECK(r.status == Status::fail);
        for (const auto& c : r.counterexamples) CHECK(c.relation.starts_with("{a+,a-}"));
    }
}

TEST_CASE("failure reports are sorted and independent of the job count") {
    const auto serial = check_clifford(4, Annihilator::untwisted, 1);
    const auto parallel = check_clifford(4, Annihilator::untwisted, 4);
    REQUIRE(serial.counterexamples.size() == parallel.counterexamples.size());
    for (std::size_t i = 0; i < serial.counterexamples.size(); ++i) {
        CHECK(serial.counterexamples[i].relation == parallel.counterexamples[i].relation);
        CHECK(serial.counterexamples[i].witness == parallel.counterexamples[i].witness);
        CHECK(serial.counterexamples[i].lhs == parallel.counterexamples[i].lhs);
    }
    for (std::size_t i = 1; i < serial.counterexamples.size(); ++i) {
        const auto& a = serial.counterexamples[i - 1];
        const auto& b = serial.counterexamples[i];
        CHECK(std::make_tuple(a.relation, a.witness.size(), a.witness) <= std::make_tuple(b.relation, b.witness.size(), b.witness));
    }
    CHECK(serial.relations_checked == parallel.relations_checked);
    CHECK(check_serre(4, 3).relations_checked == check_serre(4, 1).relations_checked);
}

TEST_CASE("report status derivation") {
    VerificationReport r;
    r.finalize();
    CHECK(r.status == Status::vacuous);
    r.record(true, {});
    r.finalize();
    CHECK(r.status == Status::pass);
    r.record(false, Counterexample{"x", {1}, "a", "b"});
    r.finalize();
    CHECK(r.status == Status::fail);
}
