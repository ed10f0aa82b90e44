#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"

using namespace quadpart;
using testutil::el;

TEST_CASE("ideal theorem over Q(sqrt2)") {
    const QuadField f2(2);
    const Ideal s2 = Ideal::from_generators(f2, {el(f2, 0, 1)});
    const auto rep = verify_ideal_theorem(GlaisherData(s2, 2), 10);
    CHECK(rep.passed());
    CHECK(rep.failures == 0);
    CHECK_FALSE(rep.first_counterexample.has_value());

    // the worked coefficient appears in the report at delta = 6+2sqrt2
    bool found = false;
    for (const auto& e : rep.entries) {
        if (e.delta == el(f2, 6, 2)) {
            found = true;
            for (const auto& [label, value] : e.counts) {
                CHECK(value == 4);
            }
        }
    }
    CHECK(found);

    const Ideal g3s2 = Ideal::from_generators(f2, {el(f2, 0, 3)});
    CHECK(verify_ideal_theorem(GlaisherData(g3s2, 6), 10).passed());
}

TEST_CASE("ideal theorem over Q reduces to Euler") {
    const QuadField q = QuadField::rationals();
    const Ideal two = Ideal::from_generators(q, {el(q, 2)});
    const auto rep = verify_ideal_theorem(GlaisherData(two, 2), 12);
    CHECK(rep.passed());
    for (const auto& e : rep.entries) {
        if (e.delta == el(q, 5)) {
            for (const auto& [label, value] : e.counts) {
                CHECK(value == 3);  // 5, 3+1+1, 1^5 / 5, 4+1, 3+2
            }
        }
    }
}

TEST_CASE("glaisher corollary across fields") {
    for (long long d : {2, 3, 5}) {
        const QuadField f{Int(d)};
        CHECK(verify_glaisher(f, 2, 10).passed());
        CHECK(verify_glaisher(f, 3, 10).passed());
    }
    const auto rep = verify_glaisher(QuadField::rationals(), 3, 9);
    CHECK(rep.passed());
    for (const auto& e : rep.entries) {
        if (e.delta == el(QuadField::rationals(), 6)) {
            for (const auto& [label, value] : e.counts) {
                CHECK(value == 7);
            }
        }
    }
    CHECK_THROWS_AS(verify_glaisher(QuadField(2), 1, 8), std::invalid_argument);
}

TEST_CASE("chain theorem report") {
    const auto rep = verify_chain_theorem(QuadField(3), 10, 3);
    CHECK(rep.passed());
    // m = 1 rows compare two ones
    for (const auto& e : rep.entries) {
        if (e.m && *e.m == 1) {
            for (const auto& [label, value] : e.counts) {
                CHECK(value == 1);
            }
        }
    }
    CHECK(verify_chain_theorem(QuadField::rationals(), 8, 4).passed());
    CHECK(verify_chain_theorem(QuadField(5), 8, 3).passed());
}

TEST_CASE("remark report records the discrepancy with the stated values") {
    const auto rep = verify_remark_counterexample();
    REQUIRE(rep.entries.size() == 2);
    CHECK_FALSE(rep.passed());
    CHECK(rep.failures == 2);

    auto value_of = [](const VerifyEntry& e, const std::string& label) {
        for (const auto& [l, v] : e.counts) {
            if (l == label) {
                return v;
            }
        }
        FAIL("missing label " + label);
        return Int(0);
    };
    const QuadField f3(3);
    CHECK(rep.entries[0].delta == el(f3, 7, 2));
    CHECK(value_of(rep.entries[0], "distinct") == 4);
    CHECK(value_of(rep.entries[0], "avoiding") == 2);
    CHECK(value_of(rep.entries[0], "distinct_stated") == 4);
    CHECK(value_of(rep.entries[0], "avoiding_stated") == 4);
    CHECK(rep.entries[1].delta == el(f3, 9, 2));
    CHECK(value_of(rep.entries[1], "distinct") == 8);
    CHECK(value_of(rep.entries[1], "avoiding") == 5);
    CHECK(value_of(rep.entries[1], "distinct_stated") == 7);
    CHECK(value_of(rep.entries[1], "avoiding_stated") == 5);
    // both readings surfaced in the header
    REQUIRE(!rep.notes.empty());
    CHECK(rep.notes[0].find("outside (1+sqrt3)") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    auto render = [] {
        std::ostringstream os;
        print_report(os, verify_ideal_theorem(
                             GlaisherData(Ideal::from_generators(QuadField(2),
                                                                 {el(QuadField(2), 0, 1)}),
                                          2),
                             8),
                     true);
        print_report(os, verify_chain_theorem(QuadField(3), 8, 3), true);
        print_report(os, verify_remark_counterexample(), true);
        return os.str();
    };
    const std::string first = render();
    const std::string second = render();
    CHECK(first == second);
    CHECK(first.find("PASSED") != std::string::npos);
    CHECK(first.find("FAILED") != std::string::npos);
}
