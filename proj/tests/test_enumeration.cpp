#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "nsgs/enumeration.hpp"
#include "nsgs/symmetry.hpp"

using nsgs::EnumBound;
using nsgs::EnumMode;
using nsgs::Int;
using nsgs::NumericalSet;

TEST_CASE("numerical-set enumeration counts and order") {
    CHECK(nsgs::enumerate_numerical_sets(1) ==
          std::vector<NumericalSet>{nsgs::parse_set("0 2 ->")});
    CHECK(nsgs::enumerate_numerical_sets(2).size() == 3);   // 1 + 2
    CHECK(nsgs::enumerate_numerical_sets(4).size() == 15);  // 1 + 2 + 4 + 8

    const auto sets = nsgs::enumerate_numerical_sets(8);
    CHECK(sets.size() == 255);
    CHECK(std::is_sorted(sets.begin(), sets.end(), nsgs::canonical_less));
    const std::unordered_set<NumericalSet> unique(sets.begin(), sets.end());
    CHECK(unique.size() == sets.size());

    CHECK_THROWS_AS(nsgs::enumerate_numerical_sets(0), nsgs::BoundExceeded);
    CHECK_THROWS_AS(nsgs::enumerate_numerical_sets(25), nsgs::BoundExceeded);
}

TEST_CASE("semigroup enumeration, both strategies") {
    const auto only = nsgs::enumerate_semigroups({EnumMode::ByGenus, 1});
    CHECK(only == std::vector<NumericalSet>{nsgs::parse_set("0 2 ->")});

    // Counts per exact genus, computed independently by both strategies.
    const Int max_genus = 8;
    const auto tree = nsgs::enumerate_semigroups({EnumMode::ByGenus, max_genus});
    const auto filtered = nsgs::enumerate_semigroups_by_filter({EnumMode::ByGenus, max_genus});
    CHECK(tree == filtered);
    std::vector<Int> per_genus(static_cast<std::size_t>(max_genus) + 1, 0);
    for (const NumericalSet& s : tree) {
        ++per_genus[static_cast<std::size_t>(s.genus())];
    }
    CHECK(per_genus == std::vector<Int>{0, 1, 2, 4, 7, 12, 23, 39, 67});

    const auto by_f = nsgs::enumerate_semigroups({EnumMode::ByFrobenius, 12});
    CHECK(by_f == nsgs::enumerate_semigroups_by_filter({EnumMode::ByFrobenius, 12}));
    CHECK(std::is_sorted(by_f.begin(), by_f.end(), nsgs::canonical_less));
    for (const NumericalSet& s : by_f) {
        CHECK(nsgs::is_semigroup(s));
        CHECK(s.frobenius() <= 12);
    }
}

TEST_CASE("symmetric members show up under a Frobenius bound") {
    bool found = false;
    nsgs::enumerate_semigroups({EnumMode::ByFrobenius, 7}, [&](const NumericalSet& s) {
        if (nsgs::is_symmetric(s) && s == nsgs::parse_set("0 3 5 6 8 ->")) found = true;
    });
    CHECK(found);
}

TEST_CASE("enumeration bounds are validated") {
    CHECK_THROWS_AS(nsgs::enumerate_semigroups({EnumMode::ByGenus, 0}),
                    nsgs::BoundExceeded);
    CHECK_THROWS_AS(nsgs::enumerate_semigroups({EnumMode::ByGenus, 21}),
                    nsgs::BoundExceeded);
    CHECK_THROWS_AS(nsgs::enumerate_semigroups({EnumMode::ByFrobenius, 41}),
                    nsgs::BoundExceeded);
    // The filter route additionally rides on the numerical-set cap.
    CHECK_THROWS_AS(nsgs::enumerate_semigroups_by_filter({EnumMode::ByGenus, 13}),
                    nsgs::BoundExceeded);
}

TEST_CASE("NSGS_MAX_BOUND lowers the caps") {
    ::setenv("NSGS_MAX_BOUND", "5", 1);
    CHECK(nsgs::numerical_set_frobenius_cap() == 5);
    CHECK(nsgs::semigroup_genus_cap() == 5);
    CHECK_THROWS_AS(nsgs::enumerate_numerical_sets(6), nsgs::BoundExceeded);
    CHECK_NOTHROW(nsgs::enumerate_numerical_sets(5));
    ::setenv("NSGS_MAX_BOUND", "junk", 1);
    CHECK(nsgs::numerical_set_frobenius_cap() == 24);
    ::setenv("NSGS_MAX_BOUND", "100", 1);
    CHECK(nsgs::semigroup_frobenius_cap() == 40);  // never raised
    ::unsetenv("NSGS_MAX_BOUND");
}

TEST_CASE("the registry lists exactly the supported claims") {
    const std::vector<std::string> expected = {
        "prop24", "lemma310", "prop311", "prop42",  "lemma44", "remark45",
        "thm47",  "lemma49",  "cor410",  "thm412",  "thm416",  "cor417"};
    CHECK(nsgs::theorem_registry() == expected);
    for (const auto& name : expected) {
        CHECK(nsgs::is_known_theorem(name));
        CHECK_FALSE(nsgs::theorem_description(name).empty());
    }
    CHECK_FALSE(nsgs::is_known_theorem("thm1"));
    CHECK_THROWS_AS(nsgs::verify_theorem("thm1", {EnumMode::ByGenus, 3}),
                    nsgs::UnknownTheorem);
}

TEST_CASE("single-instance verification") {
    const auto report = nsgs::verify_theorem("remark45", {EnumMode::ByGenus, 1});
    CHECK(report.checked == 1);
    CHECK(report.passed());
}

TEST_CASE("instance counting") {
    const auto prop24 = nsgs::verify_theorem("prop24", {EnumMode::ByFrobenius, 8});
    CHECK(prop24.checked == 255);
    CHECK(prop24.passed());

    const auto lemma310 = nsgs::verify_theorem("lemma310", {EnumMode::ByFrobenius, 4});
    CHECK(lemma310.checked == 15 * 15 * 4);
    CHECK(lemma310.passed());

    const auto thm416 = nsgs::verify_theorem("thm416", {EnumMode::ByGenus, 3});
    CHECK(thm416.checked == 7 * 4);
    CHECK(thm416.passed());
}

TEST_CASE("set-ranging claims need a Frobenius bound") {
    CHECK_THROWS_AS(nsgs::verify_theorem("prop24", {EnumMode::ByGenus, 5}),
                    nsgs::BoundExceeded);
    CHECK_THROWS_AS(nsgs::verify_theorem("lemma310", {EnumMode::ByGenus, 5}),
                    nsgs::BoundExceeded);
    CHECK_THROWS_AS(nsgs::verify_theorem("lemma310", {EnumMode::ByFrobenius, 13}),
                    nsgs::BoundExceeded);
}

TEST_CASE("every registry entry passes at its default bound") {
    for (const auto& name : nsgs::theorem_registry()) {
        const auto report = nsgs::verify_theorem(name, nsgs::theorem_default_bound(name));
        INFO(name);
        CHECK(report.passed());
        CHECK(report.checked > 0);
    }
}

TEST_CASE("report serialization shape") {
    const auto report = nsgs::verify_theorem("thm47", {EnumMode::ByFrobenius, 13});
    const auto doc = report.to_json();
    CHECK(doc.at("theorem") == "thm47");
    CHECK(doc.at("mode") == "frobenius");
    CHECK(doc.at("limit") == 13);
    CHECK(doc.at("checked").is_number_integer());
    CHECK(doc.at("checked").get<Int>() > 0);
    CHECK(doc.at("failures").is_array());
    CHECK(doc.at("failures").empty());
    CHECK(doc.at("failure_count") == 0);
}
