#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "nsgs/enumeration.hpp"
#include "nsgs/symmetry.hpp"
#include "nsgs/young_diagram.hpp"
#include "oracles.hpp"

using nsgs::Int;
using nsgs::NumericalSet;
using nsgs::SumKind;

TEST_CASE("symmetry predicates") {
    CHECK(nsgs::is_symmetric(nsgs::parse_set("0 2 ->")));
    CHECK(nsgs::is_symmetric(nsgs::parse_set("0 3 5 6 8 ->")));
    CHECK_FALSE(nsgs::is_symmetric(nsgs::parse_set("0 4 8 9 11 12 13 15 ->")));

    CHECK(nsgs::is_pseudo_symmetric(nsgs::parse_set("0 3 ->")));
    CHECK(nsgs::is_pseudo_symmetric(nsgs::parse_set("0 6 7 11 12 13 14 15 17 ->")));
    CHECK_FALSE(nsgs::is_pseudo_symmetric(nsgs::parse_set("0 2 ->")));

    CHECK_THROWS_AS(nsgs::is_symmetric(nsgs::parse_set("0 2 3 6 8 9 11 ->")),
                    nsgs::NotASemigroup);
    CHECK_THROWS_AS(nsgs::is_pseudo_symmetric(nsgs::parse_set("0 2 3 6 8 9 11 ->")),
                    nsgs::NotASemigroup);
}

TEST_CASE("the two classes split by genus and never overlap") {
    nsgs::enumerate_semigroups({nsgs::EnumMode::ByGenus, 9}, [](const NumericalSet& s) {
        const bool sym = nsgs::is_symmetric(s);
        const bool pseudo = nsgs::is_pseudo_symmetric(s);
        CHECK(sym == (2 * s.genus() == s.frobenius() + 1));
        CHECK(pseudo == (2 * s.genus() == s.frobenius() + 2));
        CHECK_FALSE((sym && pseudo));
    });
}

TEST_CASE("dual of a set") {
    CHECK(nsgs::dual(nsgs::parse_set("0 4 7 ->")) == nsgs::parse_set("0 1 3 4 5 7 ->"));
    CHECK(nsgs::dual(nsgs::parse_set("0 3 5 6 8 ->")) == nsgs::parse_set("0 3 5 6 8 ->"));
    CHECK(nsgs::dual(nsgs::parse_set("0 6 7 9 ->")) ==
          nsgs::parse_set("0 3 4 5 6 7 9 ->"));
}

TEST_CASE("dual properties over every small set plus random larger ones") {
    const auto check_one = [](const NumericalSet& s) {
        const NumericalSet star = nsgs::dual(s);
        CHECK(star == oracles::dual(s));
        CHECK(star.frobenius() == s.frobenius());
        CHECK(star.genus() == static_cast<Int>(s.small_elements().size()));
        CHECK(nsgs::dual(star) == s);
        CHECK(nsgs::diagram_of(star) == nsgs::transpose(nsgs::diagram_of(s)));
    };
    for (const NumericalSet& s : nsgs::enumerate_numerical_sets(10)) check_one(s);
    std::mt19937 rng(271828);
    for (int i = 0; i < 500; ++i) check_one(oracles::random_set(rng, 40));
}

TEST_CASE("a semigroup is symmetric exactly when self-dual") {
    nsgs::enumerate_semigroups({nsgs::EnumMode::ByGenus, 9}, [](const NumericalSet& s) {
        CHECK(nsgs::is_symmetric(s) == (nsgs::dual(s) == s));
    });
    std::mt19937 rng(161803);
    for (int i = 0; i < 200; ++i) {
        const NumericalSet s = oracles::random_semigroup(rng);
        CHECK(nsgs::is_symmetric(s) == (nsgs::dual(s) == s));
    }
}

TEST_CASE("symmetric decomposition of the worked examples") {
    const auto d1 = nsgs::decompose_symmetric(nsgs::parse_set("0 4 7 8 10 11 12 14 ->"));
    CHECK(d1.kind == SumKind::EndToEnd);
    CHECK(d1.summand == nsgs::parse_set("0 4 7 ->"));
    CHECK(d1.dual_summand == nsgs::parse_set("0 1 3 4 5 7 ->"));

    const auto d2 = nsgs::decompose_symmetric(
        nsgs::parse_set("0 5 8 10 13 15 16 18 20 21 23 24 25 26 28 ->"));
    CHECK(d2.kind == SumKind::Overlap);
    CHECK(d2.summand == nsgs::parse_set("0 5 8 10 13 15 ->"));
    CHECK(d2.dual_summand == nsgs::parse_set("0 2 3 5 7 8 10 11 12 13 15 ->"));
    CHECK(nsgs::set_sum(d2.summand, d2.dual_summand, d2.kind) ==
          nsgs::parse_set("0 5 8 10 13 15 16 18 20 21 23 24 25 26 28 ->"));

    CHECK_THROWS_AS(nsgs::decompose_symmetric(nsgs::parse_set("0 2 ->")),
                    nsgs::ExcludedCase);
    CHECK_THROWS_AS(nsgs::decompose_symmetric(nsgs::parse_set("0 3 ->")),
                    nsgs::NotSymmetric);
}

TEST_CASE("pseudo-symmetric decomposition of the worked examples") {
    const auto d1 =
        nsgs::decompose_pseudo_symmetric(nsgs::parse_set("0 6 7 11 12 13 14 15 17 ->"));
    CHECK(d1.kind == SumKind::Conjoint);
    CHECK(d1.summand == nsgs::parse_set("0 6 7 9 ->"));
    CHECK(d1.dual_summand == nsgs::parse_set("0 3 4 5 6 7 9 ->"));

    const auto d2 =
        nsgs::decompose_pseudo_symmetric(nsgs::parse_set("0 4 8 9 11 12 13 15 ->"));
    CHECK(d2.kind == SumKind::Discrete);
    CHECK(d2.summand == nsgs::parse_set("0 4 7 ->"));
    CHECK(d2.dual_summand == nsgs::parse_set("0 1 3 4 5 7 ->"));

    CHECK_THROWS_AS(nsgs::decompose_pseudo_symmetric(nsgs::parse_set("0 3 ->")),
                    nsgs::ExcludedCase);
    CHECK_THROWS_AS(nsgs::decompose_pseudo_symmetric(nsgs::parse_set("0 2 ->")),
                    nsgs::NotPseudoSymmetric);
}

TEST_CASE("the three-gap set needs the conjoint summand") {
    // Here the membership rule alone would pick the discrete kind, whose
    // summand collapses to the symmetric one-gap set; the conjoint summand
    // is the admissible one.
    const auto d = nsgs::decompose_pseudo_symmetric(nsgs::parse_set("0 3 5 ->"));
    CHECK(d.kind == SumKind::Conjoint);
    CHECK(d.summand == nsgs::parse_set("0 3 ->"));
    CHECK_FALSE(nsgs::is_symmetric(d.summand));
    CHECK(nsgs::set_sum(d.summand, d.dual_summand, d.kind) == nsgs::parse_set("0 3 5 ->"));
}

TEST_CASE("decompositions round-trip with semigroup summands across a range") {
    nsgs::enumerate_semigroups({nsgs::EnumMode::ByGenus, 9}, [](const NumericalSet& s) {
        if (nsgs::is_symmetric(s) && s.frobenius() > 1) {
            const auto d = nsgs::decompose_symmetric(s);
            CHECK(nsgs::is_semigroup(d.summand));
            CHECK(d.dual_summand == nsgs::dual(d.summand));
            CHECK(nsgs::set_sum(d.summand, d.dual_summand, d.kind) == s);
            CHECK((d.kind == SumKind::EndToEnd || d.kind == SumKind::Overlap));
        } else if (nsgs::is_pseudo_symmetric(s) && s.frobenius() > 2) {
            const auto d = nsgs::decompose_pseudo_symmetric(s);
            CHECK(nsgs::is_semigroup(d.summand));
            CHECK_FALSE(nsgs::is_symmetric(d.summand));
            CHECK(nsgs::set_sum(d.summand, d.dual_summand, d.kind) == s);
            CHECK((d.kind == SumKind::Conjoint || d.kind == SumKind::Discrete));
        }
    });
}

TEST_CASE("unpruned uniqueness scan: one summand per kind, found by decompose") {
    // Every semigroup candidate with conductor up to the target's, all four
    // kinds, no Frobenius pruning.  Validates the bucketed search the
    // verification registry uses.
    const auto candidates =
        nsgs::enumerate_semigroups({nsgs::EnumMode::ByFrobenius, 15});
    nsgs::enumerate_semigroups(
        {nsgs::EnumMode::ByFrobenius, 15}, [&](const NumericalSet& s) {
            const bool symmetric = nsgs::is_symmetric(s);
            const bool pseudo = nsgs::is_pseudo_symmetric(s);
            if (!symmetric && !pseudo) return;
            if (s.frobenius() <= 2) return;  // excluded boundary cases
            const auto kinds = symmetric
                ? std::pair{SumKind::EndToEnd, SumKind::Overlap}
                : std::pair{SumKind::Conjoint, SumKind::Discrete};
            const auto d = symmetric ? nsgs::decompose_symmetric(s)
                                     : nsgs::decompose_pseudo_symmetric(s);
            for (SumKind kind : {kinds.first, kinds.second}) {
                Int matches = 0;
                for (const NumericalSet& t : candidates) {
                    if (t.conductor() > s.conductor()) continue;
                    if (nsgs::set_sum(t, nsgs::dual(t), kind) == s) {
                        ++matches;
                        if (kind == d.kind) CHECK(t == d.summand);
                    }
                }
                CHECK(matches <= 1);
                if (kind == d.kind) CHECK(matches == 1);
            }
        });
}

TEST_CASE("both kinds can decompose the same set") {
    // Dropping the conductor from an end-to-end summand yields an overlap
    // summand of the same set; likewise discrete vs conjoint.  Uniqueness is
    // therefore per kind, not across kinds.
    const NumericalSet t = nsgs::parse_set("0 4 8 ->");
    CHECK(nsgs::is_semigroup(t));
    CHECK(nsgs::set_sum(t, nsgs::dual(t), SumKind::Overlap) ==
          nsgs::parse_set("0 4 7 8 10 11 12 14 ->"));
    CHECK(nsgs::set_sum(t, nsgs::dual(t), SumKind::Conjoint) ==
          nsgs::parse_set("0 4 8 9 11 12 13 15 ->"));
}

TEST_CASE("closure criteria for the dual sums") {
    const NumericalSet open_everywhere = nsgs::parse_set("0 3 5 6 8 ->");
    for (SumKind kind : nsgs::kAllSumKinds) {
        CHECK_FALSE(nsgs::dual_sum_is_semigroup(open_everywhere, kind));
    }
    CHECK(nsgs::dual_sum_is_semigroup(nsgs::parse_set("0 4 7 ->"), SumKind::EndToEnd));
    CHECK(nsgs::dual_sum_is_semigroup(nsgs::parse_set("0 2 ->"), SumKind::Overlap));
    CHECK_THROWS_AS(
        nsgs::dual_sum_is_semigroup(nsgs::parse_set("0 2 3 6 8 9 11 ->"), SumKind::Overlap),
        nsgs::NotASemigroup);
}

TEST_CASE("closure criteria agree with brute force") {
    nsgs::enumerate_semigroups({nsgs::EnumMode::ByGenus, 8}, [](const NumericalSet& s) {
        const NumericalSet star = nsgs::dual(s);
        for (SumKind kind : nsgs::kAllSumKinds) {
            CHECK(nsgs::dual_sum_is_semigroup(s, kind) ==
                  nsgs::is_semigroup(nsgs::set_sum(s, star, kind)));
        }
    });
}

TEST_CASE("symmetric semigroups never keep their conductor minimal") {
    nsgs::enumerate_semigroups({nsgs::EnumMode::ByGenus, 9}, [](const NumericalSet& s) {
        if (!nsgs::is_symmetric(s) || s.frobenius() == 1) return;
        const auto gens = nsgs::minimal_generators(s);
        CHECK_FALSE(std::binary_search(gens.begin(), gens.end(), s.conductor()));
        CHECK_FALSE(nsgs::dual_sum_is_semigroup(s, SumKind::Conjoint));
        CHECK_FALSE(nsgs::dual_sum_is_semigroup(s, SumKind::Discrete));
    });
}

TEST_CASE("ring labels") {
    CHECK(nsgs::classify_ring(nsgs::parse_set("0 2 ->")) == nsgs::RingLabel::Gorenstein);
    CHECK(nsgs::classify_ring(nsgs::parse_set("0 4 8 9 11 12 13 15 ->")) ==
          nsgs::RingLabel::Kunz);
    CHECK(nsgs::classify_ring(nsgs::parse_set("0 4 6 8 9 10 12 ->")) ==
          nsgs::RingLabel::Gorenstein);
    CHECK(nsgs::classify_ring(nsgs::parse_set("0 4 ->")) == nsgs::RingLabel::Neither);
    CHECK(nsgs::to_string(nsgs::RingLabel::Kunz) == "Kunz");
    CHECK_THROWS_AS(nsgs::classify_ring(nsgs::parse_set("0 2 3 6 8 9 11 ->")),
                    nsgs::NotASemigroup);
}
