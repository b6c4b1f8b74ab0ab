#include <catch_amalgamated.hpp>

#include <maxlot/enumeration.hpp>
#include <maxlot/example_profiles.hpp>
#include <maxlot/properties.hpp>
#include <maxlot/random.hpp>

using namespace maxlot;

namespace {

const WeakOrder kAbc({{0}, {1}, {2}});

Lottery lot(std::initializer_list<Rational> probs) { return Lottery(std::vector<Rational>(probs)); }

}  // namespace

TEST_CASE("sd_compare on the documented cases") {
    CHECK(sd_compare(kAbc, Lottery::degenerate_at(3, 0), Lottery::degenerate_at(3, 2)) ==
          SDResult::StrictlyDominates);
    CHECK(sd_compare(kAbc, Lottery::uniform(3), Lottery::uniform(3)) == SDResult::Equivalent);
    CHECK(sd_compare(kAbc, lot({Rational(1, 2), Rational(0), Rational(1, 2)}),
                     Lottery::degenerate_at(3, 1)) == SDResult::Incomparable);
    CHECK_THROWS_AS(sd_compare(kAbc, Lottery::uniform(2), Lottery::uniform(3)),
                    DimensionMismatchError);
}

TEST_CASE("sd_compare is antisymmetric and transitive on samples") {
    const auto lotteries = enumerate_lotteries(3, 4);
    const auto orders = enumerate_weak_orders(3);
    SplitMix64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const WeakOrder& order = orders[rng.below(orders.size())];
        const Lottery& p = lotteries[rng.below(lotteries.size())];
        const Lottery& q = lotteries[rng.below(lotteries.size())];
        const Lottery& r = lotteries[rng.below(lotteries.size())];
        const SDResult pq = sd_compare(order, p, q);
        const SDResult qp = sd_compare(order, q, p);
        switch (pq) {
            case SDResult::StrictlyDominates: CHECK(qp == SDResult::StrictlyDominated); break;
            case SDResult::StrictlyDominated: CHECK(qp == SDResult::StrictlyDominates); break;
            case SDResult::Equivalent: CHECK(qp == SDResult::Equivalent); break;
            case SDResult::Incomparable: CHECK(qp == SDResult::Incomparable); break;
        }
        if (pq == SDResult::StrictlyDominates &&
            sd_compare(order, q, r) == SDResult::StrictlyDominates)
            CHECK(sd_compare(order, p, r) == SDResult::StrictlyDominates);
    }
}

TEST_CASE("pc_compare on the documented cases") {
    CHECK(pc_compare(kAbc, Lottery::degenerate_at(3, 0), Lottery::degenerate_at(3, 1)) == 1);
    CHECK(pc_compare(kAbc, lot({Rational(1, 2), Rational(0), Rational(1, 2)}),
                     Lottery::degenerate_at(3, 1)) == 0);
    CHECK(pc_compare(kAbc, Lottery::uniform(3), Lottery::uniform(3)) == 0);
}

TEST_CASE("pc refines sd on a sampled grid") {
    const auto lotteries = enumerate_lotteries(3, 5);
    const auto orders = enumerate_weak_orders(3);
    SplitMix64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const WeakOrder& order = orders[rng.below(orders.size())];
        const Lottery& p = lotteries[rng.below(lotteries.size())];
        const Lottery& q = lotteries[rng.below(lotteries.size())];
        const SDResult sd = sd_compare(order, p, q);
        if (sd == SDResult::StrictlyDominates) CHECK(pc_compare(order, p, q) > 0);
        if (sd == SDResult::Equivalent) CHECK(pc_compare(order, p, q) == 0);
    }
}

TEST_CASE("welfare maximization checker") {
    CHECK_FALSE(check_welfare_maximizing(mechanism(MechanismId::ML), cyclic_profile()));

    const auto violation =
        check_welfare_maximizing(mechanism(MechanismId::CU), dominated_alternative_profile());
    REQUIRE(violation.has_value());
    CHECK(violation->value == Rational(-3, 4));

    const Profile single(Alternatives::default_labels(3), {{kAbc, 1}});
    for (MechanismId id : all_mechanism_ids())
        CHECK_FALSE(check_welfare_maximizing(mechanism(id), single));
}

TEST_CASE("participation check is vacuous for a single voter") {
    const Profile single(Alternatives::default_labels(3), {{kAbc, 1}});
    AbstentionStats stats;
    CHECK_FALSE(check_participation(mechanism(MechanismId::RD), single, nullptr, &stats));
    CHECK(stats.subsets_inspected == 0);
}

TEST_CASE("participation subset enumeration is exhaustive") {
    // Multiplicities (2, 1): (2+1)*(1+1) - 2 = 4 strict non-empty groups.
    AbstentionStats stats;
    check_participation(mechanism(MechanismId::ML), majority_winner_profile(), nullptr, &stats);
    CHECK(stats.subsets_inspected == 4);

    const Alternatives alts = Alternatives::default_labels(3);
    const Profile three(alts, {{kAbc, 1}, {WeakOrder({{1}, {2}, {0}}), 1}, {WeakOrder({{2}, {0}, {1}}), 1}});
    AbstentionStats stats3;
    check_participation(mechanism(MechanismId::ML), three, nullptr, &stats3);
    CHECK(stats3.subsets_inspected == 2 * 2 * 2 - 2);
}

TEST_CASE("ml passes participation on all tiny strict profiles") {
    const Alternatives alts = Alternatives::default_labels(3);
    EvalCache cache;
    for (long long n : {2LL, 3LL})
        enumerate_profiles(alts, n, Domain::StrictOrders, [&](const Profile& profile) {
            CHECK_FALSE(check_participation(mechanism(MechanismId::ML), profile, &cache));
            CHECK_FALSE(check_ordinal_participation(mechanism(MechanismId::ML), profile, &cache));
            return true;
        });
}

TEST_CASE("a cu participation witness re-verifies and survives a cache-free rerun") {
    // Four voters elect c; the d > b > c > a voter prefers the uniform lottery
    // that results from their abstention.
    const Alternatives alts = Alternatives::default_labels(4);
    const Profile profile(alts, {
                                    {WeakOrder({{0}, {2}, {1}, {3}}), 1},  // a > c > b > d
                                    {WeakOrder({{3}, {0}, {1}, {2}}), 1},  // d > a > b > c
                                    {WeakOrder({{2}, {3}, {0}, {1}}), 1},  // c > d > a > b
                                    {WeakOrder({{2}, {1}, {3}, {0}}), 1},  // c > b > d > a
                                    {WeakOrder({{3}, {1}, {2}, {0}}), 1},  // d > b > c > a
                                });
    const auto witness = check_participation(mechanism(MechanismId::CU), profile);
    REQUIRE(witness.has_value());
    CHECK(witness->deficit < 0);
    CHECK(witness->abstainers.voter_count() < profile.voter_count());
    CHECK(witness->abstainers.voter_count() >= 1);
    CHECK(reverify(mechanism(MechanismId::CU), *witness));
    CHECK(reverify_violation(mechanism(MechanismId::CU), PropertyId::Participation, profile,
                             Violation{*witness}));
}

TEST_CASE("cancellation holds for ml and fails for rd on the documented example") {
    const Alternatives alts = Alternatives::default_labels(3);
    const Profile single(alts, {{kAbc, 1}});
    const WeakOrder reversed({{2}, {1}, {0}});

    CHECK_FALSE(check_cancellation(mechanism(MechanismId::ML), single, reversed));
    CHECK_FALSE(check_cancellation(mechanism(MechanismId::CU), majority_winner_profile(),
                                   WeakOrder({{1}, {2}, {0}})));

    const auto violation = check_cancellation(mechanism(MechanismId::RD), single, reversed);
    REQUIRE(violation.has_value());
    CHECK(violation->base_outcome == Lottery::degenerate_at(3, 0));
    // Tops after adding {c>b>a, a>b>c} are a, a, c.
    CHECK(violation->extended_outcome ==
          lot({Rational(2, 3), Rational(0), Rational(1, 3)}));
}

TEST_CASE("homogeneity holds for all four mechanisms on samples") {
    const Alternatives alts = Alternatives::default_labels(3);
    const auto types = domain_types(3, Domain::WeakOrders);
    for (std::uint64_t index = 0; index < 20; ++index) {
        const Profile profile = random_profile(alts, types, 4, 23, index);
        for (MechanismId id : all_mechanism_ids())
            CHECK_FALSE(check_homogeneity(mechanism(id), profile, 3));
    }
    CHECK_THROWS_AS(check_homogeneity(mechanism(MechanismId::ML), cyclic_profile(), 1),
                    InvalidFactorError);
}

TEST_CASE("condorcet consistency: ml passes, rd fails the documented example") {
    CHECK_FALSE(check_condorcet_consistency(mechanism(MechanismId::ML), majority_winner_profile()));
    CHECK_FALSE(check_condorcet_consistency(mechanism(MechanismId::CU), cyclic_profile()));

    const Alternatives alts = Alternatives::default_labels(3);
    const Profile profile(alts, {{kAbc, 2}, {WeakOrder({{1}, {0}, {2}}), 1}});
    const auto violation = check_condorcet_consistency(mechanism(MechanismId::RD), profile);
    REQUIRE(violation.has_value());
    CHECK(violation->winner == 0);
    CHECK(violation->outcome == lot({Rational(2, 3), Rational(1, 3), Rational(0)}));
}

TEST_CASE("ex post efficiency: cu leaks probability onto a dominated alternative") {
    const Profile eff4 = dominated_alternative_profile();
    const auto violation = check_ex_post_efficiency(mechanism(MechanismId::CU), eff4);
    REQUIRE(violation.has_value());
    CHECK(violation->dominated == 3);
    CHECK(violation->probability == Rational(1, 4));
    // c is among d's Pareto dominators (as are a and b here).
    const auto dominators = pareto_dominators(eff4, 3);
    CHECK(std::find(dominators.begin(), dominators.end(), 2) != dominators.end());

    CHECK_FALSE(check_ex_post_efficiency(mechanism(MechanismId::ML), eff4));
    CHECK(ml_mechanism(eff4) ==
          lot({Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(0)}));
    CHECK_FALSE(check_ex_post_efficiency(mechanism(MechanismId::CU), cyclic_profile()));
}

TEST_CASE("sd-based checks reject raw SSB profiles") {
    const Profile matrix_profile(Alternatives::default_labels(3),
                                 {{aggregate(cyclic_profile()), 1}, {kAbc, 1}});
    CHECK_THROWS_AS(check_ordinal_participation(mechanism(MechanismId::ML), matrix_profile),
                    NonOrdinalProfileError);
    CHECK_THROWS_AS(check_ex_post_efficiency(mechanism(MechanismId::ML), matrix_profile),
                    NonOrdinalProfileError);
    // The plain participation sum accepts raw SSB types.
    CHECK_FALSE(check_participation(mechanism(MechanismId::ML), matrix_profile));
}

TEST_CASE("participation implies ordinal participation on small scopes") {
    const Alternatives alts = Alternatives::default_labels(3);
    EvalCache cache;
    for (long long n : {2LL, 3LL})
        enumerate_profiles(alts, n, Domain::StrictOrders, [&](const Profile& profile) {
            for (MechanismId id : all_mechanism_ids()) {
                if (!check_participation(mechanism(id), profile, &cache))
                    CHECK_FALSE(check_ordinal_participation(mechanism(id), profile, &cache));
            }
            return true;
        });
}

TEST_CASE("run_property dispatch and unknown ids") {
    CHECK(property_by_name("ex-post-efficiency") == PropertyId::ExPostEfficiency);
    CHECK_THROWS_AS(property_by_name("strategyproofness"), UnknownPropertyError);
    const auto violation = run_property(mechanism(MechanismId::RD), PropertyId::Cancellation,
                                        Profile(Alternatives::default_labels(3), {{kAbc, 1}}));
    REQUIRE(violation.has_value());
    CHECK(std::holds_alternative<CancellationViolation>(*violation));
}
