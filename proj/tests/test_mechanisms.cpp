#include <catch_amalgamated.hpp>

#include <maxlot/enumeration.hpp>
#include <maxlot/example_profiles.hpp>
#include <maxlot/mechanisms.hpp>
#include <maxlot/properties.hpp>
#include <maxlot/random.hpp>

using namespace maxlot;

namespace {

Profile single_voter(const WeakOrder& order) {
    return Profile(Alternatives::default_labels(order.alternative_count()), {{order, 1}});
}

}  // namespace

TEST_CASE("mechanism registry") {
    CHECK(mechanism_by_name("ml").id() == MechanismId::ML);
    CHECK(mechanism_by_name("cu").id() == MechanismId::CU);
    CHECK(mechanism_by_name("copeland").id() == MechanismId::Copeland);
    CHECK(mechanism_by_name("rd").id() == MechanismId::RD);
    CHECK_THROWS_AS(mechanism_by_name("borda"), UnknownMechanismError);
}

TEST_CASE("ml outcomes") {
    CHECK(ml_mechanism(cyclic_profile()) == Lottery::uniform(3));
    CHECK(ml_mechanism(majority_winner_profile()) == Lottery::degenerate_at(3, 0));
    CHECK(ml_mechanism(single_voter(WeakOrder({{0, 1, 2}}))) == Lottery::degenerate_at(3, 0));
}

TEST_CASE("cu outcomes") {
    CHECK(cu_mechanism(majority_winner_profile()) == Lottery::degenerate_at(3, 0));
    CHECK(cu_mechanism(cyclic_profile()) == Lottery::uniform(3));
    CHECK(cu_mechanism(dominated_alternative_profile()) == Lottery::uniform(4));
}

TEST_CASE("copeland outcomes") {
    CHECK(copeland_mechanism(majority_winner_profile()) == Lottery::degenerate_at(3, 0));
    // All scores tie at 0 in the cycle; lexicographic tie-break picks a.
    CHECK(copeland_mechanism(cyclic_profile()) == Lottery::degenerate_at(3, 0));
    // a, b, c tie at score 1, d loses everything.
    CHECK(copeland_mechanism(dominated_alternative_profile()) == Lottery::degenerate_at(4, 0));
}

TEST_CASE("rd outcomes") {
    CHECK(rd_mechanism(single_voter(WeakOrder({{0}, {1}, {2}}))) == Lottery::degenerate_at(3, 0));
    CHECK(rd_mechanism(cyclic_profile()) == Lottery::uniform(3));
    CHECK(rd_mechanism(single_voter(WeakOrder({{0, 1}, {2}}))) ==
          Lottery({Rational(1, 2), Rational(1, 2), Rational(0)}));
}

TEST_CASE("cu, copeland, and rd reject raw SSB profiles") {
    const Profile matrix_profile(Alternatives::default_labels(3),
                                 {{aggregate(cyclic_profile()), 1}});
    CHECK_THROWS_AS(cu_mechanism(matrix_profile), NonOrdinalProfileError);
    CHECK_THROWS_AS(copeland_mechanism(matrix_profile), NonOrdinalProfileError);
    CHECK_THROWS_AS(rd_mechanism(matrix_profile), NonOrdinalProfileError);
    // ml accepts any skew-symmetric types.
    CHECK(ml_mechanism(matrix_profile) == Lottery::uniform(3));
}

TEST_CASE("ml output is always welfare-maximizing; cu and copeland are Condorcet-consistent") {
    const Alternatives alts = Alternatives::default_labels(3);
    for (long long n : {1LL, 2LL, 3LL})
        enumerate_profiles(alts, n, Domain::WeakOrders, [&](const Profile& profile) {
            const SSBMatrix margins = aggregate(profile);
            CHECK(is_welfare_maximizing(margins, ml_mechanism(profile)));
            if (const auto winner = condorcet_winner(margins)) {
                CHECK(cu_mechanism(profile) == Lottery::degenerate_at(3, *winner));
                CHECK(copeland_mechanism(profile) == Lottery::degenerate_at(3, *winner));
            }
            return n <= 2;  // full weak-order space only up to n = 2
        });
}

TEST_CASE("mechanisms are anonymous") {
    const Alternatives alts = Alternatives::default_labels(3);
    const WeakOrder o1({{0}, {1}, {2}}), o2({{2}, {0}, {1}}), o3({{1, 2}, {0}});
    const Profile p(alts, {{o1, 1}, {o2, 2}, {o3, 1}});
    const Profile q(alts, {{o3, 1}, {o2, 1}, {o1, 1}, {o2, 1}});
    REQUIRE(p == q);
    for (MechanismId id : all_mechanism_ids())
        CHECK(mechanism(id).apply(p) == mechanism(id).apply(q));
}

TEST_CASE("ml and cu are homogeneous, ml satisfies cancellation") {
    const Alternatives alts = Alternatives::default_labels(3);
    const auto types = domain_types(3, Domain::StrictOrders);
    for (std::uint64_t index = 0; index < 25; ++index) {
        const Profile profile = random_profile(alts, types, 5, 7, index);
        for (long long k : {2LL, 3LL}) {
            CHECK(ml_mechanism(replicate(profile, k)) == ml_mechanism(profile));
            CHECK(cu_mechanism(replicate(profile, k)) == cu_mechanism(profile));
            CHECK(rd_mechanism(replicate(profile, k)) == rd_mechanism(profile));
        }
        for (const WeakOrder& order : enumerate_weak_orders(3))
            CHECK_FALSE(check_cancellation(mechanism(MechanismId::ML), profile, order));
    }
}

TEST_CASE("aggregate-determined fast paths agree with apply") {
    const Alternatives alts = Alternatives::default_labels(4);
    const auto types = domain_types(4, Domain::WeakOrders);
    for (std::uint64_t index = 0; index < 30; ++index) {
        const Profile profile = random_profile(alts, types, 6, 13, index);
        const SSBMatrix margins = aggregate(profile);
        for (MechanismId id : {MechanismId::ML, MechanismId::CU, MechanismId::Copeland}) {
            const auto fast = mechanism(id).apply_to_aggregate(margins);
            REQUIRE(fast.has_value());
            CHECK(*fast == mechanism(id).apply(profile));
        }
        CHECK_FALSE(mechanism(MechanismId::RD).apply_to_aggregate(margins).has_value());
    }
}
