#include <catch_amalgamated.hpp>

#include <maxlot/enumeration.hpp>
#include <maxlot/example_profiles.hpp>
#include <maxlot/profile_io.hpp>
#include <maxlot/random.hpp>
#include <maxlot/report.hpp>

using namespace maxlot;

TEST_CASE("parses the cyclic profile") {
    const Profile p =
        parse_profile("alternatives: a,b,c\n1: a > b > c\n1: b > c > a\n1: c > a > b\n");
    CHECK(p == cyclic_profile());
}

TEST_CASE("parses ties and merges duplicate lines") {
    const Profile p = parse_profile("alternatives: a,b\n2: a = b\n");
    CHECK(p.voter_count() == 2);
    CHECK(p.type_count() == 1);
    CHECK(std::get<WeakOrder>(p.entries().front().first) == WeakOrder({{0, 1}}));

    const Profile q = parse_profile("alternatives: a,b\n1: a > b\n1: a > b\n");
    CHECK(q.type_count() == 1);
    CHECK(q.entries().front().second == 2);
}

TEST_CASE("parses comments and blank lines") {
    const Profile p = parse_profile(
        "# leading comment\nalternatives: a,b,c\n\n1: a > b > c  # trailing comment\n");
    CHECK(p.voter_count() == 1);
}

TEST_CASE("parses matrix blocks and rejects non-skew ones") {
    const Profile p = parse_profile(
        "alternatives: a,b\nmatrix 2:\n0 1/2\n-1/2 0\n");
    CHECK(p.voter_count() == 2);
    const auto& matrix = std::get<SSBMatrix>(p.entries().front().first);
    CHECK(matrix.at(0, 1) == Rational(1, 2));

    CHECK_THROWS_AS(parse_profile("alternatives: a,b\nmatrix 1:\n0 1\n1 0\n"),
                    NotSkewSymmetricError);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_profile("alternatives: a,b\n1: a > b\nbogus line\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_profile(""), ParseError);
    CHECK_THROWS_AS(parse_profile("alts: a,b\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("alternatives: a,b\n0: a > b\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("alternatives: a,b\n-1: a > b\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("alternatives: a,b\nmatrix 1:\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_profile("alternatives: a,b\n1: a\n"), ParseError);
}

TEST_CASE("unknown and duplicate alternatives") {
    CHECK_THROWS_AS(parse_profile("alternatives: a,b\n1: a > z\n"), UnknownAlternativeError);
    CHECK_THROWS_AS(parse_profile("alternatives: a,b\n1: a > a\n"), DuplicateAlternativeError);
    CHECK_THROWS_AS(parse_profile("alternatives: a,a\n1: a > a\n"), DuplicateAlternativeError);
}

TEST_CASE("empty profiles are rejected") {
    CHECK_THROWS_AS(parse_profile("alternatives: a,b\n# nothing\n"), EmptyProfileError);
}

TEST_CASE("serialize then parse is the identity on enumerated profiles") {
    const Alternatives alts = Alternatives::default_labels(3);
    for (long long n : {1LL, 2LL})
        enumerate_profiles(alts, n, Domain::WeakOrders, [&](const Profile& profile) {
            CHECK(parse_profile(serialize_profile(profile)) == profile);
            return true;
        });
}

TEST_CASE("serialize then parse is the identity on random and matrix profiles") {
    const Alternatives alts = Alternatives::default_labels(4);
    const auto types = domain_types(4, Domain::WeakOrders);
    for (std::uint64_t index = 0; index < 40; ++index) {
        const Profile profile = random_profile(alts, types, 6, 31, index);
        CHECK(parse_profile(serialize_profile(profile)) == profile);
    }

    const Profile mixed(Alternatives::default_labels(3),
                        {{WeakOrder({{0}, {1, 2}}), 2},
                         {scale(aggregate(cyclic_profile()), Rational(1, 2)), 1}});
    CHECK(parse_profile(serialize_profile(mixed)) == mixed);
}

TEST_CASE("labels other than single letters survive") {
    const Profile p = parse_profile("alternatives: alpha,beta_2,x-ray\n3: beta_2 > x-ray = alpha\n");
    CHECK(p.alternative_count() == 3);
    CHECK(p.alternatives().label(1) == "beta_2");
    CHECK(parse_profile(serialize_profile(p)) == p);
}

TEST_CASE("report records render deterministically") {
    ReportRecord record;
    record.command = "check";
    record.mechanism = "cu";
    record.property = "participation";
    record.scope.emplace_back("file", "x.profile");
    record.outcome = "pass";
    record.seed = 42;
    const std::string text = to_text(record);
    CHECK(text.find("pass\n") == 0);
    CHECK(text == to_text(record));
    const std::string json = to_json(record);
    CHECK(json.find("\"command\": \"check\"") != std::string::npos);
    CHECK(json == to_json(record));
}

TEST_CASE("rationals in reports are exact strings") {
    const Profile p = cyclic_profile();
    const std::string rendered = lottery_to_string(p.alternatives(), Lottery::uniform(3));
    CHECK(rendered == "a: 1/3, b: 1/3, c: 1/3");
}
