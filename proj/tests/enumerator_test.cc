#include <pcg/enumerator.hh>
#include <pcg/errors.hh>
#include <pcg/fixtures.hh>
#include <pcg/orbit.hh>

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace pcg;
using std::string;
using std::vector;

namespace
{
    auto spec(Lattice l, int colors, bool surjective = true) -> SearchSpec
    {
        SearchSpec s;
        s.lattice = l;
        s.max_colors = colors;
        s.surjective = surjective;
        return s;
    }
}

TEST_CASE("small tori")
{
    CHECK(enumerate_canonical(spec(Lattice{1, 0, 1}, 1)) == vector<string>{canonical(fixtures::constant())});

    auto two = enumerate(spec(Lattice{2, 0, 1}, 2));
    REQUIRE(two.size() == 1);
    CHECK(quotient(two[0]) == QuotientMatrix{{{2, 2}, {2, 2}}});
    CHECK(canonical(two[0]) == canonical(fixtures::stripes(2)));

    // on (2,0),(0,2) two colours give stripes, the checkerboard and nothing else
    auto square = enumerate_canonical(spec(Lattice{2, 0, 2}, 2));
    CHECK(square.size() == 2);
    CHECK(std::count(square.begin(), square.end(), canonical(fixtures::checkerboard())) == 1);
}

TEST_CASE("enumeration agrees with the brute-force oracle")
{
    vector<SearchSpec> specs{
        spec(Lattice{2, 0, 2}, 3),
        spec(Lattice{2, 0, 2}, 3, false),
        spec(Lattice{3, 0, 3}, 3),
        spec(Lattice{3, 0, 3}, 3, false),
        spec(Lattice{4, 0, 2}, 4),
        spec(Lattice{4, 0, 2}, 4, false),
        spec(Lattice{3, 1, 2}, 4, false),
        spec(Lattice{5, 2, 2}, 3, false),
        spec(Lattice{4, 1, 3}, 2, false),
        spec(Lattice{6, 0, 2}, 3),
    };
    for (auto & s : specs) {
        INFO(to_string(s.lattice) << " colours " << s.max_colors << " onto " << s.surjective);
        auto fast = enumerate_canonical(s);
        CHECK(fast == brute_oracle(s));
        CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
}

TEST_CASE("quotient-constrained search")
{
    QuotientMatrix case_two{{{0, 0, 0, 4}, {0, 0, 0, 4}, {0, 0, 0, 4}, {2, 1, 1, 0}}};
    SearchSpec s{Lattice{4, 0, 4}, 4, case_two};
    auto found = enumerate(s);
    REQUIRE_FALSE(found.empty());
    auto base = canonical(fixtures::get("II-base"));
    CHECK(std::any_of(found.begin(), found.end(), [&](auto & f) { return canonical(f) == base; }));
    for (auto & f : found)
        CHECK(equal_up_to_permutation(quotient(f), case_two));

    // filtered brute force on a small torus
    QuotientMatrix mixed{{{0, 4}, {2, 2}}};
    SearchSpec small{Lattice{3, 0, 3}, 2, mixed};
    auto expected = brute_oracle(spec(Lattice{3, 0, 3}, 2));
    std::erase_if(expected, [&](auto & c) { return ! equal_up_to_permutation(quotient(parse(c)), mixed); });
    CHECK(enumerate_canonical(small) == expected);
}

TEST_CASE("coverings only")
{
    auto s = spec(Lattice{4, 0, 2}, 4, false);
    auto all = brute_oracle(s);
    std::erase_if(all, [](auto & c) { return ! covering_target(quotient(parse(c))); });
    s.coverings_only = true;
    CHECK(enumerate_canonical(s) == all);
}

TEST_CASE("enumerated colourings are sound")
{
    for (auto l : {Lattice{4, 0, 4}, Lattice{4, 2, 4}, Lattice{8, 3, 1}}) {
        auto s = spec(l, 5);
        s.coverings_only = true;
        for (auto & f : enumerate(s)) {
            REQUIRE(is_perfect(f));
            CHECK(maximal_periods(f).contains(l));
            CHECK(f.num_colors() == 5);
            auto q = quotient(f);
            if (covering_target(q))
                CHECK((is_orbit(f) || ! twin_pairs(q).empty()));
        }
    }
}

TEST_CASE("parallel search is deterministic")
{
    auto s = spec(Lattice{4, 0, 4}, 4);
    auto serial = enumerate_canonical(s);
    for (int jobs : {2, 3, 5}) {
        s.jobs = jobs;
        CHECK(enumerate_canonical(s) == serial);
        CHECK(enumerate_canonical(s) == serial);
    }
}

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(validate(spec(Lattice{2, 0, 1}, 0)), PreconditionError);
    CHECK_THROWS_AS(validate(spec(Lattice{2, 0, 1}, 3)), PreconditionError);
    SearchSpec big_quotient{Lattice{2, 0, 2}, 1, QuotientMatrix{{{0, 4}, {4, 0}}}};
    CHECK_THROWS_AS(validate(big_quotient), PreconditionError);
    SearchSpec bad_rows{Lattice{2, 0, 2}, 2, QuotientMatrix{{{0, 3}, {4, 0}}}};
    CHECK_THROWS_AS(validate(bad_rows), PreconditionError);
    auto threads = spec(Lattice{2, 0, 2}, 2);
    threads.jobs = 0;
    CHECK_THROWS_AS(validate(threads), PreconditionError);

    CHECK_THROWS_AS(brute_oracle(spec(Lattice{13, 0, 1}, 2)), PreconditionError);
    CHECK_THROWS_AS(brute_oracle(spec(Lattice{3, 0, 3}, 5)), PreconditionError);
}

TEST_CASE("classification")
{
    auto two = classify(fixtures::get("II-base"));
    CHECK(two.perfect);
    CHECK(two.twins == vector<ColorPair>{{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(two.covering);
    CHECK(two.bipartite);

    auto orbit = classify(fixtures::get("8-150-2"));
    // a {0,1} quotient, but colours 3..6 see themselves
    CHECK_FALSE(orbit.covering);
    CHECK(orbit.quotient->rows[2][2] == 1);
    CHECK(orbit.orbit);

    auto cb = classify(fixtures::checkerboard());
    CHECK(cb.bipartite);
    CHECK(cb.twins.size() == 1);
    CHECK_FALSE(cb.covering);
    CHECK(cb.orbit);
    CHECK(cb.maximal_periods == Lattice{2, 1, 1});

    auto bad = classify(parse("# pcg v1\nperiods (2,0) (0,2)\n1 2\n1 1\n"));
    CHECK_FALSE(bad.perfect);
    CHECK(bad.violation);
    CHECK_FALSE(bad.quotient);
    CHECK(bad.twins.empty());
}
