#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "indcut/twosat.hpp"

using namespace indcut;

namespace {

// (x1) (~x1|~x2) (~x2|x3) (x3|x4) (~x3) (~x4|x5)
TwoSatFormula chain_formula() {
    TwoSatFormula f;
    f.num_vars = 5;
    f.add_unit(pos(0));
    f.add(neg(0), neg(1));
    f.add(neg(1), pos(2));
    f.add(pos(2), pos(3));
    f.add_unit(neg(2));
    f.add(neg(3), pos(4));
    return f;
}

TwoSatFormula random_formula(gen::Rng& rng, int max_vars) {
    TwoSatFormula f;
    f.num_vars = 1 + rng.below(max_vars);
    const double ratio = 0.5 + 3.5 * rng.uniform01(); // clause/variable sweep
    const int clauses = std::max(1, static_cast<int>(ratio * f.num_vars));
    for (int c = 0; c < clauses; ++c) {
        Lit a{rng.below(f.num_vars), rng.chance(0.5)};
        if (rng.chance(0.12)) {
            f.add_unit(a);
        } else {
            Lit b{rng.below(f.num_vars), rng.chance(0.5)};
            f.add(a, b);
        }
    }
    return f;
}

} // namespace

TEST_CASE("contradictory units are unsatisfiable") {
    TwoSatFormula f;
    f.num_vars = 1;
    f.add_unit(pos(0));
    f.add_unit(neg(0));
    CHECK(!solve(f));
    CHECK(!brute_solve(f));
}

TEST_CASE("no clauses: everything comes out false") {
    TwoSatFormula f;
    f.num_vars = 3;
    auto a = solve(f);
    REQUIRE(a);
    CHECK(*a == Assignment{0, 0, 0});
}

TEST_CASE("five-variable chain formula is satisfiable") {
    const TwoSatFormula f = chain_formula();
    auto a = solve(f);
    REQUIRE(a);
    CHECK(satisfies(f, *a));
    CHECK(brute_solve(f));
    // a hand-checkable model
    CHECK(satisfies(f, Assignment{1, 0, 0, 1, 1}));
}

TEST_CASE("brute scan returns the first satisfying bit pattern") {
    TwoSatFormula f;
    f.num_vars = 2;
    f.add(pos(0), pos(1));
    auto a = brute_solve(f);
    REQUIRE(a);
    CHECK(*a == Assignment{1, 0}); // pattern 01: x1 true, x2 false
}

TEST_CASE("brute scan refuses oversized formulas") {
    TwoSatFormula f;
    f.num_vars = 26;
    CHECK_THROWS_AS(brute_solve(f), std::invalid_argument);
}

TEST_CASE("solver is deterministic") {
    gen::Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        TwoSatFormula f = random_formula(rng, 10);
        auto a = solve(f);
        auto b = solve(f);
        CHECK(a == b);
    }
}

TEST_CASE("solve agrees with the exhaustive scan on random formulas") {
    gen::Rng rng(4242);
    int sat_count = 0;
    for (int i = 0; i < 12000; ++i) {
        TwoSatFormula f = random_formula(rng, 12);
        auto fast = solve(f);
        auto slow = brute_solve(f);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            ++sat_count;
            CHECK(satisfies(f, *fast));
        }
    }
    CHECK(sat_count > 1000); // the sweep produces both outcomes
    CHECK(sat_count < 11000);
}

TEST_CASE("adding clauses never turns unsatisfiable into satisfiable") {
    gen::Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        TwoSatFormula f;
        f.num_vars = 1 + rng.below(8);
        bool was_unsat = false;
        for (int step = 0; step < 20; ++step) {
            Lit a{rng.below(f.num_vars), rng.chance(0.5)};
            Lit b{rng.below(f.num_vars), rng.chance(0.5)};
            f.add(a, b);
            const bool sat = solve(f).has_value();
            if (was_unsat) CHECK(!sat);
            was_unsat = was_unsat || !sat;
        }
    }
}
