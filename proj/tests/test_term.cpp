#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace trs;
using support::Quot;

TEST_CASE("mk_app enforces arities") {
    Quot f;
    CHECK(f.z().is_app());
    CHECK(f.z().args().empty());
    CHECK_THROWS_AS(mk_app(f.sig, f.succ, {}), ArityMismatch);
    try {
        mk_app(f.sig, f.succ, {});
    } catch (const ArityMismatch& e) {
        CHECK(e.symbol() == "succ");
        CHECK(e.expected() == 1);
        CHECK(e.got() == 0);
    }
    Term t = f.q(f.z(), f.s(f.z()));
    CHECK(t.root() == f.quot);
    CHECK(t.args().size() == 2);
    CHECK_THROWS_AS(mk_app(f.sig, Symbol{"nope"}, {}), UnknownSymbol);
}

TEST_CASE("well_formed audits arity at every node") {
    Quot f;
    CHECK(well_formed(f.sig, f.q(f.m(f.v(0)), f.s(f.z()))));
    Term bad = Term::app_unchecked(f.succ, {f.z(), f.z()});
    CHECK_FALSE(well_formed(f.sig, bad));
    CHECK_FALSE(well_formed(f.sig, f.s(bad)));
}

TEST_CASE("vars") {
    Quot f;
    CHECK(vars(f.v(3)) == std::set<int>{3});
    CHECK(vars(f.q(f.s(f.v(0)), f.s(f.v(1)))) == std::set<int>{0, 1});
    CHECK(vars(f.z()).empty());
}

TEST_CASE("maxvar with the ground-term convention") {
    Quot f;
    CHECK(maxvar(f.v(5)) == 5);
    CHECK(maxvar(f.z()) == 0);
    CHECK(maxvar(f.m(f.s(f.v(2)))) == 2);
}

TEST_CASE("substitution application") {
    Quot f;
    Term t = f.q(f.s(f.v(0)), f.v(1));
    CHECK(Substitution{}.apply(t) == t);
    CHECK(Substitution::single(0, f.z()).apply(f.m(f.v(0))) == f.m(f.z()));
    Term dup = Substitution::single(0, f.s(f.v(1))).apply(f.q(f.v(0), f.v(0)));
    CHECK(dup == f.q(f.s(f.v(1)), f.s(f.v(1))));
}

TEST_CASE("fill") {
    Quot f;
    Term t = f.m(f.v(0));
    CHECK(Context::hole().fill(t) == t);
    Context c1 = mk_context(f.sig, f.succ, {}, Context::hole(), {});
    CHECK(c1.fill(f.z()) == f.s(f.z()));
    Context c2 = mk_context(f.sig, f.quot, {f.z()}, Context::hole(), {});
    CHECK(c2.fill(f.s(f.z())) == f.q(f.z(), f.s(f.z())));
    CHECK_THROWS_AS(mk_context(f.sig, f.succ, {f.z()}, Context::hole(), {}), ArityMismatch);
}

TEST_CASE("subterms in pre-order with positions") {
    Quot f;
    auto single = subterms(f.v(0));
    REQUIRE(single.size() == 1);
    CHECK(single[0].first.empty());
    CHECK(single[0].second == f.v(0));

    auto two = subterms(f.s(f.z()));
    REQUIRE(two.size() == 2);
    CHECK(two[0].first == Position{});
    CHECK(two[1].first == Position{0});
    CHECK(two[1].second == f.z());

    CHECK(subterms(f.q(f.s(f.v(0)), f.s(f.v(1)))).size() == 5);
}

TEST_CASE("strict subterm") {
    Quot f;
    Term t = f.s(f.v(0));
    CHECK_FALSE(is_strict_subterm(t, t));
    CHECK(is_strict_subterm(f.v(0), f.s(f.v(0))));
    CHECK(is_strict_subterm(f.z(), f.s(f.s(f.z()))));
}

TEST_CASE("match_term") {
    Quot f;
    Term t = f.q(f.z(), f.s(f.z()));
    auto m1 = match_term(f.v(0), t);
    REQUIRE(m1);
    CHECK(m1->apply(f.v(0)) == t);

    auto m2 = match_term(f.m(f.s(f.v(0))), f.m(f.s(f.z())));
    REQUIRE(m2);
    CHECK(*m2->find(0) == f.z());

    CHECK_FALSE(match_term(f.q(f.v(0), f.v(0)), f.q(f.z(), f.s(f.z()))));
    CHECK_FALSE(match_term(f.z(), f.v(1)));
}

TEST_CASE("match soundness on random instances") {
    Quot f;
    std::mt19937 rng(20240811);
    for (int i = 0; i < 300; ++i) {
        Term pattern = support::random_term(rng, f.sig, 3, 2);
        Substitution sigma = support::random_subst(rng, f.sig, 2, 2);
        Term subject = sigma.apply(pattern);
        auto found = match_term(pattern, subject);
        REQUIRE(found);
        CHECK(found->apply(pattern) == subject);
    }
    // arbitrary pairs: success must replay
    for (int i = 0; i < 300; ++i) {
        Term pattern = support::random_term(rng, f.sig, 3, 2);
        Term subject = support::random_term(rng, f.sig, 3, 2);
        if (auto found = match_term(pattern, subject))
            CHECK(found->apply(pattern) == subject);
    }
}

TEST_CASE("vars of an instance is the union over the substituted variables") {
    Quot f;
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Term t = support::random_term(rng, f.sig, 3, 3);
        Substitution s = support::random_subst(rng, f.sig, 3, 2);
        std::set<int> expected;
        for (int x : vars(t)) {
            const Term* b = s.find(x);
            if (b) {
                auto bv = vars(*b);
                expected.insert(bv.begin(), bv.end());
            } else {
                expected.insert(x);
            }
        }
        CHECK(vars(s.apply(t)) == expected);
    }
}

TEST_CASE("substitution composition") {
    Quot f;
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        Term t = support::random_term(rng, f.sig, 3, 3);
        Substitution s1 = support::random_subst(rng, f.sig, 3, 2);
        Substitution s2 = support::random_subst(rng, f.sig, 3, 2);
        CHECK(s2.apply(s1.apply(t)) == compose(s1, s2).apply(t));
    }
}

TEST_CASE("context_at splits and fill rebuilds") {
    Quot f;
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        Term t = support::random_term(rng, f.sig, 4, 2);
        for (const auto& [pos, sub] : subterms(t)) {
            Context c = context_at(t, pos);
            CHECK(c.fill(sub) == t);
            CHECK(c.hole_position() == pos);
        }
    }
}

TEST_CASE("printing") {
    Quot f;
    CHECK(to_string(f.q(f.s(f.v(0)), f.v(1))) == "quot(succ(x0),x1)");
    CHECK(to_string(f.ms(f.v(0))) == "minus#(x0)");
    CHECK(to_string(f.z()) == "zero");
}
