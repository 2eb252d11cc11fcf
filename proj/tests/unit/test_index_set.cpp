#include "doctest.h"

#include "oracle.hpp"

#include "rpa/error.hpp"
#include "rpa/filter.hpp"
#include "rpa/index_set.hpp"

#include <random>

using namespace rpa;

namespace {

// A ∖ S is finite iff it has no element in a window far beyond every exception.
bool brute_superset_member(const IndexSet &base, const IndexSet &s) {
    const Natural period = base.modulus() * s.modulus();
    Natural start = 0;
    for (Natural x : base.added()) start = std::max(start, x + 1);
    for (Natural x : base.removed()) start = std::max(start, x + 1);
    for (Natural x : s.added()) start = std::max(start, x + 1);
    for (Natural x : s.removed()) start = std::max(start, x + 1);
    for (Natural n = start; n < start + 2 * period; ++n) {
        if (base.contains(n) && !s.contains(n)) {
            return false;
        }
    }
    return true;
}

IndexSet random_set(std::mt19937_64 &rng) {
    const Natural m = 1 + rng() % 6;
    std::set<Natural> residues, added, removed;
    for (Natural r = 0; r < m; ++r) {
        if (rng() % 2) residues.insert(r);
    }
    for (int k = 0; k < 3; ++k) {
        if (rng() % 2) added.insert(rng() % 20);
        if (rng() % 2) removed.insert(rng() % 20);
    }
    return IndexSet(m, residues, added, removed);
}

} // namespace

TEST_CASE("is_member on the documented examples") {
    const IndexSet evens = IndexSet::evens();
    CHECK_FALSE(is_member(Frechet{}, evens));
    CHECK(is_member(PrincipalAt{4}, evens));

    const IndexSet s = IndexSet(2, {0}, {7}, {2});
    CHECK(s.to_string() == "mod 2 {0} + {7} - {2}");
    CHECK(brute_superset_member(evens, s));
    CHECK(is_member(SupersetOf{evens}, s));
}

TEST_CASE("set_algebra examples") {
    CHECK(set_complement(IndexSet::evens()) == IndexSet::odds());

    const IndexSet empty = set_algebra(IndexSet::evens(), IndexSet::odds(), SetOp::Intersection);
    CHECK(empty.modulus() == 1);
    CHECK(empty.residues().empty());
    CHECK(empty == IndexSet());

    const IndexSet evens_minus_zero = IndexSet(2, {0}, {}, {0});
    const IndexSet u = set_algebra(evens_minus_zero, IndexSet::finite({0}), SetOp::Union);
    for (Natural n = 0; n < 2 * 2; ++n) {
        CHECK(u.contains(n) == (n % 2 == 0));
    }
    CHECK(u == IndexSet::evens());
}

TEST_CASE("canonical form minimizes the period and exceptions") {
    const IndexSet s(6, {0, 2, 4}, {4, 9}, {1});
    CHECK(s.modulus() == 2);
    CHECK(s.added() == std::set<Natural>{9});
    CHECK(s.removed().empty());
    CHECK(IndexSet::parse("mod 6 {0, 2, 4} + {4, 9} - {1}") == s);
    CHECK(IndexSet::parse(s.to_string()) == s);
    CHECK_THROWS_AS(IndexSet::parse("mod 2 {0"), Error);
    CHECK_THROWS_AS(IndexSet(0, {}), Error);
}

TEST_CASE("set_algebra agrees with pointwise membership on random sets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const IndexSet a = random_set(rng);
        const IndexSet b = random_set(rng);
        const IndexSet u = set_algebra(a, b, SetOp::Union);
        const IndexSet i = set_algebra(a, b, SetOp::Intersection);
        const IndexSet d = set_algebra(a, b, SetOp::Difference);
        const IndexSet c = set_complement(a);
        for (Natural n = 0; n < 80; ++n) {
            CHECK(u.contains(n) == (a.contains(n) || b.contains(n)));
            CHECK(i.contains(n) == (a.contains(n) && b.contains(n)));
            CHECK(d.contains(n) == (a.contains(n) && !b.contains(n)));
            CHECK(c.contains(n) == !a.contains(n));
        }
    }
}

TEST_CASE("filter laws: upward closure, intersections, properness") {
    std::mt19937_64 rng(11);
    const std::vector<FilterSpec> filters = {Frechet{}, PrincipalAt{5}, PrincipalAt{0},
                                             SupersetOf{IndexSet::evens()},
                                             SupersetOf{IndexSet(3, {1}, {}, {4})}};
    for (const auto &f : filters) {
        CHECK_FALSE(is_member(f, IndexSet()));
        CHECK(is_member(f, IndexSet::all()));
    }
    for (int trial = 0; trial < 300; ++trial) {
        const IndexSet s = random_set(rng);
        const IndexSet t = random_set(rng);
        const IndexSet st = set_algebra(s, t, SetOp::Intersection);
        const IndexSet s_or_t = set_algebra(s, t, SetOp::Union);
        for (const auto &f : filters) {
            CHECK(is_member(f, st) == (is_member(f, s) && is_member(f, t)));
            if (is_member(f, s)) {
                CHECK(is_member(f, s_or_t));
            }
        }
        const IndexSet base = IndexSet(2, {0});
        CHECK(is_member(SupersetOf{base}, s) == brute_superset_member(base, s));
    }
}

TEST_CASE("Filter handle parsing and relevance") {
    CHECK(Filter::parse("frechet") == Filter::frechet());
    CHECK(Filter::parse("principal:7") == Filter::principal(7));
    CHECK(Filter::parse("superset:2:0") == Filter::superset(IndexSet::evens()));
    CHECK(Filter::parse("superset:2:0").to_string() == "superset:2:0");
    CHECK_THROWS_AS(Filter::parse("superset:2:"), Error);
    CHECK_THROWS_AS(Filter::parse("ultra"), Error);
    CHECK_THROWS_AS(Filter::superset(IndexSet::finite({1, 2})), Error);

    const Filter evens = Filter::superset(IndexSet::evens());
    CHECK(evens.class_is_relevant(0, 4));
    CHECK(evens.class_is_relevant(2, 4));
    CHECK_FALSE(evens.class_is_relevant(1, 4));
    CHECK(evens.class_is_relevant(0, 3));
    CHECK(evens.class_is_relevant(1, 3));
    CHECK(Filter::principal(5).class_is_relevant(1, 2));
    CHECK_FALSE(Filter::principal(5).class_is_relevant(0, 2));
}
