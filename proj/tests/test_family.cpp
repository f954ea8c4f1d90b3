#include "schreier/errors.hpp"
#include "schreier/family.hpp"
#include "schreier/oracle.hpp"
#include "schreier/verify.hpp"

#include <doctest.h>

using namespace schreier;

namespace {
std::vector<FinSet> sets(std::initializer_list<FinSet> l) { return l; }
} // namespace

TEST_SUITE("family") {

TEST_CASE("membership")
{
    CHECK(member(Family::schreier(), {3, 5, 9}));
    CHECK_FALSE(member(Family::s2(), {1, 2}));
    CHECK(member(Family::s2(), {2, 3, 5, 8, 9}));
    CHECK(member(family_g(2), {2, 3, 5, 8, 9}));
    CHECK_FALSE(member(family_g(3), {2, 3, 5, 8, 9}));
    CHECK(member(Family::cube(2, 2), {2, 9}));
    CHECK_FALSE(member(Family::cube(2, 2), {1}));
    CHECK_FALSE(member(Family::cube(2, 2), {2, 3, 4}));
    for (const auto& f : {Family::schreier(), Family::s2(), family_f(3), family_g(2),
                          Family::restrict(Family::schreier(), IndexSet::explicit_set({4, 5}))})
        CHECK(member(f, {}));
}

TEST_CASE("extension and tail threshold")
{
    CHECK(extension_admissible(Family::schreier(), {3, 4}, 100));
    CHECK_FALSE(extension_admissible(Family::schreier(), {3, 4, 5}, 100));
    CHECK(extension_admissible(Family::cube(2, 2), {2}, 1000));
    CHECK(tail_threshold(Family::cube(2, 2), {2}) == 2);
    CHECK_THROWS(extension_admissible(Family::schreier(), {3, 4}, 4));
}

TEST_CASE("maximality")
{
    CHECK(is_maximal(Family::schreier(), {3, 4, 5}));
    CHECK_FALSE(is_maximal(Family::schreier(), {3, 4}));
    CHECK_FALSE(is_maximal(Family::schreier(), {}));
    CHECK(is_maximal(Family::cube(2, 2), {2, 3}));
    CHECK(is_maximal(Family::restrict(Family::schreier(), IndexSet::explicit_set({4, 5})), {4, 5}));
    CHECK_THROWS_AS(is_maximal(Family::schreier(), {1, 2}), PreconditionError);
}

TEST_CASE("enumeration")
{
    CHECK(enumerate(Family::schreier(), 4) == sets({{}, {1}, {2}, {3}, {4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(enumerate(Family::cube(2, 2), 4).size() == 7);
    CHECK(enumerate(Family::restrict(Family::schreier(), IndexSet::powers(2)), 8) ==
          sets({{}, {1}, {2}, {4}, {8}, {2, 4}, {2, 8}, {4, 8}}));
}

TEST_CASE("derivatives")
{
    const auto d = derivative(Family::schreier());
    for (const auto& s : enumerate(Family::schreier(), 12))
        CHECK(d.contains(s) == (s.empty() || s.size() < s.min()));
    const auto cube = Family::cube(2, 2);
    const auto sets_ = enumerate(cube, 12);
    for (Nat j = 0; j <= 3; ++j) {
        const auto dj = iterate(cube, j);
        const auto alive = std::count_if(sets_.begin(), sets_.end(), [&](const FinSet& s) { return dj.contains(s); });
        CHECK((alive == 0) == (j == 3));
    }
    CHECK(iterate(Family::restrict(Family::schreier(), IndexSet::explicit_set({2, 3})), 1).degenerate());
}

TEST_CASE("symbolic rank")
{
    for (Nat n = 1; n <= 6; ++n)
        CHECK(rank_symbolic(family_f(n)) == Ordinal{n + 1});
    CHECK(ord_print(rank_symbolic(Family::product(Family::schreier(), Family::cube(3, 3)))) == "w*3+1");
    CHECK(ord_print(rank_symbolic(Family::s2())) == "w^2+1");
    CHECK(ord_print(rank_symbolic(Family::schreier())) == "w+1");
    const auto odd = rank_info(Family::product(Family::cube(1, 2), Family::cube(1, 3)));
    CHECK(odd.rule_derived);
    CHECK(ord_print(odd.rank) == "7");
    CHECK_FALSE(rank_info(family_g(2)).rule_derived);
    CHECK_THROWS_AS(rank_symbolic(Family::restrict(Family::schreier(), IndexSet::explicit_set({1, 2}))), DegenerateIndex);
}

TEST_CASE("parse and print")
{
    for (const char* text : {"restrict(schreier, powers(2))", "prod(schreier, cube(3,3))", "S2", "schreier",
                             "restrict(prod(cube(1,2), schreier), {2,5,9})", "restrict(S2, ap(3,4))",
                             "restrict(cube(2,2), from(5))", "restrict(schreier, all)"})
        CHECK(print_family(parse_family(text)) == text);
    CHECK(print_family(parse_family("prod( schreier ,schreier )")) == "prod(schreier, schreier)");
    try {
        parse_family("prod(schreier)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 14);
    }
    try {
        parse_family("cube(0,2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_family("schreir"), ParseError);
    CHECK_THROWS_AS(parse_family("prod(schreier, S2"), ParseError);
    CHECK_THROWS_AS(parse_family("S2 x"), ParseError);
}

TEST_CASE("index sets")
{
    const auto p = IndexSet::powers(2);
    CHECK(p.contains(1));
    CHECK(p.contains(64));
    CHECK_FALSE(p.contains(6));
    CHECK(p.kth(4) == Nat{8});
    CHECK(p.next_at_least(9) == Nat{16});
    const auto a = IndexSet::arithmetic(3, 4);
    CHECK(a.contains(11));
    CHECK_FALSE(a.contains(12));
    CHECK(IndexSet::from(5).kth(1) == Nat{5});
    CHECK(IndexSet::explicit_set({2, 4}).kth(3) == std::nullopt);
    CHECK(print_index_set(parse_index_set("ap(3,4)")) == "ap(3,4)");
}

TEST_CASE("the sequences F_n and G_n are not nested")
{
    // {n} is in F_n = [n, inf)^{<=n} but below the threshold of F_{n+1}.
    for (Nat n = 1; n <= 5; ++n) {
        CHECK(member(family_f(n), {n}));
        CHECK_FALSE(member(family_f(n + 1), {n}));
    }
    CHECK(member(family_g(1), {1}));
    CHECK_FALSE(member(family_g(2), {1}));
}

TEST_CASE("property suites")
{
    CHECK(verify::family_hereditary(10).passed());
    CHECK(verify::family_tail_uniformity(10, 40).passed());
    CHECK(verify::family_enumerate_oracle(12).passed());
    CHECK(verify::family_product_paths(10).passed());
    CHECK(verify::family_rank_consistency(4, 12).passed());
    CHECK(verify::family_union_cover(12, 12).passed());
    CHECK(verify::family_isolated_points(12).passed());
    CHECK(verify::family_rank_table(6, 4, 12).passed());
}

}
