#include "schreier/errors.hpp"
#include "schreier/finset.hpp"
#include "schreier/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace schreier;

TEST_SUITE("finset") {

TEST_CASE("construction validates order")
{
    CHECK_THROWS(FinSet({3, 2}));
    CHECK_THROWS(FinSet({0, 2}));
    CHECK_THROWS(FinSet({2, 2}));
    CHECK(FinSet::from_unsorted({5, 2, 5, 9}) == FinSet{2, 5, 9});
}

TEST_CASE("precedes")
{
    CHECK(precedes({1, 2}, {3, 5}));
    CHECK_FALSE(precedes({1, 4}, {4}));
    CHECK(precedes({}, {7}));
}

TEST_CASE("interval")
{
    const auto s = interval(8, 15);
    CHECK(s.size() == 8);
    CHECK(s.min() == 8);
    CHECK(s.max() == 15);
    CHECK(interval(1, 1) == FinSet{1});
    CHECK(interval(4, 7) == FinSet{4, 5, 6, 7});
    CHECK_THROWS(interval(5, 4));
    CHECK_THROWS(interval(0, 4));
}

TEST_CASE("positions are 0-based")
{
    const FinSet s{2, 5, 8};
    CHECK(s[0] == 2);
    CHECK(s[1] == 5);
    CHECK(s[2] == 8);
    CHECK(FinSet{9}[0] == 9);
    CHECK(FinSet{}.elements().empty());
}

TEST_CASE("text forms")
{
    CHECK(to_string(FinSet{2, 5, 8}) == "{2,5,8}");
    CHECK(to_string(FinSet{}) == "{}");
    CHECK(to_label(FinSet{2, 5, 8}) == "2 5 8");
    CHECK(parse_finset("{2,5,8}") == FinSet{2, 5, 8});
    CHECK(parse_finset(" { 8, 2 ,5 } ") == FinSet{2, 5, 8});
    CHECK(parse_finset("{}").empty());
    CHECK(parse_finset("∅").empty());
    CHECK_THROWS_AS(parse_finset("{2,x}"), ParseError);
    CHECK_THROWS_AS(parse_finset("{0}"), ParseError);
}

TEST_CASE("helpers")
{
    const FinSet s{2, 5, 8};
    CHECK(s.with(10) == FinSet{2, 5, 8, 10});
    CHECK(s.prefix(2) == FinSet{2, 5});
    CHECK(s.truncated(5) == FinSet{2, 5});
    CHECK(FinSet{2, 5}.subset_of(s));
    CHECK_FALSE(FinSet{2, 6}.subset_of(s));
    const FinSet blocks[] = {{1}, {2, 3}, {7}};
    CHECK(concat(blocks) == FinSet{1, 2, 3, 7});
    std::vector<FinSet> v{{3}, {1, 2}, {2}, {}};
    std::sort(v.begin(), v.end(), CanonicalLess{});
    CHECK(v == std::vector<FinSet>{{}, {2}, {3}, {1, 2}});
}

TEST_CASE("property suites")
{
    CHECK(verify::finset_precedes_transitivity(8).passed());
    CHECK(verify::finset_interval(40).passed());
}

}
