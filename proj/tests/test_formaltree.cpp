#include "schreier/errors.hpp"
#include "schreier/family.hpp"
#include "schreier/formaltree.hpp"
#include "schreier/verify.hpp"

#include <doctest.h>

using namespace schreier;

namespace {
DeltaChain two_block_chain()
{
    DeltaChain c;
    c.n = 2;
    c.s = {3, 5};
    c.deltas = {interval(4, 7), interval(16, 31)};
    return c;
}
} // namespace

TEST_SUITE("formaltree") {

TEST_CASE("canonical chains")
{
    const auto gen = ChainGenerator::canonical();
    CHECK(build_chain(2, {3}, gen).deltas == std::vector<FinSet>{interval(4, 7)});
    // The least power of two above max(7, 5) is 8.
    CHECK(build_chain(2, {3, 5}, gen).deltas == std::vector<FinSet>{interval(4, 7), interval(8, 15)});
    CHECK_THROWS(build_chain(1, {2, 3}, gen));
    CHECK(build_chain(3, {}, gen).depth() == 0);
    CHECK(is_admissible(build_chain(4, {1, 2, 9}, gen)));
    CHECK(is_admissible(two_block_chain()));
}

TEST_CASE("seeded chains are admissible and reproducible")
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto gen = ChainGenerator::seeded(seed);
        const auto a = build_chain(4, {2, 5, 6}, gen);
        CHECK(is_admissible(a));
        CHECK(a.deltas == build_chain(4, {2, 5, 6}, gen).deltas);
        for (const auto& d : a.deltas)
            CHECK(d.size() == d.min());
    }
}

TEST_CASE("vectors")
{
    DeltaChain one;
    one.n = 2;
    one.s = {3};
    one.deltas = {interval(4, 7)};
    const auto v = y_vector(one);
    CHECK(v.index_count() == 4);
    CHECK(v.weight() == Rational(1, 4));
    const auto e = v.explicit_form();
    CHECK(e.size() == 4);
    CHECK(e.at({4}) == Rational(1, 4));

    const auto empty = y_vector(DeltaChain{});
    CHECK(empty.index_count() == 1);
    CHECK(empty.explicit_form().at({}) == 1);

    const auto big = y_vector(two_block_chain());
    CHECK(big.index_count() == 64);
    CHECK(big.weight() == Rational(1, 64));
}

TEST_CASE("functionals")
{
    const auto f = y_functional(two_block_chain());
    CHECK(f.t() == concat(two_block_chain().deltas));
    CHECK(f.decomposition().blocks == two_block_chain().deltas);
    DeltaChain one;
    one.n = 2;
    one.s = {3};
    one.deltas = {interval(4, 7)};
    CHECK(y_functional(one).t() == FinSet{4, 5, 6, 7});
    CHECK(y_functional(DeltaChain{}).is_constant());
}

TEST_CASE("evaluation")
{
    const FormalVector v({interval(4, 7)});
    CHECK(evaluate(Functional({4, 5}), v) == Rational(1, 2));
    CHECK(evaluate_enumerated(Functional({4, 5}), v) == Rational(1, 2));
    CHECK(evaluate(Functional{}, v) == 1);
    CHECK(evaluate(Functional{}, y_vector(two_block_chain())) == 1);
    const auto c = two_block_chain();
    CHECK(evaluate(y_functional(c), y_vector(c)) == 1);
    CHECK(evaluate(y_functional(c.prefix(1)), y_vector(c.prefix(1))) == 0);
}

TEST_CASE("cancellation")
{
    const auto gen = ChainGenerator::canonical();
    for (Nat m = 1; m <= 6; ++m)
        CHECK(cancellation_check(build_chain(2, {}, gen), m, gen).value == 1);
    const auto r = cancellation_check(build_chain(2, {3}, gen), 5, gen);
    CHECK(r.value == -1);
    CHECK(r.k() == 1);
    CHECK(r.holds());
    CHECK(evaluate(y_functional(DeltaChain{}), y_vector(DeltaChain{})) == 1);
    CHECK_THROWS_AS(cancellation_check(build_chain(2, {3}, gen), 3, gen), PreconditionError);
    CHECK_THROWS_AS(cancellation_check(build_chain(1, {3}, gen), 5, gen), PreconditionError);
}

TEST_CASE("materialized tree")
{
    const DeltaTree tree(2, 5);
    CHECK(tree.delta({}).empty());
    CHECK(is_admissible(tree.chain({2, 4})));
    CHECK(precedes(tree.delta({1}), tree.delta({2})));
    CHECK(precedes(tree.delta({2}), tree.delta({2, 3})));
    CHECK_THROWS(DeltaTree(3, 8, 64));
}

TEST_CASE("property suites")
{
    CHECK(verify::tree_self_evaluation(3, 7, 10).passed());
    CHECK(verify::tree_cancellation(3, 7, 8, 10).passed());
    CHECK(verify::tree_parity_table(3, 6, 5, 10000).passed());
    CHECK(verify::tree_evaluator_equivalence(100, 10000, 3).passed());
    CHECK(verify::tree_convexity(3, 6, 10000).passed());
    CHECK(verify::tree_sibling_order(3, 5).passed());
}

}
