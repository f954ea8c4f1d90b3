#include "schreier/errors.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/verify.hpp"

#include <doctest.h>

using namespace schreier;

namespace {
Ordinal w() { return Ordinal::omega(); }
Ordinal p(const char* text) { return ord_parse(text); }
} // namespace

TEST_SUITE("ordinal") {

TEST_CASE("addition absorbs finite tails on the left")
{
    CHECK(p("w*3+1") + w() == p("w*4"));
    CHECK(Ordinal{5} + w() == w());
    CHECK(ord_print(w() + Ordinal{5}) == "w+5");
    CHECK(ord_add(Ordinal{2}, Ordinal{3}) == Ordinal{5});
    CHECK(p("w^2") + p("w*5+1") == p("w^2+w*5+1"));
    CHECK(p("w+1") + p("w^2") == p("w^2"));
}

TEST_CASE("multiplication")
{
    CHECK(ord_print(w() * w()) == "w^2");
    CHECK(Ordinal{3} * w() == w());
    CHECK(ord_print(w() * Ordinal{3}) == "w*3");
    CHECK(ord_print(p("w+1") * Ordinal{2}) == "w*2+1");
    CHECK(ord_print(p("w^2+w") * p("w+1")) == "w^3+w^2+w");
    CHECK(ord_mul(Ordinal{0}, w()) == Ordinal{0});
    CHECK(ord_mul(w(), Ordinal{0}) == Ordinal{0});
}

TEST_CASE("(w*2+3)*w is the supremum of its finite multiples")
{
    // a*w = sup_n a*n with a*n built by repeated addition.
    const Ordinal a = p("w*2+3");
    const Ordinal product = a * w();
    CHECK(product == w() * w());
    Ordinal multiple = a;
    for (std::uint64_t n = 1; n <= 50; ++n) {
        CHECK(multiple < product);
        CHECK(multiple == a * Ordinal{n});
        CHECK(ord_print(multiple) == "w*" + std::to_string(2 * n) + "+3");
        multiple = multiple + a;
    }
    // Every b < w^2 is w*c + d, which a*(c+1) already exceeds: nothing below w^2 bounds the sequence.
    for (std::uint64_t c = 0; c <= 20; ++c)
        for (std::uint64_t d = 0; d <= 5; ++d) {
            const Ordinal b = w() * Ordinal{c} + Ordinal{d};
            CHECK(b < a * Ordinal{c + 1});
        }
}

TEST_CASE("comparison")
{
    CHECK(ord_cmp(p("w^w"), p("w^5*9")) == std::strong_ordering::greater);
    CHECK(ord_cmp(p("w*2+1"), p("w*2+1")) == std::strong_ordering::equal);
    CHECK(ord_cmp(p("w+7"), p("w*2")) == std::strong_ordering::less);
    CHECK(Ordinal{7} < w());
    CHECK(p("w^(w+1)") > p("w^w*100"));
}

TEST_CASE("parse and print")
{
    CHECK(p("w*4") == w() * Ordinal{4});
    CHECK(ord_print(p("w^w+1")) == "w^w+1");
    CHECK(ord_print(p("w*2+w")) == "w*3");
    CHECK(ord_print(p("w^(w+1)*2+w^2+7")) == "w^(w+1)*2+w^2+7");
    CHECK(ord_print(p("w^w^w")) == "w^w^w");
    CHECK(ord_print(Ordinal{}) == "0");
    CHECK(ord_print(p("3+w")) == "w");
    CHECK_THROWS_AS(p("w*"), ParseError);
    CHECK_THROWS_AS(p(""), ParseError);
    CHECK_THROWS_AS(p("w+x"), ParseError);
    try {
        p("w+x");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("successor structure")
{
    CHECK(p("w*3+1").is_successor());
    CHECK(ord_print(p("w*3+1").predecessor()) == "w*3");
    CHECK_FALSE(w().is_successor());
    CHECK(Ordinal{4}.finite_value() == 4);
    CHECK_THROWS(w().finite_value());
}

TEST_CASE("property suites")
{
    CHECK(verify::ordinal_associativity().passed());
    CHECK(verify::ordinal_distributivity().passed());
    CHECK(verify::ordinal_monotonicity().passed());
    CHECK(verify::ordinal_roundtrip(1000, 5).passed());
}

}
