#include "schreier/compacta.hpp"
#include "schreier/errors.hpp"
#include "schreier/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace schreier;

namespace {

std::size_t row_of(const ThetaMatrix& m, const FinSet& s)
{
    return static_cast<std::size_t>(std::find(m.row_index.begin(), m.row_index.end(), s) - m.row_index.begin());
}

const RowClass* class_of(const InjectivityReport& r, std::size_t row)
{
    for (const auto& c : r.classes)
        if (std::find(c.rows.begin(), c.rows.end(), row) != c.rows.end())
            return &c;
    return nullptr;
}

} // namespace

TEST_SUITE("compacta") {

TEST_CASE("K-mode rows of the empty set and singletons")
{
    const auto m = build_matrix(MatrixMode::K, Alpha::finite(1), IndexSet::all(), 6, 6);
    REQUIRE(m.row_index.front().empty());
    for (std::size_t j = 0; j < m.cols(); ++j)
        CHECK(m.at(0, j) == 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto& s = m.row_index[i];
        if (s.size() != 1)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& t = m.col_index[j];
            const bool hit = !t.empty() && decompose(t).blocks.front().contains(s.min());
            CHECK(m.at(i, j) == (hit ? 0 : 1));
        }
    }
}

TEST_CASE("L-mode swaps the roles")
{
    const auto m = build_matrix(MatrixMode::L, Alpha::finite(1), IndexSet::all(), 5, 5);
    CHECK(m.col_index == enumerate(family_f(1), 5));
    CHECK(m.row_index == enumerate(family_g(1), 5));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            CHECK(m.at(i, j) == (m.row_index[i].empty() ? 1 : theta(m.col_index[j], m.row_index[i])));
}

TEST_CASE("truncation artifacts")
{
    // No column reaches 12, so {12} and {13} look like the empty set; {11} does too at bound 10.
    const auto at10 = build_matrix(MatrixMode::K, Alpha::finite(1), IndexSet::all(), 13, 10);
    const auto r10 = injectivity_report(at10);
    const auto* c10 = class_of(r10, row_of(at10, {}));
    REQUIRE(c10 != nullptr);
    CHECK(c10->rows.size() == 4);
    CHECK(c10->truncation_artifact);
    CHECK(class_of(r10, row_of(at10, {12})) == c10);
    CHECK(class_of(r10, row_of(at10, {13})) == c10);
    CHECK(r10.genuine_collisions() == 0);

    const auto at11 = build_matrix(MatrixMode::K, Alpha::finite(1), IndexSet::all(), 13, 11);
    const auto r11 = injectivity_report(at11);
    const auto* c11 = class_of(r11, row_of(at11, {}));
    REQUIRE(c11 != nullptr);
    CHECK(c11->rows.size() == 3);
    CHECK(c11->truncation_artifact);
}

TEST_CASE("injectivity")
{
    CHECK(injectivity_report(build_matrix(MatrixMode::L, Alpha::omega(), IndexSet::all(), 8, 10)).injective());

    // Restricting the columns to powers of two is too coarse: every t there has {2,4} as the
    // block through 2, so 4 never reaches t[1] and {2}, {2,4} cannot be told apart.
    const auto coarse = build_matrix(MatrixMode::K, Alpha::omega(), IndexSet::powers(2), 64, 128);
    const auto report = injectivity_report(coarse);
    CHECK(report.genuine_collisions() > 0);
    CHECK(class_of(report, row_of(coarse, {2})) == class_of(report, row_of(coarse, {2, 4})));
    CHECK(verify::compacta_powers_injectivity(6, 4).passed());
}

TEST_CASE("powers witness")
{
    const FinSet t = powers_witness({2, 8}, {2, 16});
    CHECK(t == concat(std::vector<FinSet>{{2, 3}, interval(8, 15)}));
    CHECK(theta({2, 8}, t) == 1);
    CHECK(theta({2, 16}, t) == 0);

    CHECK(powers_witness({1}, {2}) == FinSet{1});
    CHECK(theta({1}, {1}) == 0);
    CHECK(theta({2}, {1}) == 1);

    const FinSet u = powers_witness({2}, {2, 8});
    CHECK(u == concat(std::vector<FinSet>{{2, 3}, interval(8, 15)}));
    CHECK(theta({2}, u) == 0);
    CHECK(theta({2, 8}, u) == 1);

    CHECK_THROWS_AS(powers_witness({2}, {2}), PreconditionError);
    CHECK_THROWS_AS(powers_witness({3}, {2}), PreconditionError);
    CHECK_THROWS_AS(powers_witness({1, 2}, {2}), PreconditionError);
}

TEST_CASE("distinguishing search")
{
    CHECK(distinguishing_search({1}, {2}, 4) == FinSet{1});
    CHECK(distinguishing_search({2, 3}, {2, 4}, 8) == FinSet{3});
    CHECK_THROWS_AS(distinguishing_search({2}, {2}, 8), PreconditionError);
}

TEST_CASE("serializations")
{
    const auto m = build_matrix(MatrixMode::K, Alpha::finite(1), IndexSet::all(), 2, 2);
    // Rows: {}, {1}, {2}; columns: {}, {1}, {2}.
    CHECK(matrix_to_csv(m) == ",,1,2\n,1,1,1\n1,1,0,1\n2,1,1,0\n");
    CHECK(matrix_to_pbm(m) == "P1\n3 3\n1 1 1\n1 0 1\n1 1 0\n");
    CHECK(matrix_to_json(m) ==
          R"({"col_index":[[],[1],[2]],"entries":["111","101","110"],"mode":"K","row_index":[[],[1],[2]]})");
}

TEST_CASE("alpha")
{
    CHECK(Alpha::parse("w").is_omega());
    CHECK(Alpha::parse("omega").is_omega());
    CHECK(Alpha::parse("3").value() == 3);
    CHECK_THROWS(Alpha::parse("0"));
    CHECK_THROWS(Alpha::parse("x"));
    CHECK_THROWS_AS(build_matrix(MatrixMode::K, Alpha::omega(), IndexSet::all(), 0, 3), PreconditionError);
}

TEST_CASE("property suites")
{
    CHECK(verify::compacta_powers_witness(8, 4).passed());
    CHECK(verify::compacta_matrix_determinism(9, 9).passed());
    CHECK(verify::compacta_theta1_separation(8, 18).passed());
}

}
