#pragma once

#include "schreier/finset.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace schreier::verify {

struct CaseFailure {
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failure_count = 0;
    /// The first few failures; failure_count has the total.
    std::vector<CaseFailure> failures;

    bool passed() const noexcept { return failure_count == 0; }
    void pass() { ++cases; }
    void fail(std::string inputs, std::string expected, std::string actual);
    /// Records a case that passes iff `ok`.
    void check(bool ok, const std::function<CaseFailure()>& describe);
};

/// One JSON object per line; contains no timing, so identical runs give identical bytes.
std::string report_line(const SuiteResult& r);

// Individual checks with explicit bounds. The named suites below (one per
// documented invariant) call some of these with their default bounds, capped by --max;
// the rest back the unit and acceptance tests.

SuiteResult ordinal_associativity();
SuiteResult ordinal_distributivity();
SuiteResult ordinal_monotonicity();
SuiteResult ordinal_roundtrip(std::size_t count, std::uint64_t seed);

SuiteResult finset_precedes_transitivity(Nat universe);
SuiteResult finset_interval(Nat bound);

SuiteResult family_hereditary(Nat bound);
SuiteResult family_tail_uniformity(Nat set_bound, Nat probe_bound);
SuiteResult family_enumerate_oracle(Nat bound);
SuiteResult family_product_paths(Nat bound);
SuiteResult family_rank_consistency(Nat max_n, Nat bound);
SuiteResult family_union_cover(Nat max_n, Nat bound);
SuiteResult family_isolated_points(Nat bound);
SuiteResult family_rank_table(Nat max_rank_n, Nat max_iterate_n, Nat bound);

SuiteResult theta_uniqueness(Nat bound);
SuiteResult theta_local_constancy(Nat grid, Nat pad);
SuiteResult theta_formula(Nat grid);
SuiteResult theta_decompose_member(Nat bound);
SuiteResult theta_gn_subfamily(Nat max_n, Nat bound);

SuiteResult compacta_powers_witness(Nat max_exponent, std::size_t max_size);
SuiteResult compacta_powers_injectivity(Nat max_exponent, std::size_t max_size);
SuiteResult compacta_matrix_determinism(Nat row_bound, Nat col_bound);
SuiteResult compacta_theta1_separation(Nat max_t, Nat bound);

SuiteResult tree_self_evaluation(Nat max_n, Nat set_bound, std::size_t seeds);
SuiteResult tree_cancellation(Nat max_n, Nat set_bound, Nat m_bound, std::size_t seeds);
SuiteResult tree_parity_table(Nat max_n, Nat set_bound, std::size_t seeds, std::uint64_t max_product);
SuiteResult tree_evaluator_equivalence(std::size_t cases, std::uint64_t max_product, std::uint64_t seed);
SuiteResult tree_convexity(Nat max_n, Nat set_bound, std::uint64_t max_product);
SuiteResult tree_sibling_order(Nat max_n, Nat bound);

SuiteResult cli_report_stability(Nat cap);

struct Suite {
    std::string name;
    std::string description;
    std::function<SuiteResult(Nat cap)> run;
};

/// Every named suite, in report order.
const std::vector<Suite>& suites();

/// Runs all suites (or the one named), with truncation bounds capped at `cap`.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<SuiteResult> run(const std::optional<std::string>& only, Nat cap);

} // namespace schreier::verify
