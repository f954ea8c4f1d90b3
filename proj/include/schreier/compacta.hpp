#pragma once

#include "schreier/family.hpp"
#include "schreier/finset.hpp"
#include "schreier/theta.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schreier {

/// The family parameter alpha: a natural n >= 1 or omega.
class Alpha {
public:
    static Alpha finite(Nat n);
    static Alpha omega() { return Alpha{}; }
    /// "w", "omega" or a positive integer.
    static Alpha parse(std::string_view text);

    bool is_omega() const noexcept { return !n_.has_value(); }
    Nat value() const { return n_.value(); }
    std::string print() const { return n_ ? std::to_string(*n_) : "w"; }

    /// F_alpha: cube(n, n) or schreier.
    Family row_family() const;
    /// G_alpha: prod(schreier, cube(n, n)) or S2.
    Family column_family() const;

private:
    std::optional<Nat> n_;
};

/**
 * K-mode: rows s run over F_alpha, columns t over G_alpha, entry Theta(s, t).
 * L-mode: rows t run over G_alpha, columns s over F_alpha, entry Theta(s, t).
 * In both modes row i is the (truncated) function Theta_0(s) or Theta_1(t).
 */
enum class MatrixMode { K, L };

struct ThetaMatrix {
    MatrixMode mode = MatrixMode::K;
    std::vector<FinSet> row_index;
    std::vector<FinSet> col_index;
    /// Row-major 0/1.
    std::vector<std::uint8_t> entries;
    /// Columns cover every admissible set with max <= this bound.
    Nat col_bound = 0;

    std::size_t rows() const noexcept { return row_index.size(); }
    std::size_t cols() const noexcept { return col_index.size(); }
    int at(std::size_t i, std::size_t j) const { return entries[i * cols() + j]; }
};

/// `workers` = 0 uses worker_count(); the result never depends on it.
ThetaMatrix build_matrix(MatrixMode mode, const Alpha& alpha, const IndexSet& index, Nat row_bound, Nat col_bound,
                         std::size_t workers = 0);
/// Same, over explicit index lists. The S2 side (columns in K-mode, rows in L-mode) must lie in S2.
ThetaMatrix build_matrix(MatrixMode mode, std::vector<FinSet> rows, std::vector<FinSet> cols, Nat col_bound,
                         std::size_t workers = 0);

struct RowClass {
    std::vector<std::size_t> rows;
    /// Some member's dependency radius exceeds the column bound.
    bool truncation_artifact = false;
};

struct InjectivityReport {
    /// Classes of identical rows, ordered by first row.
    std::vector<RowClass> classes;

    bool injective() const;
    std::size_t genuine_collisions() const;
    std::size_t artifact_collisions() const;
};

InjectivityReport injectivity_report(const ThetaMatrix& m);

/**
 * For distinct s0, s1 in S with all elements powers of two, returns the union
 * of the dyadic blocks [2^i, 2^(i+1)-1] over the common prefix and first point
 * of divergence (taken from the set whose divergent element is smaller, or
 * which is longer). The result is in S2 and Theta separates s0 from s1 on it.
 */
FinSet powers_witness(const FinSet& s0, const FinSet& s1);

/**
 * Smallest s in S (length-then-lex) with max s <= bound and
 * Theta(s, t0) != Theta(s, t1). nullopt means none exists below the bound,
 * not that the functions agree.
 */
std::optional<FinSet> distinguishing_search(const FinSet& t0, const FinSet& t1, Nat bound);

std::string matrix_to_csv(const ThetaMatrix& m);
std::string matrix_to_pbm(const ThetaMatrix& m);
std::string matrix_to_json(const ThetaMatrix& m);

} // namespace schreier
