#pragma once

#include "schreier/finset.hpp"
#include "schreier/theta.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace schreier {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/**
 * A chain s_1 ⊂ s_2 ⊂ ... ⊂ s_k = s, s_i = {m_1, ..., m_i}, together with the
 * blocks Delta(s_1), ..., Delta(s_k). Chain levels are 1-based.
 *
 * Admissible means: every block is a maximal Schreier set (#D = min D),
 * n < min Delta(s_1), the blocks increase under `precedes`, and k <= n.
 */
struct DeltaChain {
    Nat n = 1;
    FinSet s;
    std::vector<FinSet> deltas;

    std::size_t depth() const noexcept { return deltas.size(); }
    /// The chain truncated to its first j levels.
    DeltaChain prefix(std::size_t j) const;
    /// Delta(s_1) ∪ ... ∪ Delta(s_k).
    FinSet joined() const { return concat(deltas); }
};

bool is_admissible(const DeltaChain& c);

/// How blocks are chosen: dyadic intervals, or seeded random maximal Schreier sets.
class ChainGenerator {
public:
    static ChainGenerator canonical() { return ChainGenerator{}; }
    static ChainGenerator seeded(std::uint64_t seed);

    bool is_canonical() const noexcept { return !seed_.has_value(); }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }

    /**
     * Block for chain level `level` (1-based) of s ∪ {m}: canonical gives
     * [p, 2p-1] with p the least power of two above both the previous block (or
     * n) and m. The random draw depends only on (seed, n, the chain so far, m).
     */
    FinSet next_block(Nat n, const FinSet& chain_so_far, const FinSet* previous_block, Nat m) const;

private:
    std::optional<std::uint64_t> seed_;
};

/// Throws PreconditionError when #s > n.
DeltaChain build_chain(Nat n, const FinSet& s, const ChainGenerator& gen);

/**
 * The average of x_u over u ∈ Delta(s_1) × ... × Delta(s_k), each index u
 * carrying weight 1 / prod #Delta(s_i). The empty chain gives x_∅ with weight 1.
 */
class FormalVector {
public:
    FormalVector() = default;
    /// Blocks must be nonempty and precedes-ordered.
    explicit FormalVector(std::vector<FinSet> blocks);

    const std::vector<FinSet>& blocks() const noexcept { return blocks_; }
    std::size_t depth() const noexcept { return blocks_.size(); }
    BigInt index_count() const;
    Rational weight() const;

    /// Calls visit(u) for every index set u, in lexicographic order.
    template <class Visit>
    void for_each_index(Visit&& visit) const;

    /// Index -> weight; throws if more than `limit` indices.
    std::map<FinSet, Rational> explicit_form(std::size_t limit = 10000) const;

private:
    std::vector<FinSet> blocks_;
};

/// Evaluation at the Theta-column indexed by t. The empty t is the constant-1 functional.
class Functional {
public:
    Functional() = default;
    /// Throws NotInS2 unless t is empty or in S2.
    explicit Functional(FinSet t);

    const FinSet& t() const noexcept { return t_; }
    const Decomposition& decomposition() const noexcept { return decomposition_; }
    bool is_constant() const noexcept { return t_.empty(); }
    int at(const FinSet& u) const { return t_.empty() ? 1 : theta(u, decomposition_); }

private:
    FinSet t_;
    Decomposition decomposition_;
};

FormalVector y_vector(const DeltaChain& c);
/// x*_t for t the union of the chain's blocks; checks t ∈ G_n and that the
/// canonical decomposition of t is exactly the chain's blocks.
Functional y_functional(const DeltaChain& c);

/// Sum over all indices; cost is the index count.
Rational evaluate_enumerated(const Functional& f, const FormalVector& v);
/// (prod over aligned levels of (1 - 2 q_i) + 1) / 2 with
/// q_i = #(Delta_i ∩ t[i-1]) / #Delta_i.
Rational evaluate_factorized(const Functional& f, const FormalVector& v);
inline Rational evaluate(const Functional& f, const FormalVector& v) { return evaluate_factorized(f, v); }

struct CancellationResult {
    DeltaChain chain;    ///< chain for s
    DeltaChain extended; ///< chain for s ∪ {m}
    Nat m = 0;
    FinSet t0;
    FinSet t1;
    BigInt l0; ///< prod #Delta(s_i)
    BigInt l1; ///< #Delta(s ∪ {m})
    BigInt l2; ///< l0 * l1
    Rational first;  ///< y*_{s∪{m}}(y_s)
    Rational second; ///< y*_{s∪{m}}(y_{s∪{m}})
    Rational value;  ///< first - second

    std::size_t k() const noexcept { return chain.depth(); }
    /// value == (-1)^k
    bool holds() const;
};

/// Requires #s < n and m > max s; the extension block comes from `gen`.
CancellationResult cancellation_check(const DeltaChain& chain, Nat m, const ChainGenerator& gen);
/// Same with a caller-supplied Delta(s ∪ {m}); throws PreconditionError if it is inadmissible.
CancellationResult cancellation_check(const DeltaChain& chain, Nat m, const FinSet& extension_block);

/**
 * Delta materialized on every s ⊆ [1..bound] with 1 <= #s <= n, with
 * n, Delta(s) < Delta(s ∪ {m0}) < Delta(s ∪ {m1}) for max s < m0 < m1.
 * Blocks are dyadic intervals; sibling ordering doubles them, so only tiny
 * bounds fit under `max_block`.
 */
class DeltaTree {
public:
    DeltaTree(Nat n, Nat bound, Nat max_block = Nat{1} << 16);

    Nat n() const noexcept { return n_; }
    Nat bound() const noexcept { return bound_; }
    const FinSet& delta(const FinSet& s) const;
    DeltaChain chain(const FinSet& s) const;
    const std::map<FinSet, FinSet>& blocks() const noexcept { return blocks_; }

private:
    Nat n_;
    Nat bound_;
    std::map<FinSet, FinSet> blocks_;
};

template <class Visit>
void FormalVector::for_each_index(Visit&& visit) const
{
    std::vector<std::size_t> pos(blocks_.size(), 0);
    std::vector<Nat> u(blocks_.size());
    for (;;) {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            u[i] = blocks_[i][pos[i]];
        visit(FinSet(u));
        std::size_t i = blocks_.size();
        while (i > 0 && ++pos[i - 1] == blocks_[i - 1].size())
            pos[--i] = 0;
        if (i == 0)
            return;
    }
}

} // namespace schreier
