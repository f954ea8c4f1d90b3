#pragma once

// Brute-force reference computations. Nothing here calls the greedy
// decomposition, the composition search, the derivative probe or the
// factorized evaluator, so each can be checked against these directly.

#include "schreier/finset.hpp"

#include <functional>
#include <vector>

namespace schreier::oracle {

/// Every subset of [1..bound] satisfying pred, in length-then-lex order. bound <= 24.
std::vector<FinSet> powerset_filter(Nat bound, const std::function<bool(const FinSet&)>& pred);

/// Every subset of `universe`, in length-then-lex order.
std::vector<FinSet> subsets_of(const FinSet& universe);

bool schreier(const FinSet& s);
bool maximal_schreier(const FinSet& s);

/// All 2^(#t-1) splittings of t into consecutive nonempty blocks.
std::vector<std::vector<FinSet>> compositions(const FinSet& t);

/// Conditions (a), (b), (c) of the canonical S2 decomposition, checked literally.
bool canonical_conditions(const std::vector<FinSet>& blocks);

/// Some composition has Schreier blocks whose minima form a Schreier set.
bool s2_member(const FinSet& t);

/// #{ i <= min(k, l) : m_i ∈ blocks[i] }.
std::size_t inner(const FinSet& s, const std::vector<FinSet>& blocks);

/// s ∈ S is isolated iff no one-point extension m in (max s, window] stays in S.
bool isolated_in_schreier(const FinSet& s, Nat window = 64);

} // namespace schreier::oracle
