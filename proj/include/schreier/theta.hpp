#pragma once

#include "schreier/finset.hpp"

#include <span>
#include <vector>

namespace schreier {

/**
 * The canonical splitting t = t[0] ∪ ... ∪ t[l] of an element of S2:
 *
 *   (a) t[0] < t[1] < ... < t[l],
 *   (b) {min t[i]} is a Schreier set,
 *   (c) t[0], ..., t[l-1] are maximal Schreier sets and t[l] is Schreier.
 */
struct Decomposition {
    std::vector<FinSet> blocks;

    FinSet joined() const { return concat(blocks); }
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Checks (a), (b), (c) for an arbitrary block list; blocks must be nonempty.
bool is_canonical_decomposition(std::span<const FinSet> blocks);

/// Greedy: cut off min(rest) elements while more than that remain.
/// Throws PreconditionError for t empty and NotInS2 when t is not in S2.
Decomposition decompose(const FinSet& t);

/// <s, t> = #{ 0 <= i <= min(k, l) : m_i ∈ t[i] } for s = {m_0 < ... < m_k}.
std::size_t inner(const FinSet& s, const Decomposition& t);
/// Decomposes t on demand; <s, {}> = 0.
std::size_t inner(const FinSet& s, const FinSet& t);

/// (<s, t> + 1) mod 2.
int theta(const FinSet& s, const Decomposition& t);
int theta(const FinSet& s, const FinSet& t);
/// ((-1)^<s,t> + 1) / 2, the same kernel through the sign character.
int theta_via_sign(const FinSet& s, const Decomposition& t);
int theta_via_sign(const FinSet& s, const FinSet& t);

enum class Coordinate { First, Second };

/**
 * With one coordinate fixed to `value`, theta depends on the other coordinate
 * only through its intersection with [1..radius].
 */
Nat dependency_radius(Coordinate fixed, const FinSet& value);

} // namespace schreier
