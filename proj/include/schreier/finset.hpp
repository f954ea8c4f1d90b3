#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schreier {

using Nat = std::uint64_t;

/// A finite subset of N = {1, 2, ...}, stored as a strictly increasing sequence.
class FinSet {
public:
    FinSet() = default;
    FinSet(std::initializer_list<Nat> elems);
    /// Validates: strictly increasing, all elements >= 1.
    explicit FinSet(std::vector<Nat> elems);
    /// Sorts and deduplicates; still rejects 0.
    static FinSet from_unsorted(std::vector<Nat> elems);

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    /// Throws std::out_of_range on the empty set.
    Nat min() const;
    Nat max() const;
    /// max s with max(empty) = 0; only for ordering logic.
    Nat max_or_zero() const noexcept { return elems_.empty() ? 0 : elems_.back(); }

    bool contains(Nat m) const noexcept;
    bool subset_of(const FinSet& other) const noexcept;

    /// Position view (m_0, ..., m_k), 0-based.
    std::span<const Nat> elements() const noexcept { return elems_; }
    Nat operator[](std::size_t i) const { return elems_[i]; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    FinSet with(Nat m) const;
    FinSet prefix(std::size_t count) const;
    /// s ∩ [1..bound]
    FinSet truncated(Nat bound) const;

    friend bool operator==(const FinSet&, const FinSet&) = default;
    /// Plain lexicographic order on the element sequences.
    friend std::strong_ordering operator<=>(const FinSet& a, const FinSet& b) { return a.elems_ <=> b.elems_; }

private:
    std::vector<Nat> elems_;
};

/// Length first, then lexicographic: the canonical enumeration order.
struct CanonicalLess {
    bool operator()(const FinSet& a, const FinSet& b) const noexcept
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// max s < min t; vacuously true when s is empty, false when s is nonempty and t empty.
bool precedes(const FinSet& s, const FinSet& t) noexcept;

/// {a, a+1, ..., b}; requires 1 <= a <= b.
FinSet interval(Nat a, Nat b);

/// Union of blocks that are already precedes-ordered.
FinSet concat(std::span<const FinSet> blocks);

/// "{2,5,8}"; the empty set prints as "{}".
std::string to_string(const FinSet& s);
/// Space-separated elements, as used in CSV cells; empty for the empty set.
std::string to_label(const FinSet& s);
/// Accepts "{2,5,8}", "{ 2, 5 }", "{}" and "∅"; order and duplicates are normalized.
FinSet parse_finset(std::string_view text);

} // namespace schreier
