#include "schreier/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace schreier::oracle {

std::vector<FinSet> powerset_filter(Nat bound, const std::function<bool(const FinSet&)>& pred)
{
    if (bound > 24)
        throw std::invalid_argument("powerset_filter bound too large");
    std::vector<FinSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bound); ++mask) {
        std::vector<Nat> elems;
        for (Nat i = 0; i < bound; ++i)
            if (mask >> i & 1)
                elems.push_back(i + 1);
        FinSet s(std::move(elems));
        if (pred(s))
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::vector<FinSet> subsets_of(const FinSet& universe)
{
    if (universe.size() > 24)
        throw std::invalid_argument("subsets_of universe too large");
    std::vector<FinSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
        std::vector<Nat> elems;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1)
                elems.push_back(universe[i]);
        out.emplace_back(std::move(elems));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

bool schreier(const FinSet& s) { return s.empty() || s.size() <= s[0]; }

bool maximal_schreier(const FinSet& s) { return !s.empty() && s.size() == s[0]; }

std::vector<std::vector<FinSet>> compositions(const FinSet& t)
{
    std::vector<std::vector<FinSet>> out;
    if (t.empty())
        return out;
    const std::size_t cuts = t.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cuts); ++mask) {
        std::vector<FinSet> blocks;
        std::vector<Nat> current{t[0]};
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (mask >> (i - 1) & 1) {
                blocks.emplace_back(std::move(current));
                current.clear();
            }
            current.push_back(t[i]);
        }
        blocks.emplace_back(std::move(current));
        out.push_back(std::move(blocks));
    }
    return out;
}

bool canonical_conditions(const std::vector<FinSet>& blocks)
{
    if (blocks.empty())
        return false;
    std::vector<Nat> mins;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty())
            return false;
        if (i > 0 && !(blocks[i - 1].max() < blocks[i].min())) // (a)
            return false;
        if (i + 1 < blocks.size() ? !maximal_schreier(blocks[i]) : !schreier(blocks[i])) // (c)
            return false;
        mins.push_back(blocks[i].min());
    }
    return schreier(FinSet(std::move(mins))); // (b)
}

bool s2_member(const FinSet& t)
{
    if (t.empty())
        return true;
    for (const auto& blocks : compositions(t)) {
        std::vector<Nat> mins;
        bool ok = true;
        for (const auto& b : blocks) {
            ok = ok && schreier(b);
            mins.push_back(b.min());
        }
        if (ok && schreier(FinSet(std::move(mins))))
            return true;
    }
    return false;
}

std::size_t inner(const FinSet& s, const std::vector<FinSet>& blocks)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.size() && i < blocks.size(); ++i)
        count += blocks[i].contains(s[i]) ? 1 : 0;
    return count;
}

bool isolated_in_schreier(const FinSet& s, Nat window)
{
    for (Nat m = s.max_or_zero() + 1; m <= window; ++m)
        if (schreier(s.with(m)))
            return false;
    return true;
}

} // namespace schreier::oracle
