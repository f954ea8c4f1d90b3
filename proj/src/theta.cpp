#include "schreier/theta.hpp"

#include "schreier/errors.hpp"

#include <algorithm>
#include <cassert>

namespace schreier {

namespace {

bool is_schreier(const FinSet& s) { return s.empty() || s.size() <= s.min(); }
bool is_maximal_schreier(const FinSet& s) { return !s.empty() && s.size() == s.min(); }

} // namespace

bool is_canonical_decomposition(std::span<const FinSet> blocks)
{
    if (blocks.empty())
        return false;
    std::vector<Nat> mins;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        if (b.empty())
            return false;
        if (i > 0 && !precedes(blocks[i - 1], b))
            return false;
        const bool last = i + 1 == blocks.size();
        if (last ? !is_schreier(b) : !is_maximal_schreier(b))
            return false;
        mins.push_back(b.min());
    }
    return is_schreier(FinSet(std::move(mins)));
}

Decomposition decompose(const FinSet& t)
{
    if (t.empty())
        throw PreconditionError("decompose requires a nonempty set");
    Decomposition out;
    auto elems = t.elements();
    std::size_t start = 0;
    while (start < elems.size()) {
        const Nat lead = elems[start];
        const std::size_t rest = elems.size() - start;
        const std::size_t take = rest <= lead ? rest : static_cast<std::size_t>(lead);
        out.blocks.emplace_back(std::vector<Nat>(elems.begin() + static_cast<std::ptrdiff_t>(start),
                                                 elems.begin() + static_cast<std::ptrdiff_t>(start + take)));
        start += take;
    }
    // Greedy uses the fewest blocks, so it fails (b) only if every composition does.
    if (out.blocks.size() > t.min())
        throw NotInS2(to_string(t) + " is not in S2");
    return out;
}

std::size_t inner(const FinSet& s, const Decomposition& t)
{
    const std::size_t n = std::min(s.size(), t.blocks.size());
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (t.blocks[i].contains(s[i]))
            ++count;
    return count;
}

std::size_t inner(const FinSet& s, const FinSet& t)
{
    if (t.empty())
        return 0;
    // Decompose even for s empty so that t outside S2 is always reported.
    return inner(s, decompose(t));
}

int theta(const FinSet& s, const Decomposition& t)
{
    const int value = static_cast<int>((inner(s, t) + 1) % 2);
    assert(value == theta_via_sign(s, t));
    return value;
}

int theta(const FinSet& s, const FinSet& t) { return static_cast<int>((inner(s, t) + 1) % 2); }

int theta_via_sign(const FinSet& s, const Decomposition& t)
{
    const int sign = inner(s, t) % 2 == 0 ? 1 : -1;
    return (sign + 1) / 2;
}

int theta_via_sign(const FinSet& s, const FinSet& t)
{
    const int sign = inner(s, t) % 2 == 0 ? 1 : -1;
    return (sign + 1) / 2;
}

Nat dependency_radius(Coordinate, const FinSet& value)
{
    if (value.empty())
        throw PreconditionError("dependency radius needs a nonempty value");
    return value.max();
}

} // namespace schreier
