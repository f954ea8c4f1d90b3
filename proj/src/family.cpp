#include "schreier/family.hpp"

#include "schreier/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace schreier {

// ---------------------------------------------------------------------------
// IndexSet

IndexSet IndexSet::from(Nat n)
{
    if (n < 1)
        throw std::invalid_argument("from(n) requires n >= 1");
    return IndexSet{Kind::From, n, 1, {}};
}

IndexSet IndexSet::powers(Nat base)
{
    if (base < 2)
        throw std::invalid_argument("powers(b) requires b >= 2");
    return IndexSet{Kind::Powers, base, 1, {}};
}

IndexSet IndexSet::arithmetic(Nat start, Nat step)
{
    if (start < 1 || step < 1)
        throw std::invalid_argument("ap(start, step) requires start >= 1 and step >= 1");
    return IndexSet{Kind::Arithmetic, start, step, {}};
}

bool IndexSet::contains(Nat m) const noexcept
{
    if (m == 0)
        return false;
    switch (kind_) {
    case Kind::All:
        return true;
    case Kind::From:
        return m >= a_;
    case Kind::Powers:
        while (m % a_ == 0)
            m /= a_;
        return m == 1;
    case Kind::Arithmetic:
        return m >= a_ && (m - a_) % b_ == 0;
    case Kind::Explicit:
        return elems_.contains(m);
    }
    return false;
}

std::optional<Nat> IndexSet::kth(Nat k) const
{
    if (k == 0)
        return std::nullopt;
    constexpr Nat top = std::numeric_limits<Nat>::max();
    switch (kind_) {
    case Kind::All:
        return k;
    case Kind::From:
        if (k - 1 > top - a_)
            return std::nullopt;
        return a_ + (k - 1);
    case Kind::Powers: {
        Nat p = 1;
        for (Nat j = 1; j < k; ++j) {
            if (p > top / a_)
                return std::nullopt;
            p *= a_;
        }
        return p;
    }
    case Kind::Arithmetic:
        if ((k - 1) > (top - a_) / b_)
            return std::nullopt;
        return a_ + (k - 1) * b_;
    case Kind::Explicit:
        if (k > elems_.size())
            return std::nullopt;
        return elems_[k - 1];
    }
    return std::nullopt;
}

std::optional<Nat> IndexSet::next_at_least(Nat x) const
{
    x = std::max<Nat>(x, 1);
    switch (kind_) {
    case Kind::All:
        return x;
    case Kind::From:
        return std::max(x, a_);
    case Kind::Powers: {
        Nat p = 1;
        while (p < x) {
            if (p > std::numeric_limits<Nat>::max() / a_)
                return std::nullopt;
            p *= a_;
        }
        return p;
    }
    case Kind::Arithmetic: {
        if (x <= a_)
            return a_;
        const Nat steps = (x - a_ + b_ - 1) / b_;
        if (steps > (std::numeric_limits<Nat>::max() - a_) / b_)
            return std::nullopt;
        return a_ + steps * b_;
    }
    case Kind::Explicit: {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it == elems_.end())
            return std::nullopt;
        return *it;
    }
    }
    return std::nullopt;
}

std::string print_index_set(const IndexSet& m)
{
    switch (m.kind()) {
    case IndexSet::Kind::All:
        return "all";
    case IndexSet::Kind::From:
        return "from(" + std::to_string(m.first_param()) + ")";
    case IndexSet::Kind::Powers:
        return "powers(" + std::to_string(m.first_param()) + ")";
    case IndexSet::Kind::Arithmetic:
        return "ap(" + std::to_string(m.first_param()) + "," + std::to_string(m.second_param()) + ")";
    case IndexSet::Kind::Explicit:
        return to_string(m.elements());
    }
    return {};
}

// ---------------------------------------------------------------------------
// Family construction

Family Family::cube(Nat threshold, Nat size)
{
    if (threshold < 1)
        throw std::invalid_argument("cube(a, k) requires a >= 1");
    return Family{std::make_shared<const Node>(CubeNode{threshold, size})};
}

Family Family::schreier() { return Family{std::make_shared<const Node>(SchreierNode{})}; }

Family Family::product(Family left, Family right)
{
    return Family{std::make_shared<const Node>(ProductNode{std::move(left), std::move(right), false})};
}

Family Family::s2()
{
    return Family{std::make_shared<const Node>(ProductNode{schreier(), schreier(), true})};
}

Family Family::restrict(Family inner, IndexSet index)
{
    return Family{std::make_shared<const Node>(RestrictNode{std::move(inner), std::move(index)})};
}

Family family_f(Nat n) { return Family::cube(n, n); }
Family family_g(Nat n) { return Family::product(Family::schreier(), Family::cube(n, n)); }

// ---------------------------------------------------------------------------
// Membership

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

bool is_schreier_or_cube(const Family& f)
{
    return f.as<SchreierNode>() != nullptr || f.as<CubeNode>() != nullptr;
}

class CompositionSearch {
public:
    CompositionSearch(const Family& left, const Family& right, const FinSet& s)
        : left_(left), right_(right), s_(s) {}

    bool run()
    {
        std::vector<Nat> mins;
        return search(0, mins);
    }

private:
    bool search(std::size_t start, std::vector<Nat>& mins)
    {
        if (start == s_.size())
            return member(right_, FinSet(mins));
        if (failed_.contains({start, mins}))
            return false;
        mins.push_back(s_[start]);
        bool found = false;
        // The minima set only grows, so a G-violation here kills every completion.
        if (member(right_, FinSet(mins))) {
            std::vector<Nat> block;
            for (std::size_t end = start; end < s_.size() && !found; ++end) {
                block.push_back(s_[end]);
                // F hereditary: once a block fails, every longer block fails too.
                if (!member(left_, FinSet(block)))
                    break;
                found = search(end + 1, mins);
            }
        }
        mins.pop_back();
        if (!found)
            failed_.insert({start, mins});
        return found;
    }

    const Family& left_;
    const Family& right_;
    const FinSet& s_;
    std::set<std::pair<std::size_t, std::vector<Nat>>> failed_;
};

} // namespace

bool product_member_exhaustive(const Family& left, const Family& right, const FinSet& s)
{
    if (s.empty())
        return true;
    return CompositionSearch(left, right, s).run();
}

bool product_member_greedy(const Family& left, const Family& right, const FinSet& s)
{
    // Greedy longest blocks minimize the block count when F is hereditary; for
    // G schreier or a cube, membership of the minima depends only on that
    // count and on min s.
    const auto elems = s.elements();
    auto block_ok = [&](std::size_t start, std::size_t len) {
        return member(left, FinSet(std::vector<Nat>(elems.begin() + static_cast<std::ptrdiff_t>(start),
                                                     elems.begin() + static_cast<std::ptrdiff_t>(start + len))));
    };
    std::vector<Nat> mins;
    std::size_t start = 0;
    while (start < s.size()) {
        if (!block_ok(start, 1))
            return false;
        // Admissible block lengths form an initial segment; binary search its end.
        std::size_t lo = 1;
        std::size_t hi = s.size() - start;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo + 1) / 2;
            if (block_ok(start, mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        mins.push_back(s[start]);
        start += lo;
    }
    return member(right, FinSet(std::move(mins)));
}

bool member(const Family& f, const FinSet& s)
{
    return std::visit(
        overloaded{
            [&](const CubeNode& c) { return s.size() <= c.size && (s.empty() || s.min() >= c.threshold); },
            [&](const SchreierNode&) { return s.empty() || s.size() <= s.min(); },
            [&](const ProductNode& p) {
                if (s.empty())
                    return true;
                if (is_schreier_or_cube(p.right))
                    return product_member_greedy(p.left, p.right, s);
                return product_member_exhaustive(p.left, p.right, s);
            },
            [&](const RestrictNode& r) {
                return std::all_of(s.begin(), s.end(), [&](Nat m) { return r.index.contains(m); }) &&
                       member(r.inner, s);
            },
        },
        f.node());
}

bool extension_admissible(const Family& f, const FinSet& s, Nat probe)
{
    if (probe <= s.max_or_zero())
        throw PreconditionError("extension probe " + std::to_string(probe) + " must exceed max s");
    return member(f, s.with(probe));
}

namespace {

Nat tail_bound(const Family& f)
{
    return std::visit(overloaded{
                          [](const CubeNode& c) { return c.threshold; },
                          [](const SchreierNode&) { return Nat{0}; },
                          [](const ProductNode& p) { return std::max(tail_bound(p.left), tail_bound(p.right)); },
                          [](const RestrictNode& r) { return tail_bound(r.inner); },
                      },
                      f.node());
}

void collect_index_sets(const Family& f, std::vector<const IndexSet*>& out)
{
    std::visit(overloaded{
                   [](const CubeNode&) {},
                   [](const SchreierNode&) {},
                   [&](const ProductNode& p) {
                       collect_index_sets(p.left, out);
                       collect_index_sets(p.right, out);
                   },
                   [&](const RestrictNode& r) {
                       out.push_back(&r.index);
                       collect_index_sets(r.inner, out);
                   },
               },
               f.node());
}

} // namespace

Nat tail_threshold(const Family& f, const FinSet&) { return tail_bound(f); }

bool in_effective_index(const Family& f, Nat m)
{
    std::vector<const IndexSet*> sets;
    collect_index_sets(f, sets);
    return m >= 1 && std::all_of(sets.begin(), sets.end(), [&](const IndexSet* i) { return i->contains(m); });
}

std::optional<Nat> next_effective_index(const Family& f, Nat x)
{
    std::vector<const IndexSet*> sets;
    collect_index_sets(f, sets);
    Nat candidate = std::max<Nat>(x, 1);
    // Leapfrog over the restrictions; an empty or very sparse intersection gives up.
    for (int round = 0; round < 100000; ++round) {
        bool agreed = true;
        for (const auto* i : sets) {
            auto next = i->next_at_least(candidate);
            if (!next)
                return std::nullopt;
            if (*next != candidate) {
                candidate = *next;
                agreed = false;
            }
        }
        if (agreed)
            return candidate;
    }
    return std::nullopt;
}

bool has_finite_index(const Family& f)
{
    std::vector<const IndexSet*> sets;
    collect_index_sets(f, sets);
    return std::any_of(sets.begin(), sets.end(), [](const IndexSet* i) { return !i->is_infinite(); });
}

bool is_maximal(const Family& f, const FinSet& s)
{
    if (!member(f, s))
        throw PreconditionError("is_maximal: " + to_string(s) + " is not a member of " + print_family(f));
    const Nat bound = std::max(s.max_or_zero(), tail_threshold(f, s));
    for (Nat m = 1; m <= bound; ++m)
        if (!s.contains(m) && member(f, s.with(m)))
            return false;
    if (bound == std::numeric_limits<Nat>::max())
        return true;
    auto probe = next_effective_index(f, bound + 1);
    return !(probe && member(f, s.with(*probe)));
}

std::vector<FinSet> enumerate(const Family& f, Nat bound)
{
    std::vector<FinSet> out;
    std::vector<Nat> current;
    // Depth-first over increasing extensions; hereditariness prunes whole subtrees.
    auto visit = [&](auto&& self, Nat next) -> void {
        out.emplace_back(current);
        for (Nat m = next; m <= bound; ++m) {
            current.push_back(m);
            if (member(f, FinSet(current)))
                self(self, m + 1);
            current.pop_back();
        }
    };
    if (member(f, FinSet{}))
        visit(visit, 1);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

// ---------------------------------------------------------------------------
// Derivative

Derivative::Derivative(Family f, Nat order)
    : family_(std::move(f)), order_(order), threshold_(tail_bound(family_)), degenerate_(has_finite_index(family_))
{
}

bool Derivative::contains(const FinSet& s) const
{
    std::map<std::pair<FinSet, Nat>, bool> memo;
    return contains(s, order_, memo);
}

bool Derivative::contains(const FinSet& s, Nat level, std::map<std::pair<FinSet, Nat>, bool>& memo) const
{
    if (level == 0)
        return member(family_, s);
    auto key = std::make_pair(s, level);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    bool result = contains(s, level - 1, memo);
    if (result) {
        const Nat floor = std::max({s.max_or_zero(), threshold_, level});
        auto probe = next_effective_index(family_, floor + 1);
        // A finite index set has no cluster points: only finitely many extensions exist.
        result = probe.has_value() && !degenerate_ && contains(s.with(*probe), level - 1, memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

// ---------------------------------------------------------------------------
// Rank

namespace {

bool is_reference_product(const ProductNode& p)
{
    if (p.left.as<SchreierNode>() == nullptr)
        return false;
    if (p.right.as<SchreierNode>() != nullptr)
        return true;
    const auto* c = p.right.as<CubeNode>();
    return c != nullptr && c->threshold == c->size;
}

} // namespace

RankInfo rank_info(const Family& f)
{
    return std::visit(
        overloaded{
            [](const CubeNode& c) { return RankInfo{Ordinal{c.size + 1}, false}; },
            [](const SchreierNode&) { return RankInfo{Ordinal::omega() + Ordinal{1}, false}; },
            [](const ProductNode& p) {
                auto l = rank_info(p.left);
                auto r = rank_info(p.right);
                // Reduced indices multiply: iota(F (x) G) = iota(F) * iota(G).
                Ordinal reduced = l.rank.predecessor() * r.rank.predecessor();
                return RankInfo{reduced + Ordinal{1}, l.rule_derived || r.rule_derived || !is_reference_product(p)};
            },
            [](const RestrictNode& r) {
                if (!r.index.is_infinite())
                    throw DegenerateIndex("rank of a restriction to the finite index set " +
                                          print_index_set(r.index) + " is degenerate");
                return rank_info(r.inner);
            },
        },
        f.node());
}

} // namespace schreier
