#include "schreier/formaltree.hpp"

#include "schreier/errors.hpp"
#include "schreier/family.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace schreier {

namespace {

bool is_maximal_schreier(const FinSet& b) { return !b.empty() && b.size() == b.min(); }

Nat least_power_of_two_above(Nat x)
{
    Nat p = 1;
    while (p <= x) {
        if (p > (Nat{1} << 62))
            throw std::overflow_error("dyadic block beyond 2^63");
        p <<= 1;
    }
    return p;
}

FinSet dyadic_block(Nat p) { return interval(p, 2 * p - 1); }

} // namespace

DeltaChain DeltaChain::prefix(std::size_t j) const
{
    j = std::min(j, depth());
    DeltaChain out;
    out.n = n;
    out.s = s.prefix(j);
    out.deltas.assign(deltas.begin(), deltas.begin() + static_cast<std::ptrdiff_t>(j));
    return out;
}

bool is_admissible(const DeltaChain& c)
{
    if (c.n < 1 || c.deltas.size() != c.s.size() || c.s.size() > c.n)
        return false;
    for (std::size_t i = 0; i < c.deltas.size(); ++i) {
        const auto& d = c.deltas[i];
        if (!is_maximal_schreier(d))
            return false;
        if (i == 0 ? d.min() <= c.n : !precedes(c.deltas[i - 1], d))
            return false;
    }
    return true;
}

ChainGenerator ChainGenerator::seeded(std::uint64_t seed)
{
    ChainGenerator g;
    g.seed_ = seed;
    return g;
}

FinSet ChainGenerator::next_block(Nat n, const FinSet& chain_so_far, const FinSet* previous_block, Nat m) const
{
    const Nat floor = previous_block != nullptr ? previous_block->max() : n;
    if (!seed_)
        return dyadic_block(least_power_of_two_above(std::max(floor, m)));

    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(*seed_), static_cast<std::uint32_t>(*seed_ >> 32),
                                   static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)};
    for (Nat e : chain_so_far)
        key.push_back(static_cast<std::uint32_t>(e));
    std::seed_seq seq(key.begin(), key.end());
    std::mt19937_64 rng(seq);

    // Any maximal Schreier set beyond the floor: min p, plus p-1 further
    // elements scattered over a window somewhat wider than p-1.
    const Nat p = floor + 1 + rng() % 6;
    const Nat slack = rng() % (p / 2 + 1);
    std::vector<Nat> pool(p - 1 + slack);
    std::iota(pool.begin(), pool.end(), p + 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(p - 1);
    pool.push_back(p);
    return FinSet::from_unsorted(std::move(pool));
}

DeltaChain build_chain(Nat n, const FinSet& s, const ChainGenerator& gen)
{
    if (n < 1)
        throw PreconditionError("chain parameter n must be >= 1");
    if (s.size() > n)
        throw PreconditionError("chain set " + to_string(s) + " has more than n = " + std::to_string(n) +
                                " elements");
    DeltaChain c;
    c.n = n;
    c.s = s;
    for (std::size_t i = 0; i < s.size(); ++i)
        c.deltas.push_back(gen.next_block(n, s.prefix(i), i == 0 ? nullptr : &c.deltas.back(), s[i]));
    return c;
}

FormalVector::FormalVector(std::vector<FinSet> blocks) : blocks_(std::move(blocks))
{
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].empty())
            throw PreconditionError("formal vector blocks must be nonempty");
        if (i > 0 && !precedes(blocks_[i - 1], blocks_[i]))
            throw PreconditionError("formal vector blocks must be increasing");
    }
}

BigInt FormalVector::index_count() const
{
    BigInt count = 1;
    for (const auto& b : blocks_)
        count *= b.size();
    return count;
}

Rational FormalVector::weight() const { return Rational(BigInt(1), index_count()); }

std::map<FinSet, Rational> FormalVector::explicit_form(std::size_t limit) const
{
    if (index_count() > limit)
        throw std::length_error("formal vector has more than " + std::to_string(limit) + " indices");
    std::map<FinSet, Rational> out;
    const Rational w = weight();
    for_each_index([&](const FinSet& u) { out.emplace(u, w); });
    return out;
}

Functional::Functional(FinSet t) : t_(std::move(t))
{
    if (!t_.empty())
        decomposition_ = decompose(t_);
}

FormalVector y_vector(const DeltaChain& c) { return FormalVector(c.deltas); }

Functional y_functional(const DeltaChain& c)
{
    Functional f(c.joined());
    if (c.depth() == 0)
        return f;
    if (!member(family_g(c.n), f.t()))
        throw std::logic_error("chain union " + to_string(f.t()) + " is not in G_" + std::to_string(c.n));
    if (f.decomposition().blocks != c.deltas)
        throw std::logic_error("decomposition of " + to_string(f.t()) + " does not recover the chain blocks");
    return f;
}

Rational evaluate_enumerated(const Functional& f, const FormalVector& v)
{
    BigInt hits = 0;
    v.for_each_index([&](const FinSet& u) { hits += f.at(u); });
    return Rational(hits, v.index_count());
}

Rational evaluate_factorized(const Functional& f, const FormalVector& v)
{
    if (f.is_constant())
        return Rational(1);
    const auto& blocks = v.blocks();
    const auto& t = f.decomposition().blocks;
    // Index u has its i-th smallest element drawn from block i, independently,
    // so E[(-1)^<u,t>] factors over the aligned levels.
    Rational signed_mean = 1;
    for (std::size_t i = 0; i < std::min(blocks.size(), t.size()); ++i) {
        const auto hits = static_cast<std::size_t>(std::count_if(
            blocks[i].begin(), blocks[i].end(), [&](Nat r) { return t[i].contains(r); }));
        const Rational q(BigInt(hits), BigInt(blocks[i].size()));
        signed_mean *= 1 - 2 * q;
    }
    return (signed_mean + 1) / 2;
}

bool CancellationResult::holds() const { return value == Rational(k() % 2 == 0 ? 1 : -1); }

CancellationResult cancellation_check(const DeltaChain& chain, Nat m, const ChainGenerator& gen)
{
    if (m <= chain.s.max_or_zero())
        throw PreconditionError("extension point m = " + std::to_string(m) + " must exceed max s");
    return cancellation_check(chain, m,
                              gen.next_block(chain.n, chain.s, chain.depth() == 0 ? nullptr : &chain.deltas.back(), m));
}

CancellationResult cancellation_check(const DeltaChain& chain, Nat m, const FinSet& extension_block)
{
    if (!is_admissible(chain))
        throw PreconditionError("chain for " + to_string(chain.s) + " is not admissible");
    if (chain.s.size() >= chain.n)
        throw PreconditionError("cancellation needs #s < n");
    if (m <= chain.s.max_or_zero())
        throw PreconditionError("extension point m = " + std::to_string(m) + " must exceed max s");

    CancellationResult r;
    r.chain = chain;
    r.m = m;
    r.extended = chain;
    r.extended.s = chain.s.with(m);
    r.extended.deltas.push_back(extension_block);
    if (!is_admissible(r.extended))
        throw PreconditionError("extension block " + to_string(extension_block) + " is not admissible");

    r.t0 = chain.joined();
    r.t1 = r.extended.joined();
    r.l0 = y_vector(chain).index_count();
    r.l1 = extension_block.size();
    r.l2 = r.l0 * r.l1;

    const Functional f = y_functional(r.extended);
    r.first = evaluate(f, y_vector(chain));
    r.second = evaluate(f, y_vector(r.extended));
    r.value = r.first - r.second;
    return r;
}

DeltaTree::DeltaTree(Nat n, Nat bound, Nat max_block) : n_(n), bound_(bound)
{
    if (n < 1)
        throw PreconditionError("tree parameter n must be >= 1");
    // Breadth-first, siblings in increasing m: each child block starts past the
    // parent's block and past the previous sibling's.
    std::vector<FinSet> frontier{FinSet{}};
    for (Nat level = 0; level < n; ++level) {
        std::vector<FinSet> next;
        for (const auto& s : frontier) {
            Nat floor = s.empty() ? n : blocks_.at(s).max();
            for (Nat m = s.max_or_zero() + 1; m <= bound; ++m) {
                const Nat p = least_power_of_two_above(floor);
                if (p > max_block)
                    throw std::length_error("delta tree block of size " + std::to_string(p) + " exceeds the cap");
                auto child = s.with(m);
                blocks_.emplace(child, dyadic_block(p));
                floor = 2 * p - 1;
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
}

const FinSet& DeltaTree::delta(const FinSet& s) const
{
    static const FinSet empty;
    if (s.empty())
        return empty;
    auto it = blocks_.find(s);
    if (it == blocks_.end())
        throw PreconditionError(to_string(s) + " is outside the materialized tree");
    return it->second;
}

DeltaChain DeltaTree::chain(const FinSet& s) const
{
    DeltaChain c;
    c.n = n_;
    c.s = s;
    for (std::size_t i = 1; i <= s.size(); ++i)
        c.deltas.push_back(delta(s.prefix(i)));
    return c;
}

} // namespace schreier
