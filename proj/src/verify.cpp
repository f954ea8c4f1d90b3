#include "schreier/verify.hpp"

#include "schreier/compacta.hpp"
#include "schreier/errors.hpp"
#include "schreier/family.hpp"
#include "schreier/formaltree.hpp"
#include "schreier/oracle.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/theta.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace schreier::verify {

namespace {

constexpr std::size_t kKeptFailures = 20;

std::string str(const FinSet& s) { return to_string(s); }
std::string str(const Rational& r) { return r.str(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(int v) { return std::to_string(v); }

std::string str(const std::vector<FinSet>& blocks)
{
    std::string out = "[";
    for (std::size_t i = 0; i < blocks.size(); ++i)
        out += (i > 0 ? "," : "") + to_string(blocks[i]);
    return out + "]";
}

std::vector<Ordinal> ordinal_corpus()
{
    // All CNF ordinals with exponents in {2, 1, 0}, coefficients <= 3, <= 3 terms.
    std::vector<Ordinal> out;
    for (int c2 = 0; c2 <= 3; ++c2)
        for (int c1 = 0; c1 <= 3; ++c1)
            for (int c0 = 0; c0 <= 3; ++c0)
                out.push_back(Ordinal::from_terms({{Ordinal{2}, static_cast<std::uint64_t>(c2)},
                                                   {Ordinal{1}, static_cast<std::uint64_t>(c1)},
                                                   {Ordinal{0}, static_cast<std::uint64_t>(c0)}}));
    return out;
}

Ordinal random_ordinal(std::mt19937_64& rng, int depth)
{
    const int terms = static_cast<int>(rng() % 4);
    std::vector<OrdinalTerm> raw;
    for (int i = 0; i < terms; ++i) {
        Ordinal exponent = depth > 0 && rng() % 3 == 0 ? random_ordinal(rng, depth - 1) : Ordinal{rng() % 4};
        raw.push_back({exponent, 1 + rng() % 5});
    }
    return Ordinal::from_terms(std::move(raw));
}

struct NamedFamily {
    std::string name;
    Family family;
};

std::vector<NamedFamily> family_corpus()
{
    std::vector<Family> base;
    for (Nat n = 1; n <= 4; ++n)
        base.push_back(family_f(n));
    for (Nat n = 1; n <= 4; ++n)
        base.push_back(family_g(n));
    base.push_back(Family::schreier());
    base.push_back(Family::s2());
    std::vector<NamedFamily> out;
    for (const auto& f : base)
        out.push_back({print_family(f), f});
    for (const auto& f : base) {
        auto r = Family::restrict(f, IndexSet::powers(2));
        out.push_back({print_family(r), r});
    }
    return out;
}

std::vector<FinSet> schreier_grid(Nat bound) { return oracle::powerset_filter(bound, oracle::schreier); }
std::vector<FinSet> s2_grid(Nat bound) { return oracle::powerset_filter(bound, oracle::s2_member); }

std::vector<ChainGenerator> generators(std::size_t seeds)
{
    std::vector<ChainGenerator> out{ChainGenerator::canonical()};
    for (std::size_t i = 1; i <= seeds; ++i)
        out.push_back(ChainGenerator::seeded(i));
    return out;
}

std::string gen_name(const ChainGenerator& g) { return g.is_canonical() ? "canonical" : "seed " + std::to_string(*g.seed()); }

Rational parity(std::size_t k) { return Rational(k % 2 == 0 ? 1 : 0); }

} // namespace

void SuiteResult::fail(std::string inputs, std::string expected, std::string actual)
{
    ++cases;
    ++failure_count;
    if (failures.size() < kKeptFailures)
        failures.push_back({std::move(inputs), std::move(expected), std::move(actual)});
}

void SuiteResult::check(bool ok, const std::function<CaseFailure()>& describe)
{
    if (ok) {
        pass();
        return;
    }
    auto f = describe();
    fail(std::move(f.inputs), std::move(f.expected), std::move(f.actual));
}

std::string report_line(const SuiteResult& r)
{
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
    nlohmann::ordered_json j = {
        {"suite", r.name},
        {"cases", r.cases},
        {"failure_count", r.failure_count},
        {"passed", r.passed()},
        {"failures", failures},
    };
    return j.dump();
}

// ---------------------------------------------------------------------------
// ordinal

SuiteResult ordinal_associativity()
{
    SuiteResult r;
    r.name = "ordinal.associativity";
    const auto corpus = ordinal_corpus();
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (const auto& c : corpus) {
                r.check((a + b) + c == a + (b + c), [&] {
                    return CaseFailure{ord_print(a) + " + " + ord_print(b) + " + " + ord_print(c),
                                       ord_print(a + (b + c)), ord_print((a + b) + c)};
                });
                r.check((a * b) * c == a * (b * c), [&] {
                    return CaseFailure{ord_print(a) + " * " + ord_print(b) + " * " + ord_print(c),
                                       ord_print(a * (b * c)), ord_print((a * b) * c)};
                });
            }
    return r;
}

SuiteResult ordinal_distributivity()
{
    SuiteResult r;
    r.name = "ordinal.distributivity";
    const auto corpus = ordinal_corpus();
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (const auto& c : corpus)
                r.check(a * (b + c) == a * b + a * c, [&] {
                    return CaseFailure{ord_print(a) + " * (" + ord_print(b) + " + " + ord_print(c) + ")",
                                       ord_print(a * b + a * c), ord_print(a * (b + c))};
                });
    return r;
}

SuiteResult ordinal_monotonicity()
{
    SuiteResult r;
    r.name = "ordinal.monotonicity";
    const auto corpus = ordinal_corpus();
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            for (const auto& c : corpus) {
                if (b < c)
                    r.check(a + b < a + c, [&] {
                        return CaseFailure{ord_print(a) + " + (" + ord_print(b) + " < " + ord_print(c) + ")",
                                           "strictly increasing", ord_print(a + b) + " vs " + ord_print(a + c)};
                    });
                // Transitivity and trichotomy of the order.
                if (a < b && b < c)
                    r.check(a < c, [&] {
                        return CaseFailure{ord_print(a) + " < " + ord_print(b) + " < " + ord_print(c), "a < c",
                                           "not a < c"};
                    });
                const int relations = (a < b) + (a == b) + (a > b);
                r.check(relations == 1, [&] {
                    return CaseFailure{ord_print(a) + " ? " + ord_print(b), "exactly one relation",
                                       std::to_string(relations)};
                });
            }
    return r;
}

SuiteResult ordinal_roundtrip(std::size_t count, std::uint64_t seed)
{
    SuiteResult r;
    r.name = "ordinal.roundtrip";
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const Ordinal x = random_ordinal(rng, 2);
        const std::string text = ord_print(x);
        Ordinal back;
        try {
            back = ord_parse(text);
        } catch (const ParseError& e) {
            r.fail(text, "parses", e.what());
            continue;
        }
        r.check(back == x && ord_print(back) == text, [&] { return CaseFailure{text, text, ord_print(back)}; });
    }
    return r;
}

// ---------------------------------------------------------------------------
// finset

SuiteResult finset_precedes_transitivity(Nat universe)
{
    SuiteResult r;
    r.name = "finset.precedes_transitivity";
    auto sets = oracle::powerset_filter(universe, [](const FinSet& s) { return !s.empty(); });
    for (const auto& s : sets)
        for (const auto& t : sets) {
            if (!precedes(s, t))
                continue;
            for (const auto& u : sets)
                if (precedes(t, u))
                    r.check(precedes(s, u),
                            [&] { return CaseFailure{str(s) + " < " + str(t) + " < " + str(u), "true", "false"}; });
        }
    return r;
}

SuiteResult finset_interval(Nat bound)
{
    SuiteResult r;
    r.name = "finset.interval";
    for (Nat a = 1; a <= bound; ++a)
        for (Nat b = a; b <= bound; ++b) {
            const auto s = interval(a, b);
            r.check(s.min() == a && s.max() == b && s.size() == b - a + 1, [&] {
                return CaseFailure{"[" + std::to_string(a) + "," + std::to_string(b) + "]", "min a, max b, size b-a+1",
                                   str(s)};
            });
        }
    return r;
}

// ---------------------------------------------------------------------------
// family

SuiteResult family_hereditary(Nat bound)
{
    SuiteResult r;
    r.name = "family.hereditary";
    for (const auto& [name, f] : family_corpus())
        for (const auto& s : enumerate(f, bound))
            for (const auto& sub : oracle::subsets_of(s))
                r.check(member(f, sub), [&] {
                    return CaseFailure{name + " " + str(s) + " ⊇ " + str(sub), "member", "not a member"};
                });
    return r;
}

SuiteResult family_tail_uniformity(Nat set_bound, Nat probe_bound)
{
    SuiteResult r;
    r.name = "family.tail_uniformity";
    const auto all_sets = oracle::powerset_filter(set_bound, [](const FinSet&) { return true; });
    for (const auto& [name, f] : family_corpus())
        for (const auto& s : all_sets) {
            const Nat floor = std::max(s.max_or_zero(), tail_threshold(f, s));
            std::optional<bool> first;
            Nat first_m = 0;
            for (Nat m = floor + 1; m <= probe_bound; ++m) {
                if (!in_effective_index(f, m))
                    continue;
                const bool v = extension_admissible(f, s, m);
                if (!first) {
                    first = v;
                    first_m = m;
                    continue;
                }
                r.check(v == *first, [&] {
                    return CaseFailure{name + " " + str(s) + " + " + std::to_string(m),
                                       str(*first) + " (as for " + std::to_string(first_m) + ")", str(v)};
                });
            }
        }
    return r;
}

SuiteResult family_enumerate_oracle(Nat bound)
{
    SuiteResult r;
    r.name = "family.enumerate_oracle";
    for (const auto& [name, f] : family_corpus()) {
        const auto full = enumerate(f, bound);
        const auto naive = oracle::powerset_filter(bound, [&](const FinSet& s) { return member(f, s); });
        r.check(full == naive, [&] {
            return CaseFailure{name + " on [1.." + std::to_string(bound) + "]", std::to_string(naive.size()) + " sets",
                               std::to_string(full.size()) + " sets"};
        });
        std::size_t previous = 0;
        for (Nat m = 1; m <= bound; ++m) {
            const auto part = enumerate(f, m);
            std::vector<FinSet> expected;
            std::copy_if(full.begin(), full.end(), std::back_inserter(expected),
                         [&](const FinSet& s) { return s.max_or_zero() <= m; });
            r.check(part == expected && part.size() >= previous, [&] {
                return CaseFailure{name + " on [1.." + std::to_string(m) + "]",
                                   std::to_string(expected.size()) + " sets, monotone",
                                   std::to_string(part.size()) + " sets"};
            });
            previous = part.size();
        }
    }
    // The two base families against predicates written out directly.
    r.check(enumerate(Family::schreier(), bound) == schreier_grid(bound),
            [&] { return CaseFailure{"schreier", "direct #s <= min s filter", "differs"}; });
    r.check(enumerate(Family::s2(), bound) == s2_grid(bound),
            [&] { return CaseFailure{"S2", "direct composition filter", "differs"}; });
    return r;
}

SuiteResult family_product_paths(Nat bound)
{
    SuiteResult r;
    r.name = "family.product_paths";
    const auto all_sets = oracle::powerset_filter(bound, [](const FinSet&) { return true; });
    for (const auto& [name, f] : family_corpus()) {
        const ProductNode* p = f.as<ProductNode>();
        if (p == nullptr)
            continue;
        for (const auto& s : all_sets) {
            const bool greedy = product_member_greedy(p->left, p->right, s);
            const bool full = product_member_exhaustive(p->left, p->right, s);
            r.check(greedy == full,
                    [&] { return CaseFailure{name + " " + str(s), "exhaustive " + str(full), "greedy " + str(greedy)}; });
        }
    }
    // A right factor without a fast path goes through the search alone.
    const auto nested = Family::product(Family::schreier(), Family::restrict(Family::schreier(), IndexSet::arithmetic(1, 2)));
    for (const auto& s : all_sets) {
        bool expected = s.empty();
        for (const auto& blocks : oracle::compositions(s)) {
            std::vector<Nat> mins;
            bool ok = true;
            for (const auto& b : blocks) {
                ok = ok && oracle::schreier(b);
                mins.push_back(b.min());
            }
            ok = ok && oracle::schreier(FinSet(mins)) && std::all_of(mins.begin(), mins.end(), [](Nat m) { return m % 2 == 1; });
            expected = expected || ok;
        }
        r.check(member(nested, s) == expected,
                [&] { return CaseFailure{print_family(nested) + " " + str(s), str(expected), str(!expected)}; });
    }
    return r;
}

SuiteResult family_rank_consistency(Nat max_n, Nat bound)
{
    SuiteResult r;
    r.name = "family.rank_consistency";
    for (Nat n = 1; n <= max_n; ++n) {
        const auto f = family_f(n);
        const auto sets = enumerate(f, bound);
        const Nat steps = rank_symbolic(f).finite_value();
        for (Nat j = 0; j <= steps; ++j) {
            const auto d = iterate(f, j);
            const auto survivors = std::count_if(sets.begin(), sets.end(), [&](const FinSet& s) { return d.contains(s); });
            const bool expect_empty = j == steps;
            r.check((survivors == 0) == expect_empty, [&] {
                return CaseFailure{print_family(f) + " derivative " + std::to_string(j),
                                   expect_empty ? "empty" : "nonempty", std::to_string(survivors) + " survivors"};
            });
        }
    }
    // One derivative of cube(a, k) is cube(a, k - 1).
    for (Nat a = 1; a <= max_n; ++a)
        for (Nat k = 1; k <= max_n; ++k) {
            const auto d = derivative(Family::cube(a, k));
            const auto smaller = Family::cube(a, k - 1);
            for (const auto& s : enumerate(Family::cube(a, k), bound))
                r.check(d.contains(s) == member(smaller, s), [&] {
                    return CaseFailure{"cube(" + std::to_string(a) + "," + std::to_string(k) + ")' at " + str(s),
                                       str(member(smaller, s)), str(d.contains(s))};
                });
        }
    return r;
}

SuiteResult family_union_cover(Nat max_n, Nat bound)
{
    SuiteResult r;
    r.name = "family.union_cover";
    const auto schreier_sets = schreier_grid(bound);
    const auto s2_sets = s2_grid(bound);
    std::set<FinSet> f_union;
    std::set<FinSet> g_union;
    for (Nat n = 1; n <= max_n; ++n) {
        for (const auto& s : enumerate(family_f(n), bound)) {
            r.check(oracle::schreier(s), [&] { return CaseFailure{"F_" + std::to_string(n) + " " + str(s), "in S", "not in S"}; });
            f_union.insert(s);
        }
        for (const auto& t : enumerate(family_g(n), bound)) {
            r.check(oracle::s2_member(t), [&] { return CaseFailure{"G_" + std::to_string(n) + " " + str(t), "in S2", "not in S2"}; });
            g_union.insert(t);
        }
    }
    r.check(f_union == std::set<FinSet>(schreier_sets.begin(), schreier_sets.end()), [&] {
        return CaseFailure{"union of F_n", std::to_string(schreier_sets.size()) + " sets", std::to_string(f_union.size())};
    });
    r.check(g_union == std::set<FinSet>(s2_sets.begin(), s2_sets.end()), [&] {
        return CaseFailure{"union of G_n", std::to_string(s2_sets.size()) + " sets", std::to_string(g_union.size())};
    });
    return r;
}

SuiteResult family_isolated_points(Nat bound)
{
    SuiteResult r;
    r.name = "family.isolated_points";
    const auto f = Family::schreier();
    const auto d = derivative(f);
    for (const auto& s : enumerate(f, bound)) {
        const bool isolated = !d.contains(s);
        const bool barrier = !s.empty() && s.size() == s.min();
        const bool brute = oracle::isolated_in_schreier(s);
        r.check(isolated == barrier && barrier == brute, [&] {
            return CaseFailure{str(s), "isolated " + str(barrier) + " (brute " + str(brute) + ")", str(isolated)};
        });
    }
    return r;
}

SuiteResult family_rank_table(Nat max_rank_n, Nat max_iterate_n, Nat bound)
{
    SuiteResult r;
    r.name = "family.rank_table";
    auto expect = [&](const Family& f, const std::string& golden, bool derived) {
        const auto info = rank_info(f);
        r.check(ord_print(info.rank) == golden && info.rule_derived == derived, [&] {
            return CaseFailure{print_family(f), golden, ord_print(info.rank) + (info.rule_derived ? " (rule-derived)" : "")};
        });
    };
    static const char* const cube_goldens[] = {"2", "3", "4", "5", "6", "7", "8", "9", "10", "11"};
    static const char* const product_goldens[] = {"w+1",   "w*2+1", "w*3+1", "w*4+1", "w*5+1",
                                                  "w*6+1", "w*7+1", "w*8+1", "w*9+1", "w*10+1"};
    for (Nat n = 1; n <= std::min<Nat>(max_rank_n, 10); ++n) {
        expect(family_f(n), cube_goldens[n - 1], false);
        expect(family_g(n), product_goldens[n - 1], false);
        expect(Family::restrict(family_g(n), IndexSet::powers(2)), product_goldens[n - 1], false);
    }
    expect(Family::schreier(), "w+1", false);
    expect(Family::s2(), "w^2+1", false);
    expect(Family::restrict(Family::s2(), IndexSet::powers(2)), "w^2+1", false);

    for (Nat n = 1; n <= max_iterate_n; ++n) {
        const auto f = family_f(n);
        const auto sets = enumerate(f, bound);
        auto empty_after = [&](Nat j) {
            const auto d = iterate(f, j);
            return std::none_of(sets.begin(), sets.end(), [&](const FinSet& s) { return d.contains(s); });
        };
        r.check(!empty_after(n) && empty_after(n + 1), [&] {
            return CaseFailure{print_family(f), "empty after exactly " + std::to_string(n + 1) + " derivatives",
                               "empty after " + std::to_string(n) + ": " + str(empty_after(n))};
        });
    }
    return r;
}

// ---------------------------------------------------------------------------
// theta

SuiteResult theta_uniqueness(Nat bound)
{
    SuiteResult r;
    r.name = "theta.uniqueness";
    for (const auto& t : s2_grid(bound)) {
        if (t.empty())
            continue;
        std::vector<std::vector<FinSet>> valid;
        for (auto& blocks : oracle::compositions(t))
            if (oracle::canonical_conditions(blocks))
                valid.push_back(std::move(blocks));
        const auto greedy = decompose(t);
        r.check(valid.size() == 1 && valid.front() == greedy.blocks, [&] {
            return CaseFailure{str(t), "one valid composition equal to " + str(greedy.blocks),
                               std::to_string(valid.size()) + " valid" + (valid.empty() ? "" : ", first " + str(valid.front()))};
        });
    }
    return r;
}

SuiteResult theta_local_constancy(Nat grid, Nat pad)
{
    SuiteResult r;
    r.name = "theta.local_constancy";
    const auto ss = schreier_grid(grid);
    const auto ts = s2_grid(grid);
    std::vector<Decomposition> td(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j)
        if (!ts[j].empty())
            td[j] = decompose(ts[j]);
    auto th = [&](const FinSet& s, std::size_t j) { return ts[j].empty() ? 1 : theta(s, td[j]); };

    // t fixed: theta(., t) factors through s ∩ [1..max t].
    for (std::size_t j = 0; j < ts.size(); ++j) {
        const Nat radius = ts[j].max_or_zero();
        std::map<FinSet, int> seen;
        for (const auto& s : ss) {
            const int v = th(s, j);
            auto [it, fresh] = seen.emplace(s.truncated(radius), v);
            r.check(fresh || it->second == v, [&] {
                return CaseFailure{"s=" + str(s) + " t=" + str(ts[j]), str(it->second), str(v)};
            });
            for (Nat e = std::max(s.max_or_zero(), radius) + 1; e <= pad; ++e) {
                const FinSet padded = s.with(e);
                r.check(th(padded, j) == v, [&] {
                    return CaseFailure{"s=" + str(padded) + " t=" + str(ts[j]), str(v), str(th(padded, j))};
                });
            }
        }
    }

    // s fixed: theta(s, .) factors through t ∩ [1..max s], including padded t in S2.
    std::vector<std::vector<std::pair<FinSet, Decomposition>>> padded_ts(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j)
        for (Nat e = ts[j].max_or_zero() + 1; e <= pad; ++e) {
            FinSet t2 = ts[j].with(e);
            if (member(Family::s2(), t2))
                padded_ts[j].emplace_back(t2, decompose(t2));
        }
    for (const auto& s : ss) {
        const Nat radius = s.max_or_zero();
        std::map<FinSet, int> seen;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            const int v = th(s, j);
            auto [it, fresh] = seen.emplace(ts[j].truncated(radius), v);
            r.check(fresh || it->second == v, [&] {
                return CaseFailure{"s=" + str(s) + " t=" + str(ts[j]), str(it->second), str(v)};
            });
            for (const auto& [t2, d2] : padded_ts[j]) {
                if (t2.max() <= radius)
                    continue;
                r.check(theta(s, d2) == v, [&] {
                    return CaseFailure{"s=" + str(s) + " t=" + str(t2), str(v), str(theta(s, d2))};
                });
            }
        }
    }
    return r;
}

SuiteResult theta_formula(Nat grid)
{
    SuiteResult r;
    r.name = "theta.formula";
    const auto ss = schreier_grid(grid);
    for (const auto& t : s2_grid(grid)) {
        if (t.empty())
            continue;
        const auto d = decompose(t);
        for (const auto& s : ss) {
            const int a = theta(s, d);
            const int b = theta_via_sign(s, d);
            const int c = static_cast<int>((oracle::inner(s, d.blocks) + 1) % 2);
            r.check(a == b && b == c, [&] {
                return CaseFailure{"s=" + str(s) + " t=" + str(t), "parity " + str(c), str(a) + " / sign " + str(b)};
            });
        }
    }
    return r;
}

SuiteResult theta_decompose_member(Nat bound)
{
    SuiteResult r;
    r.name = "theta.decompose_member";
    const auto s2 = Family::s2();
    for (const auto& t : oracle::powerset_filter(bound, [](const FinSet& t) { return !t.empty(); })) {
        bool decomposed = true;
        try {
            const auto d = decompose(t);
            r.check(oracle::canonical_conditions(d.blocks) && d.joined() == t,
                    [&] { return CaseFailure{str(t), "canonical blocks", str(d.blocks)}; });
        } catch (const NotInS2&) {
            decomposed = false;
        }
        const bool fam = member(s2, t);
        const bool brute = oracle::s2_member(t);
        r.check(decomposed == fam && fam == brute, [&] {
            return CaseFailure{str(t), "S2 membership " + str(brute),
                               "decompose " + str(decomposed) + ", member " + str(fam)};
        });
    }
    return r;
}

SuiteResult theta_gn_subfamily(Nat max_n, Nat bound)
{
    SuiteResult r;
    r.name = "theta.gn_subfamily";
    for (Nat n = 1; n <= max_n; ++n)
        for (const auto& t : enumerate(family_g(n), bound)) {
            if (t.empty())
                continue;
            bool ok = true;
            try {
                ok = oracle::canonical_conditions(decompose(t).blocks);
            } catch (const NotInS2&) {
                ok = false;
            }
            r.check(ok, [&] { return CaseFailure{"G_" + std::to_string(n) + " " + str(t), "decomposes", "rejected"}; });
        }
    return r;
}

// ---------------------------------------------------------------------------
// compacta

namespace {

std::vector<FinSet> powers_schreier_sets(Nat max_exponent, std::size_t max_size)
{
    std::vector<Nat> powers;
    for (Nat i = 0; i <= max_exponent; ++i)
        powers.push_back(Nat{1} << i);
    std::vector<FinSet> out;
    for (auto& s : oracle::subsets_of(FinSet(powers)))
        if (s.size() <= max_size && oracle::schreier(s))
            out.push_back(std::move(s));
    return out;
}

} // namespace

SuiteResult compacta_powers_witness(Nat max_exponent, std::size_t max_size)
{
    SuiteResult r;
    r.name = "compacta.powers_witness";
    const auto sets = powers_schreier_sets(max_exponent, max_size);
    const auto s2 = Family::s2();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const auto& s0 = sets[i];
            const auto& s1 = sets[j];
            FinSet t;
            try {
                t = powers_witness(s0, s1);
            } catch (const std::exception& e) {
                r.fail(str(s0) + " vs " + str(s1), "a witness", e.what());
                continue;
            }
            const bool in_s2 = member(s2, t);
            const int a = in_s2 ? theta(s0, t) : -1;
            const int b = in_s2 ? theta(s1, t) : -1;
            r.check(in_s2 && a != b, [&] {
                return CaseFailure{str(s0) + " vs " + str(s1), "t in S2 separating",
                                   "t=" + str(t) + " in S2 " + str(in_s2) + ", theta " + str(a) + "/" + str(b)};
            });
        }
    return r;
}

SuiteResult compacta_powers_injectivity(Nat max_exponent, std::size_t max_size)
{
    SuiteResult r;
    r.name = "compacta.powers_injectivity";
    const auto rows = powers_schreier_sets(max_exponent, max_size);
    std::set<FinSet> cols;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            cols.insert(powers_witness(rows[i], rows[j]));
    Nat col_bound = 0;
    for (const auto& c : cols)
        col_bound = std::max(col_bound, c.max_or_zero());
    const auto m = build_matrix(MatrixMode::K, rows, std::vector<FinSet>(cols.begin(), cols.end()), col_bound);
    for (const auto& cls : injectivity_report(m).classes)
        r.check(cls.rows.size() == 1, [&] {
            std::vector<FinSet> members;
            for (auto i : cls.rows)
                members.push_back(m.row_index[i]);
            return CaseFailure{"rows " + str(members), "distinct rows", "identical rows"};
        });
    return r;
}

SuiteResult compacta_matrix_determinism(Nat row_bound, Nat col_bound)
{
    SuiteResult r;
    r.name = "compacta.matrix_determinism";
    for (auto mode : {MatrixMode::K, MatrixMode::L})
        for (const auto& alpha : {Alpha::finite(2), Alpha::omega()}) {
            const auto reference = matrix_to_csv(build_matrix(mode, alpha, IndexSet::all(), row_bound, col_bound, 1));
            for (std::size_t workers : {1, 4, 4}) {
                const auto again = matrix_to_csv(build_matrix(mode, alpha, IndexSet::all(), row_bound, col_bound, workers));
                r.check(again == reference, [&] {
                    return CaseFailure{std::string(mode == MatrixMode::K ? "K" : "L") + " alpha=" + alpha.print() +
                                           " workers=" + std::to_string(workers),
                                       "identical CSV bytes", "differs"};
                });
            }
        }
    return r;
}

SuiteResult compacta_theta1_separation(Nat max_t, Nat bound)
{
    SuiteResult r;
    r.name = "compacta.theta1_separation";
    const auto ts = enumerate(Family::s2(), max_t);
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            const auto found = distinguishing_search(ts[i], ts[j], bound);
            r.check(found.has_value(), [&] {
                return CaseFailure{str(ts[i]) + " vs " + str(ts[j]),
                                   "separating s with max <= " + std::to_string(bound), "none found (finding)"};
            });
        }
    return r;
}

// ---------------------------------------------------------------------------
// formal tree

SuiteResult tree_self_evaluation(Nat max_n, Nat set_bound, std::size_t seeds)
{
    SuiteResult r;
    r.name = "tree.self_evaluation";
    const auto gens = generators(seeds);
    for (Nat n = 1; n <= max_n; ++n)
        for (const auto& s : oracle::powerset_filter(set_bound, [&](const FinSet& s) { return s.size() <= n; }))
            for (const auto& g : gens) {
                const auto chain = build_chain(n, s, g);
                for (std::size_t j = 0; j <= chain.depth(); ++j) {
                    const auto prefix = chain.prefix(j);
                    const Rational v = evaluate(y_functional(prefix), y_vector(prefix));
                    r.check(v == parity(j), [&] {
                        return CaseFailure{"n=" + std::to_string(n) + " s=" + str(s) + " level " + std::to_string(j) +
                                               " " + gen_name(g),
                                           str(parity(j)), str(v)};
                    });
                }
            }
    return r;
}

SuiteResult tree_cancellation(Nat max_n, Nat set_bound, Nat m_bound, std::size_t seeds)
{
    SuiteResult r;
    r.name = "tree.cancellation";
    const auto gens = generators(seeds);
    // Base identity y*_∅(y_∅) = 1.
    {
        const DeltaChain empty;
        const Rational v = evaluate(y_functional(empty), y_vector(empty));
        r.check(v == 1, [&] { return CaseFailure{"y*_∅(y_∅)", "1", str(v)}; });
    }
    for (Nat n = 1; n <= max_n; ++n)
        for (const auto& s : oracle::powerset_filter(set_bound, [&](const FinSet& s) { return s.size() < n; }))
            for (const auto& g : gens) {
                const auto chain = build_chain(n, s, g);
                for (Nat m = s.max_or_zero() + 1; m <= m_bound; ++m) {
                    const auto res = cancellation_check(chain, m, g);
                    r.check(res.holds(), [&] {
                        return CaseFailure{"n=" + std::to_string(n) + " s=" + str(s) + " m=" + std::to_string(m) + " " +
                                               gen_name(g),
                                           s.size() % 2 == 0 ? "1" : "-1", str(res.value)};
                    });
                }
            }
    return r;
}

SuiteResult tree_parity_table(Nat max_n, Nat set_bound, std::size_t seeds, std::uint64_t max_product)
{
    SuiteResult r;
    r.name = "tree.parity_table";
    const auto gens = generators(seeds);
    for (Nat n = 1; n <= max_n; ++n)
        for (const auto& s : oracle::powerset_filter(set_bound, [&](const FinSet& s) { return s.size() < n; }))
            for (const auto& g : gens) {
                const auto chain = build_chain(n, s, g);
                for (Nat m = s.max_or_zero() + 1; m <= set_bound + 1; ++m) {
                    const auto res = cancellation_check(chain, m, g);
                    if (res.l2 > max_product)
                        continue;
                    const std::size_t k = chain.depth();
                    const Functional f1(res.t1);
                    const Functional f0(res.t0);
                    const std::string where = "n=" + std::to_string(n) + " s=" + str(s) + " m=" + std::to_string(m) +
                                              " " + gen_name(g);
                    y_vector(chain).for_each_index([&](const FinSet& v) {
                        const int a = f1.at(v);
                        const int b = f0.at(v);
                        r.check(a == b && a == (k % 2 == 0 ? 1 : 0), [&] {
                            return CaseFailure{where + " v=" + str(v), str(k % 2 == 0 ? 1 : 0),
                                               "theta(v,t1)=" + str(a) + " theta(v,t0)=" + str(b)};
                        });
                    });
                    y_vector(res.extended).for_each_index([&](const FinSet& w) {
                        const int a = f1.at(w);
                        r.check(a == (k % 2 == 1 ? 1 : 0),
                                [&] { return CaseFailure{where + " w=" + str(w), str(k % 2 == 1 ? 1 : 0), str(a)}; });
                    });
                }
            }
    return r;
}

SuiteResult tree_evaluator_equivalence(std::size_t cases, std::uint64_t max_product, std::uint64_t seed)
{
    SuiteResult r;
    r.name = "tree.evaluator_equivalence";
    std::mt19937_64 rng(seed);
    const auto s2 = Family::s2();
    std::size_t done = 0;
    while (done < cases) {
        const Nat n = 1 + rng() % 4;
        const std::size_t k = rng() % (n + 1);
        std::vector<Nat> elems;
        for (Nat m = 1; elems.size() < k; ++m)
            if (rng() % 3 == 0)
                elems.push_back(m);
        const auto chain = build_chain(n, FinSet(elems), ChainGenerator::seeded(rng()));
        const auto v = y_vector(chain);
        if (v.index_count() > max_product)
            continue;
        // A random t in S2 overlapping the blocks: a random subset of the
        // span, cut back to its longest prefix that stays in S2.
        const Nat lo = 1 + rng() % (chain.depth() == 0 ? 8 : chain.deltas.front().min());
        const Nat hi = chain.depth() == 0 ? lo + 8 : chain.deltas.back().max() + 4;
        std::vector<Nat> pool;
        for (Nat x = lo; x <= hi; ++x)
            if (rng() % 2 == 0)
                pool.push_back(x);
        FinSet t(pool);
        while (!member(s2, t))
            t = t.prefix(t.size() - 1);
        const Functional f(t);
        const Rational brute = evaluate_enumerated(f, v);
        const Rational fast = evaluate_factorized(f, v);
        r.check(brute == fast, [&] {
            return CaseFailure{"blocks " + str(v.blocks()) + " t=" + str(t), str(brute), str(fast)};
        });
        ++done;
    }
    return r;
}

SuiteResult tree_convexity(Nat max_n, Nat set_bound, std::uint64_t max_product)
{
    SuiteResult r;
    r.name = "tree.convexity";
    for (Nat n = 1; n <= max_n; ++n) {
        const auto fn = family_f(n);
        for (const auto& s : oracle::powerset_filter(set_bound, [&](const FinSet& s) { return s.size() <= n; }))
            for (const auto& g : generators(3)) {
                const auto v = y_vector(build_chain(n, s, g));
                if (v.index_count() > max_product)
                    continue;
                const auto weights = v.explicit_form(max_product);
                Rational total = 0;
                bool ok = weights.size() == v.index_count();
                for (const auto& [u, w] : weights) {
                    total += w;
                    ok = ok && w > 0 && u.size() == v.depth() && member(fn, u);
                }
                r.check(ok && total == 1, [&] {
                    return CaseFailure{"n=" + std::to_string(n) + " s=" + str(s) + " " + gen_name(g),
                                       "positive weights on F_n summing to 1", "sum " + str(total)};
                });
            }
    }
    return r;
}

SuiteResult tree_sibling_order(Nat max_n, Nat bound)
{
    SuiteResult r;
    r.name = "tree.sibling_order";
    for (Nat n = 1; n <= max_n; ++n) {
        const DeltaTree tree(n, bound);
        std::vector<FinSet> nodes{FinSet{}};
        for (const auto& [s, block] : tree.blocks())
            nodes.push_back(s);
        for (const auto& s : nodes) {
            if (s.size() >= n)
                continue;
            for (Nat m0 = s.max_or_zero() + 1; m0 <= bound; ++m0) {
                const auto& d0 = tree.delta(s.with(m0));
                const bool parent_ok = d0.min() > n && precedes(tree.delta(s), d0);
                r.check(parent_ok, [&] { return CaseFailure{"n=" + std::to_string(n) + " " + str(s) + " -> " + std::to_string(m0), "parent block first", str(d0)}; });
                if (m0 < bound) {
                    const auto& d1 = tree.delta(s.with(m0 + 1));
                    r.check(precedes(d0, d1), [&] {
                        return CaseFailure{"n=" + std::to_string(n) + " " + str(s) + " siblings " + std::to_string(m0),
                                           "increasing blocks", str(d0) + " / " + str(d1)};
                    });
                }
                const auto res = cancellation_check(tree.chain(s), m0, tree.delta(s.with(m0)));
                r.check(res.holds(), [&] {
                    return CaseFailure{"tree n=" + std::to_string(n) + " s=" + str(s) + " m=" + std::to_string(m0),
                                       s.size() % 2 == 0 ? "1" : "-1", str(res.value)};
                });
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// cli

SuiteResult cli_report_stability(Nat cap)
{
    SuiteResult r;
    r.name = "cli.report_stability";
    auto lines = [&] {
        return report_line(finset_interval(std::min<Nat>(cap, 12))) + "\n" + report_line(ordinal_roundtrip(200, 7)) +
               "\n" + report_line(compacta_matrix_determinism(std::min<Nat>(cap, 6), std::min<Nat>(cap, 6)));
    };
    const auto first = lines();
    const auto second = lines();
    r.check(first == second, [&] { return CaseFailure{"two identical verify runs", first, second}; });
    return r;
}

// ---------------------------------------------------------------------------

const std::vector<Suite>& suites()
{
    auto cap = [](Nat value, Nat limit) { return std::min(value, limit); };
    static const std::vector<Suite> all = {
        {"ordinal.associativity", "ord_add and ord_mul are associative on the small CNF corpus",
         [](Nat) { return ordinal_associativity(); }},
        {"ordinal.distributivity", "a*(b+c) = a*b + a*c on the corpus", [](Nat) { return ordinal_distributivity(); }},
        {"ordinal.monotonicity", "total order; b < c implies a+b < a+c", [](Nat) { return ordinal_monotonicity(); }},
        {"ordinal.roundtrip", "parse(print(x)) = x on 1000 random ordinals", [](Nat) { return ordinal_roundtrip(1000, 2024); }},
        {"finset.precedes_transitivity", "precedes is transitive on nonempty subsets of [1..8]",
         [cap](Nat c) { return finset_precedes_transitivity(cap(8, c)); }},
        {"finset.interval", "interval(a,b) has min a, max b, b-a+1 elements",
         [cap](Nat c) { return finset_interval(cap(40, c)); }},
        {"family.hereditary", "every subset of an enumerated member is a member",
         [cap](Nat c) { return family_hereditary(cap(10, c)); }},
        {"family.tail_uniformity", "one-point extensions agree beyond the tail threshold",
         [cap](Nat c) { return family_tail_uniformity(cap(10, c), std::max(cap(40, c * 4), cap(10, c))); }},
        {"family.enumerate_oracle", "enumerate matches a powerset filter and is monotone in the bound",
         [cap](Nat c) { return family_enumerate_oracle(cap(12, c)); }},
        {"family.rank_consistency", "derivatives of cube(n,n) die after n+1 steps; cube(a,k)' = cube(a,k-1)",
         [cap](Nat c) { return family_rank_consistency(4, cap(12, c)); }},
        {"family.union_cover", "F_n ⊆ S, G_n ⊆ S2, and the unions over n recover S and S2",
         [cap](Nat c) { return family_union_cover(cap(12, c), cap(12, c)); }},
        {"theta.uniqueness", "each t in S2 has exactly one canonical decomposition, the greedy one",
         [cap](Nat c) { return theta_uniqueness(cap(12, c)); }},
        {"theta.local_constancy", "theta depends on each coordinate only up to the other's max",
         [cap](Nat c) { return theta_local_constancy(cap(12, c), std::max(cap(40, c * 4), cap(12, c))); }},
        {"theta.formula", "(<s,t>+1) mod 2 = ((-1)^<s,t>+1)/2", [cap](Nat c) { return theta_formula(cap(12, c)); }},
        {"theta.decompose_member", "decompose succeeds exactly on S2",
         [cap](Nat c) { return theta_decompose_member(cap(12, c)); }},
        {"compacta.powers_witness", "dyadic witnesses lie in S2 and separate pairs of power-of-two sets",
         [cap](Nat c) { return compacta_powers_witness(cap(10, c), 4); }},
        {"compacta.powers_injectivity", "Theta_0 rows over powers of two are pairwise distinct on witness columns",
         [cap](Nat c) { return compacta_powers_injectivity(cap(10, c), 4); }},
        {"compacta.matrix_determinism", "matrix bytes do not depend on the worker count",
         [cap](Nat c) { return compacta_matrix_determinism(cap(10, c), cap(10, c)); }},
        {"compacta.theta1_separation", "distinct t in S2 are separated by some s below the search bound",
         [cap](Nat c) { return compacta_theta1_separation(cap(10, c), cap(22, 2 * c + 2)); }},
        {"tree.self_evaluation", "y*_s(y_s) = 1 for even depth, 0 for odd",
         [cap](Nat c) { return tree_self_evaluation(4, cap(9, c), 100); }},
        {"tree.cancellation", "y*_{s∪{m}}(y_s - y_{s∪{m}}) = (-1)^#s exactly",
         [cap](Nat c) { return tree_cancellation(4, cap(9, c), cap(10, c), 100); }},
        {"tree.parity_table", "theta on individual indices follows the parity table",
         [cap](Nat c) { return tree_parity_table(3, cap(6, c), 10, 10000); }},
        {"tree.evaluator_equivalence", "factorized and enumerated evaluation agree exactly",
         [](Nat) { return tree_evaluator_equivalence(200, 10000, 99); }},
        {"tree.convexity", "y_s weights are positive, sum to 1 and index sets of F_n",
         [cap](Nat c) { return tree_convexity(3, cap(6, c), 10000); }},
        {"cli.report_stability", "verify reports are byte-identical across runs",
         [](Nat c) { return cli_report_stability(c); }},
    };
    return all;
}

std::vector<SuiteResult> run(const std::optional<std::string>& only, Nat cap)
{
    std::vector<SuiteResult> out;
    for (const auto& s : suites())
        if (!only || *only == s.name)
            out.push_back(s.run(cap));
    if (only && out.empty())
        throw std::invalid_argument("unknown suite '" + *only + "'");
    return out;
}

} // namespace schreier::verify
