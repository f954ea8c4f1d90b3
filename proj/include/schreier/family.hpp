#pragma once

#include "schreier/finset.hpp"
#include "schreier/ordinal.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace schreier {

/// A symbolic subset of N: every variant supports membership and ordered access.
class IndexSet {
public:
    enum class Kind { All, From, Powers, Arithmetic, Explicit };

    static IndexSet all() { return IndexSet{Kind::All, 1, 1, {}}; }
    static IndexSet from(Nat n);
    /// {base^j : j >= 0}; contains 1.
    static IndexSet powers(Nat base);
    static IndexSet arithmetic(Nat start, Nat step);
    static IndexSet explicit_set(FinSet elems) { return IndexSet{Kind::Explicit, 0, 0, std::move(elems)}; }

    Kind kind() const noexcept { return kind_; }
    /// Explicit sets are finite; they make rank and derivative queries degenerate.
    bool is_infinite() const noexcept { return kind_ != Kind::Explicit; }
    bool contains(Nat m) const noexcept;
    /// k-th smallest element, k >= 1.
    std::optional<Nat> kth(Nat k) const;
    /// Smallest element >= x.
    std::optional<Nat> next_at_least(Nat x) const;

    Nat first_param() const noexcept { return a_; }
    Nat second_param() const noexcept { return b_; }
    const FinSet& elements() const noexcept { return elems_; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    IndexSet(Kind kind, Nat a, Nat b, FinSet elems) : kind_(kind), a_(a), b_(b), elems_(std::move(elems)) {}

    Kind kind_;
    Nat a_;
    Nat b_;
    FinSet elems_;
};

std::string print_index_set(const IndexSet& m);

struct CubeNode;
struct SchreierNode;
struct ProductNode;
struct RestrictNode;

/**
 * Immutable expression for a hereditary family of finite subsets of N.
 *
 *   cube(a, k)       [ [a, inf) ]^{<= k}
 *   schreier         { s : #s <= min s }
 *   prod(F, G)       unions s_1 < ... < s_n of blocks in F whose minima form a set in G
 *   restrict(F, M)   { s in F : s subset of M }
 *
 * Nodes are shared, so copies are cheap.
 */
class Family {
public:
    using Node = std::variant<CubeNode, SchreierNode, ProductNode, RestrictNode>;

    static Family cube(Nat threshold, Nat size);
    static Family schreier();
    static Family product(Family left, Family right);
    /// prod(schreier, schreier), remembered as "S2" for printing.
    static Family s2();
    static Family restrict(Family inner, IndexSet index);

    const Node& node() const noexcept;

    template <class T>
    const T* as() const noexcept;

private:
    explicit Family(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct CubeNode {
    Nat threshold;
    Nat size;
};

struct SchreierNode {};

struct ProductNode {
    Family left;
    Family right;
    bool s2_sugar = false;
};

struct RestrictNode {
    Family inner;
    IndexSet index;
};

inline const Family::Node& Family::node() const noexcept { return *node_; }

template <class T>
const T* Family::as() const noexcept
{
    return std::get_if<T>(node_.get());
}

// The families F_n = [N_n]^{<=n}, G_n = S (x) F_n, F_w = S, G_w = S2.
Family family_f(Nat n);
Family family_g(Nat n);
inline Family family_f_omega() { return Family::schreier(); }
inline Family family_g_omega() { return Family::s2(); }

bool member(const Family& f, const FinSet& s);

/// Product membership by full composition search, pruned only by hereditariness of G.
bool product_member_exhaustive(const Family& left, const Family& right, const FinSet& s);
/// Greedy longest-block composition; exact when `right` is schreier or a cube.
bool product_member_greedy(const Family& left, const Family& right, const FinSet& s);

/// member(f, s ∪ {probe}); requires probe > max s.
bool extension_admissible(const Family& f, const FinSet& s, Nat probe);

/**
 * T such that s ∪ {m1} and s ∪ {m2} are simultaneously in or out of f for all
 * m1, m2 > max(max s, T) in the effective index set of f.
 */
Nat tail_threshold(const Family& f, const FinSet& s);

/// The intersection of every index set that restricts some subexpression of f.
bool in_effective_index(const Family& f, Nat m);
/// Smallest effective index element >= x, or nullopt if none can be found.
std::optional<Nat> next_effective_index(const Family& f, Nat x);
/// True if some restriction inside f uses an explicit (finite) index set.
bool has_finite_index(const Family& f);

/// Requires member(f, s); throws PreconditionError otherwise.
bool is_maximal(const Family& f, const FinSet& s);

/// All members of f inside [1..bound], in length-then-lex order.
std::vector<FinSet> enumerate(const Family& f, Nat bound);

/**
 * The j-th Cantor–Bendixson derivative of f, as a membership predicate.
 *
 * s is in f^(j) iff s is in f^(j-1) and has infinitely many one-point
 * extensions in f^(j-1). Tail uniformity reduces "infinitely many" to one probe
 * above max(max s, tail threshold, remaining depth).
 */
class Derivative {
public:
    Derivative(Family f, Nat order);

    const Family& family() const noexcept { return family_; }
    Nat order() const noexcept { return order_; }
    /// Set when the index set is finite; the derivative is then empty past order 0.
    bool degenerate() const noexcept { return degenerate_; }

    bool contains(const FinSet& s) const;

private:
    bool contains(const FinSet& s, Nat level, std::map<std::pair<FinSet, Nat>, bool>& memo) const;

    Family family_;
    Nat order_;
    Nat threshold_;
    bool degenerate_;
};

inline Derivative derivative(const Family& f) { return Derivative(f, 1); }
inline Derivative iterate(const Family& f, Nat order) { return Derivative(f, order); }

struct RankInfo {
    Ordinal rank;
    /// The product rule was applied outside prod(schreier, cube(n,n)) and prod(schreier, schreier).
    bool rule_derived = false;
};

/// Cantor–Bendixson rank by structural rules; throws DegenerateIndex on explicit index sets.
RankInfo rank_info(const Family& f);
inline Ordinal rank_symbolic(const Family& f) { return rank_info(f).rank; }

/**
 * DSL:
 *
 *     fam  := "schreier" | "S2" | "cube(" nat "," nat ")" | "prod(" fam "," fam ")"
 *           | "restrict(" fam "," iset ")"
 *     iset := "all" | "from(" nat ")" | "powers(" nat ")" | "ap(" nat "," nat ")" | "{" nat-list "}"
 *
 * Syntax errors carry the byte offset of the offending character. Arity errors
 * are reported at the offset just past the call's closing parenthesis.
 */
Family parse_family(std::string_view text);
IndexSet parse_index_set(std::string_view text);
std::string print_family(const Family& f);

} // namespace schreier
