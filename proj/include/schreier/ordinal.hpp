#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schreier {

struct OrdinalTerm;

/**
 * An ordinal below epsilon_0 in Cantor normal form,
 *
 *     w^e1 * c1 + w^e2 * c2 + ... + w^er * cr,    e1 > e2 > ... > er,  ci >= 1.
 *
 * Exponents are themselves ordinals. The empty term list is 0. Every
 * constructor normalizes, so all operations may assume canonical inputs.
 */
class Ordinal {
public:
    Ordinal() = default;
    Ordinal(std::uint64_t n); // NOLINT: naturals convert implicitly

    /// Normalizes an arbitrary term list (unsorted, zero coefficients, repeats).
    static Ordinal from_terms(std::vector<OrdinalTerm> terms);
    static Ordinal omega();
    static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);

    const std::vector<OrdinalTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const noexcept;
    bool is_successor() const noexcept;
    /// Value of a finite ordinal; throws for infinite ones.
    std::uint64_t finite_value() const;
    /// The ordinal b with b + 1 == *this; throws unless *this is a successor.
    Ordinal predecessor() const;

    friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
    friend Ordinal operator*(const Ordinal& a, const Ordinal& b);
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

private:
    std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
    Ordinal exponent;
    std::uint64_t coefficient = 1;
};

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);

/**
 * Grammar (whitespace ignored):
 *
 *     ord  := term ("+" term)*
 *     term := "w" ["^" atom] ["*" nat] | nat
 *     atom := nat | "w" ["^" atom] | "(" ord ")"
 *
 * so "w^w+1" is w^w + 1 and "w^(w+1)" needs the parentheses. Non-canonical
 * sums such as "w*2+w" are normalized, never rejected.
 */
Ordinal ord_parse(std::string_view text);
/// Canonical form, e.g. "w^2+w*3+1"; zero prints as "0".
std::string ord_print(const Ordinal& a);

} // namespace schreier
