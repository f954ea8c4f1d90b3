#include "schreier/ordinal.hpp"

#include "schreier/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace schreier {

Ordinal::Ordinal(std::uint64_t n)
{
    if (n > 0)
        terms_.push_back({Ordinal{}, n});
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms)
{
    // Summing left to right applies absorption exactly as ordinal addition does.
    Ordinal out;
    for (auto& t : terms)
        if (t.coefficient > 0)
            out = out + omega_power(t.exponent, t.coefficient);
    return out;
}

Ordinal Ordinal::omega() { return omega_power(Ordinal{1}); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient)
{
    Ordinal out;
    if (coefficient > 0)
        out.terms_.push_back({exponent, coefficient});
    return out;
}

bool Ordinal::is_finite() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const noexcept
{
    return !terms_.empty() && terms_.back().exponent.is_zero();
}

std::uint64_t Ordinal::finite_value() const
{
    if (!is_finite())
        throw std::domain_error("ordinal " + ord_print(*this) + " is not finite");
    return terms_.empty() ? 0 : terms_[0].coefficient;
}

Ordinal Ordinal::predecessor() const
{
    if (!is_successor())
        throw std::domain_error("ordinal " + ord_print(*this) + " is not a successor");
    Ordinal out = *this;
    if (--out.terms_.back().coefficient == 0)
        out.terms_.pop_back();
    return out;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b)
{
    const auto n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0)
            return c;
        if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0)
            return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

Ordinal operator+(const Ordinal& a, const Ordinal& b)
{
    if (b.is_zero())
        return a;
    const Ordinal& lead = b.terms_.front().exponent;
    Ordinal out;
    std::uint64_t carry = 0;
    for (const auto& t : a.terms_) {
        auto c = t.exponent <=> lead;
        if (c > 0) {
            out.terms_.push_back(t);
        } else {
            if (c == 0)
                carry = t.coefficient;
            break;
        }
    }
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    out.terms_[out.terms_.size() - b.terms_.size()].coefficient += carry;
    return out;
}

Ordinal operator*(const Ordinal& a, const Ordinal& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    // a * (b1 + b2) = a*b1 + a*b2, with a * n scaling only the leading
    // coefficient and a * w^f * c = w^(e1 + f) * c for f > 0.
    const Ordinal& lead = a.terms_.front().exponent;
    Ordinal out;
    for (const auto& t : b.terms_) {
        Ordinal piece;
        if (t.exponent.is_zero()) {
            piece = a;
            piece.terms_.front().coefficient *= t.coefficient;
        } else {
            piece = Ordinal::omega_power(lead + t.exponent, t.coefficient);
        }
        out = out + piece;
    }
    return out;
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) { return a + b; }
Ordinal ord_mul(const Ordinal& a, const Ordinal& b) { return a * b; }
std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

namespace {

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view text) : text_(text) {}

    Ordinal parse()
    {
        Ordinal out = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return out;
    }

private:
    Ordinal sum()
    {
        Ordinal out = term();
        while (accept('+'))
            out = out + term();
        return out;
    }

    Ordinal term()
    {
        skip_ws();
        if (peek() == 'w') {
            ++pos_;
            Ordinal exponent{1};
            if (accept('^'))
                exponent = atom();
            std::uint64_t coefficient = 1;
            if (accept('*'))
                coefficient = nat();
            return Ordinal::omega_power(exponent, coefficient);
        }
        return Ordinal{nat()};
    }

    Ordinal atom()
    {
        skip_ws();
        if (accept('(')) {
            Ordinal out = sum();
            expect(')');
            return out;
        }
        if (peek() == 'w') {
            ++pos_;
            Ordinal exponent{1};
            if (accept('^'))
                exponent = atom();
            return Ordinal::omega_power(exponent);
        }
        return Ordinal{nat()};
    }

    std::uint64_t nat()
    {
        skip_ws();
        const auto start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                throw ParseError("number too large", start);
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start)
            throw ParseError(pos_ < text_.size() ? std::string("unexpected '") + text_[pos_] + "'"
                                                 : std::string("unexpected end of input"),
                             pos_);
        return value;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool bare_exponent(const Ordinal& e)
{
    if (e.is_finite())
        return true;
    return e.terms().size() == 1 && e.terms()[0].coefficient == 1;
}

} // namespace

Ordinal ord_parse(std::string_view text) { return OrdinalParser{text}.parse(); }

std::string ord_print(const Ordinal& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty())
            out += '+';
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coefficient);
            continue;
        }
        out += 'w';
        if (t.exponent != Ordinal{1}) {
            out += '^';
            const auto e = ord_print(t.exponent);
            out += bare_exponent(t.exponent) ? e : "(" + e + ")";
        }
        if (t.coefficient != 1)
            out += '*' + std::to_string(t.coefficient);
    }
    return out;
}

} // namespace schreier
