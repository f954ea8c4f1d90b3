#include "schreier/finset.hpp"

#include "schreier/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace schreier {

FinSet::FinSet(std::initializer_list<Nat> elems) : FinSet(std::vector<Nat>(elems)) {}

FinSet::FinSet(std::vector<Nat> elems) : elems_(std::move(elems))
{
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] == 0)
            throw std::invalid_argument("finite set elements must be >= 1");
        if (i > 0 && elems_[i - 1] >= elems_[i])
            throw std::invalid_argument("finite set elements must be strictly increasing");
    }
}

FinSet FinSet::from_unsorted(std::vector<Nat> elems)
{
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return FinSet(std::move(elems));
}

Nat FinSet::min() const
{
    if (elems_.empty())
        throw std::out_of_range("min of the empty set");
    return elems_.front();
}

Nat FinSet::max() const
{
    if (elems_.empty())
        throw std::out_of_range("max of the empty set");
    return elems_.back();
}

bool FinSet::contains(Nat m) const noexcept
{
    return std::binary_search(elems_.begin(), elems_.end(), m);
}

bool FinSet::subset_of(const FinSet& other) const noexcept
{
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

FinSet FinSet::with(Nat m) const
{
    if (m == 0)
        throw std::invalid_argument("finite set elements must be >= 1");
    FinSet out = *this;
    auto it = std::lower_bound(out.elems_.begin(), out.elems_.end(), m);
    if (it == out.elems_.end() || *it != m)
        out.elems_.insert(it, m);
    return out;
}

FinSet FinSet::prefix(std::size_t count) const
{
    FinSet out;
    out.elems_.assign(elems_.begin(), elems_.begin() + static_cast<std::ptrdiff_t>(std::min(count, elems_.size())));
    return out;
}

FinSet FinSet::truncated(Nat bound) const
{
    FinSet out;
    out.elems_.assign(elems_.begin(), std::upper_bound(elems_.begin(), elems_.end(), bound));
    return out;
}

bool precedes(const FinSet& s, const FinSet& t) noexcept
{
    if (s.empty())
        return true;
    if (t.empty())
        return false;
    return s.max() < t.min();
}

FinSet interval(Nat a, Nat b)
{
    if (a < 1 || a > b)
        throw std::invalid_argument("interval requires 1 <= a <= b, got [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "]");
    std::vector<Nat> elems(b - a + 1);
    for (Nat i = 0; i < elems.size(); ++i)
        elems[i] = a + i;
    return FinSet(std::move(elems));
}

FinSet concat(std::span<const FinSet> blocks)
{
    std::vector<Nat> elems;
    for (const auto& b : blocks)
        elems.insert(elems.end(), b.begin(), b.end());
    return FinSet(std::move(elems));
}

std::string to_string(const FinSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string to_label(const FinSet& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

FinSet parse_finset(std::string_view text)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    constexpr std::string_view empty_sign = "\xE2\x88\x85"; // U+2205
    if (text.substr(pos, empty_sign.size()) == empty_sign) {
        pos += empty_sign.size();
        skip_ws();
        if (pos != text.size())
            throw ParseError("trailing input after empty set", pos);
        return {};
    }
    if (pos >= text.size() || text[pos] != '{')
        throw ParseError("expected '{'", pos);
    ++pos;
    std::vector<Nat> elems;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        for (;;) {
            skip_ws();
            const auto start = pos;
            Nat value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                const auto digit = static_cast<Nat>(text[pos] - '0');
                if (value > (std::numeric_limits<Nat>::max() - digit) / 10)
                    throw ParseError("number too large", start);
                value = value * 10 + digit;
                ++pos;
            }
            if (pos == start)
                throw ParseError("expected a number", pos);
            if (value == 0)
                throw ParseError("set elements must be >= 1", start);
            elems.push_back(value);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or '}'", pos);
        }
    }
    skip_ws();
    if (pos != text.size())
        throw ParseError("trailing input after set", pos);
    return FinSet::from_unsorted(std::move(elems));
}

} // namespace schreier
