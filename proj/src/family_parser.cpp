#include "schreier/errors.hpp"
#include "schreier/family.hpp"

#include <cctype>
#include <limits>

namespace schreier {

namespace {

// The DSL is parsed in two passes: a generic call tree first, then typed
// conversion. That keeps syntax errors (bad characters) apart from shape
// errors (wrong names, arities, argument kinds).
struct Call {
    enum class Kind { Name, Number, Braces } kind = Kind::Name;
    std::string name;
    Nat number = 0;
    std::vector<Nat> list;
    bool has_parens = false;
    std::vector<Call> args;
    std::size_t begin = 0;
    std::size_t end = 0;
};

class CallParser {
public:
    explicit CallParser(std::string_view text) : text_(text) {}

    Call parse()
    {
        Call root = node();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return root;
    }

private:
    Call node()
    {
        skip_ws();
        Call out;
        out.begin = pos_;
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            out.kind = Call::Kind::Number;
            out.number = number();
        } else if (c == '{') {
            out.kind = Call::Kind::Braces;
            ++pos_;
            skip_ws();
            if (!accept('}')) {
                do {
                    skip_ws();
                    out.list.push_back(number());
                    skip_ws();
                } while (accept(','));
                expect('}', "expected ',' or '}'");
            }
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                out.name += text_[pos_++];
            skip_ws();
            if (accept('(')) {
                out.has_parens = true;
                skip_ws();
                if (!accept(')')) {
                    do {
                        out.args.push_back(node());
                        skip_ws();
                    } while (accept(','));
                    expect(')', "expected ',' or ')'");
                }
            }
        } else {
            throw ParseError(std::string("unexpected '") + c + "'", pos_);
        }
        out.end = pos_;
        return out;
    }

    Nat number()
    {
        const auto start = pos_;
        Nat value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<Nat>(text_[pos_] - '0');
            if (value > (std::numeric_limits<Nat>::max() - digit) / 10)
                throw ParseError("number too large", start);
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start)
            throw ParseError(pos_ < text_.size() ? std::string("expected a number, found '") + text_[pos_] + "'"
                                                 : std::string("expected a number"),
                             pos_);
        return value;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* message)
    {
        if (!accept(c))
            throw ParseError(message, pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void check_arity(const Call& c, std::size_t arity)
{
    if (arity == 0 && c.has_parens)
        throw ParseError("'" + c.name + "' takes no arguments", c.end);
    if (arity > 0 && (!c.has_parens || c.args.size() != arity))
        throw ParseError("'" + c.name + "' expects " + std::to_string(arity) + " argument" +
                             (arity == 1 ? "" : "s") + ", got " + std::to_string(c.args.size()),
                         c.end);
}

Nat to_nat(const Call& c)
{
    if (c.kind != Call::Kind::Number)
        throw ParseError("expected a number", c.begin);
    return c.number;
}

IndexSet to_index_set(const Call& c)
{
    if (c.kind == Call::Kind::Braces) {
        for (Nat m : c.list)
            if (m == 0)
                throw ParseError("index set elements must be >= 1", c.begin);
        return IndexSet::explicit_set(FinSet::from_unsorted(c.list));
    }
    if (c.kind != Call::Kind::Name)
        throw ParseError("expected an index set", c.begin);
    if (c.name == "all") {
        check_arity(c, 0);
        return IndexSet::all();
    }
    if (c.name == "from") {
        check_arity(c, 1);
        const Nat n = to_nat(c.args[0]);
        if (n < 1)
            throw ParseError("from(n) requires n >= 1", c.args[0].begin);
        return IndexSet::from(n);
    }
    if (c.name == "powers") {
        check_arity(c, 1);
        const Nat b = to_nat(c.args[0]);
        if (b < 2)
            throw ParseError("powers(b) requires b >= 2", c.args[0].begin);
        return IndexSet::powers(b);
    }
    if (c.name == "ap") {
        check_arity(c, 2);
        const Nat start = to_nat(c.args[0]);
        const Nat step = to_nat(c.args[1]);
        if (start < 1)
            throw ParseError("ap(start, step) requires start >= 1", c.args[0].begin);
        if (step < 1)
            throw ParseError("ap(start, step) requires step >= 1", c.args[1].begin);
        return IndexSet::arithmetic(start, step);
    }
    throw ParseError("unknown index set '" + c.name + "'", c.begin);
}

Family to_family(const Call& c)
{
    if (c.kind != Call::Kind::Name)
        throw ParseError("expected a family", c.begin);
    if (c.name == "schreier") {
        check_arity(c, 0);
        return Family::schreier();
    }
    if (c.name == "S2") {
        check_arity(c, 0);
        return Family::s2();
    }
    if (c.name == "cube") {
        check_arity(c, 2);
        const Nat a = to_nat(c.args[0]);
        const Nat k = to_nat(c.args[1]);
        if (a < 1)
            throw ParseError("cube(a, k) requires a >= 1", c.args[0].begin);
        return Family::cube(a, k);
    }
    if (c.name == "prod") {
        check_arity(c, 2);
        return Family::product(to_family(c.args[0]), to_family(c.args[1]));
    }
    if (c.name == "restrict") {
        check_arity(c, 2);
        return Family::restrict(to_family(c.args[0]), to_index_set(c.args[1]));
    }
    throw ParseError("unknown family '" + c.name + "'", c.begin);
}

} // namespace

Family parse_family(std::string_view text) { return to_family(CallParser{text}.parse()); }

IndexSet parse_index_set(std::string_view text) { return to_index_set(CallParser{text}.parse()); }

std::string print_family(const Family& f)
{
    if (const auto* c = f.as<CubeNode>())
        return "cube(" + std::to_string(c->threshold) + "," + std::to_string(c->size) + ")";
    if (f.as<SchreierNode>())
        return "schreier";
    if (const auto* p = f.as<ProductNode>()) {
        if (p->s2_sugar)
            return "S2";
        return "prod(" + print_family(p->left) + ", " + print_family(p->right) + ")";
    }
    const auto& r = std::get<RestrictNode>(f.node());
    return "restrict(" + print_family(r.inner) + ", " + print_index_set(r.index) + ")";
}

} // namespace schreier
