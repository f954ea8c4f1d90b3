#include "schreier/compacta.hpp"

#include "schreier/errors.hpp"
#include "schreier/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace schreier {

Alpha Alpha::finite(Nat n)
{
    if (n < 1)
        throw std::invalid_argument("alpha must be >= 1 or omega");
    Alpha a;
    a.n_ = n;
    return a;
}

Alpha Alpha::parse(std::string_view text)
{
    if (text == "w" || text == "omega")
        return omega();
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("alpha must be a positive integer or 'w'");
    return finite(std::stoull(std::string(text)));
}

Family Alpha::row_family() const { return n_ ? family_f(*n_) : family_f_omega(); }
Family Alpha::column_family() const { return n_ ? family_g(*n_) : family_g_omega(); }

namespace {

Family restricted(Family f, const IndexSet& index)
{
    if (index.kind() == IndexSet::Kind::All)
        return f;
    return Family::restrict(std::move(f), index);
}

} // namespace

ThetaMatrix build_matrix(MatrixMode mode, const Alpha& alpha, const IndexSet& index, Nat row_bound, Nat col_bound,
                         std::size_t workers)
{
    if (row_bound < 1 || col_bound < 1)
        throw PreconditionError("matrix bounds must be >= 1");
    const Family f = restricted(alpha.row_family(), index);
    const Family g = restricted(alpha.column_family(), index);
    if (mode == MatrixMode::K)
        return build_matrix(mode, enumerate(f, row_bound), enumerate(g, col_bound), col_bound, workers);
    return build_matrix(mode, enumerate(g, row_bound), enumerate(f, col_bound), col_bound, workers);
}

ThetaMatrix build_matrix(MatrixMode mode, std::vector<FinSet> rows, std::vector<FinSet> cols, Nat col_bound,
                         std::size_t workers)
{
    ThetaMatrix m;
    m.mode = mode;
    m.row_index = std::move(rows);
    m.col_index = std::move(cols);
    m.col_bound = col_bound;
    m.entries.assign(m.rows() * m.cols(), 0);

    // Decompose every S2 index once, in whichever role it appears.
    const auto& t_index = mode == MatrixMode::K ? m.col_index : m.row_index;
    std::vector<Decomposition> decomposed(t_index.size());
    for (std::size_t i = 0; i < t_index.size(); ++i)
        if (!t_index[i].empty())
            decomposed[i] = decompose(t_index[i]);

    auto kernel = [&](const FinSet& s, std::size_t t_slot) {
        return t_index[t_slot].empty() ? 1 : theta(s, decomposed[t_slot]);
    };
    parallel_for(m.rows(), workers == 0 ? worker_count() : workers, [&](std::size_t i) {
        auto* row = m.entries.data() + i * m.cols();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row[j] = static_cast<std::uint8_t>(mode == MatrixMode::K ? kernel(m.row_index[i], j)
                                                                     : kernel(m.col_index[j], i));
    });
    return m;
}

bool InjectivityReport::injective() const
{
    return std::all_of(classes.begin(), classes.end(), [](const RowClass& c) { return c.rows.size() == 1; });
}

std::size_t InjectivityReport::genuine_collisions() const
{
    return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const RowClass& c) {
        return c.rows.size() > 1 && !c.truncation_artifact;
    }));
}

std::size_t InjectivityReport::artifact_collisions() const
{
    return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const RowClass& c) {
        return c.rows.size() > 1 && c.truncation_artifact;
    }));
}

InjectivityReport injectivity_report(const ThetaMatrix& m)
{
    std::map<std::vector<std::uint8_t>, std::size_t> slot_of_row;
    InjectivityReport report;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto first = m.entries.begin() + static_cast<std::ptrdiff_t>(i * m.cols());
        std::vector<std::uint8_t> row(first, first + static_cast<std::ptrdiff_t>(m.cols()));
        auto [it, inserted] = slot_of_row.emplace(std::move(row), report.classes.size());
        if (inserted)
            report.classes.emplace_back();
        auto& cls = report.classes[it->second];
        cls.rows.push_back(i);
        if (m.row_index[i].max_or_zero() > m.col_bound)
            cls.truncation_artifact = true;
    }
    return report;
}

namespace {

bool is_power_of_two(Nat m) { return m != 0 && (m & (m - 1)) == 0; }

} // namespace

FinSet powers_witness(const FinSet& s0, const FinSet& s1)
{
    if (s0 == s1)
        throw PreconditionError("powers_witness needs two distinct sets");
    for (const auto* s : {&s0, &s1}) {
        if (!std::all_of(s->begin(), s->end(), is_power_of_two))
            throw PreconditionError(to_string(*s) + " is not a set of powers of two");
        if (!s->empty() && s->size() > s->min())
            throw PreconditionError(to_string(*s) + " is not a Schreier set");
    }
    std::size_t k = 0;
    while (k < s0.size() && k < s1.size() && s0[k] == s1[k])
        ++k;
    const FinSet* base = nullptr;
    if (k < s0.size() && k < s1.size())
        base = s0[k] < s1[k] ? &s0 : &s1;
    else
        base = k < s0.size() ? &s0 : &s1;

    std::vector<Nat> elems;
    for (std::size_t m = 0; m <= k; ++m) {
        const Nat p = (*base)[m];
        for (Nat r = p; r <= 2 * p - 1; ++r)
            elems.push_back(r);
    }
    return FinSet(std::move(elems));
}

std::optional<FinSet> distinguishing_search(const FinSet& t0, const FinSet& t1, Nat bound)
{
    if (t0 == t1)
        throw PreconditionError("distinguishing_search needs two distinct sets");
    const auto d0 = t0.empty() ? Decomposition{} : decompose(t0);
    const auto d1 = t1.empty() ? Decomposition{} : decompose(t1);
    auto value = [](const FinSet& s, const FinSet& t, const Decomposition& d) { return t.empty() ? 1 : theta(s, d); };

    // Schreier sets of size L have min >= L, so size-L candidates are the
    // L-subsets of [L..bound], walked in lexicographic order.
    for (Nat size = 1; size <= bound && bound - size + 1 >= size; ++size) {
        std::vector<Nat> comb(size);
        for (Nat i = 0; i < size; ++i)
            comb[i] = size + i;
        for (;;) {
            FinSet s(comb);
            if (value(s, t0, d0) != value(s, t1, d1))
                return s;
            // Next combination: bump the rightmost element that has room.
            std::size_t i = size;
            while (i > 0 && comb[i - 1] == bound - (size - i))
                --i;
            if (i == 0)
                break;
            ++comb[i - 1];
            for (std::size_t j = i; j < size; ++j)
                comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::string matrix_to_csv(const ThetaMatrix& m)
{
    std::string out;
    for (const auto& c : m.col_index)
        out += ',' + to_label(c);
    out += '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += to_label(m.row_index[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += ',';
            out += static_cast<char>('0' + m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_to_pbm(const ThetaMatrix& m)
{
    std::string out = "P1\n" + std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0)
                out += ' ';
            out += static_cast<char>('0' + m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_to_json(const ThetaMatrix& m)
{
    auto sets = [](const std::vector<FinSet>& v) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& s : v)
            out.push_back(std::vector<Nat>(s.begin(), s.end()));
        return out;
    };
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string bits;
        for (std::size_t j = 0; j < m.cols(); ++j)
            bits += static_cast<char>('0' + m.at(i, j));
        rows.push_back(bits);
    }
    nlohmann::json out = {
        {"mode", m.mode == MatrixMode::K ? "K" : "L"},
        {"row_index", sets(m.row_index)},
        {"col_index", sets(m.col_index)},
        {"entries", rows},
    };
    return out.dump();
}

} // namespace schreier
