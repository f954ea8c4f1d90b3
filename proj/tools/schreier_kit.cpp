#include "schreier/compacta.hpp"
#include "schreier/errors.hpp"
#include "schreier/family.hpp"
#include "schreier/formaltree.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/theta.hpp"
#include "schreier/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace schreier;
using nlohmann::ordered_json;

namespace {

enum class Exit { Ok = 0, Failed = 1, Usage = 2 };

struct Options {
    std::optional<std::string> format;
    std::string out;
};

ordered_json set_json(const FinSet& s) { return std::vector<Nat>(s.begin(), s.end()); }

ordered_json blocks_json(const std::vector<FinSet>& blocks)
{
    ordered_json out = ordered_json::array();
    for (const auto& b : blocks)
        out.push_back(set_json(b));
    return out;
}

std::string line(const ordered_json& j) { return j.dump() + "\n"; }

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed)
{
    const std::string f = o.format.value_or(fallback);
    for (const char* a : allowed)
        if (f == a)
            return f;
    throw std::invalid_argument("format '" + f + "' is not available for this command");
}

// Buffered so that a failing command leaves --out untouched and output order never depends on timing.
void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write " + o.out);
    file << text;
}

std::string rational_text(const Rational& r) { return r.str(); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"schreier-kit: hereditary families, the parity kernel and averaging-tree checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format: json, csv or pbm (matrices)")
        ->check(CLI::IsMember({"json", "csv", "pbm"}));
    app.add_option("--out", opt.out, "Write output to this file instead of standard output");

    std::function<Exit()> action;

    // ---- fam
    auto* fam = app.add_subcommand("fam", "Family expressions")->require_subcommand(1);
    std::string expr;
    std::string set_text;
    Nat bound = 10;

    auto* fam_parse = fam->add_subcommand("parse", "Parse and pretty-print an expression");
    fam_parse->add_option("expr", expr, "Family expression")->required();
    fam_parse->callback([&] {
        action = [&] {
            const auto f = parse_family(expr);
            if (format_or(opt, "json", {"json"}) == "json")
                emit(opt, line({{"family", print_family(f)}}));
            return Exit::Ok;
        };
    });

    auto* fam_enum = fam->add_subcommand("enum", "Enumerate members inside [1..bound]");
    fam_enum->add_option("expr", expr, "Family expression")->required();
    fam_enum->add_option("--bound", bound, "Largest element")->capture_default_str();
    fam_enum->callback([&] {
        action = [&] {
            const auto f = parse_family(expr);
            const auto fmt = format_or(opt, "json", {"json", "csv"});
            std::string text;
            for (const auto& s : enumerate(f, bound))
                text += fmt == "json" ? line({{"set", set_json(s)}, {"maximal", is_maximal(f, s)}}) : to_label(s) + "\n";
            emit(opt, text);
            return Exit::Ok;
        };
    });

    auto* fam_member = fam->add_subcommand("member", "Membership test");
    fam_member->add_option("expr", expr, "Family expression")->required();
    fam_member->add_option("set", set_text, "Finite set, e.g. {2,5,8}")->required();
    fam_member->callback([&] {
        action = [&] {
            const auto f = parse_family(expr);
            const auto s = parse_finset(set_text);
            format_or(opt, "json", {"json"});
            emit(opt, line({{"set", set_json(s)}, {"member", member(f, s)}}));
            return Exit::Ok;
        };
    });

    auto* fam_maximal = fam->add_subcommand("maximal", "Maximality test for a member");
    fam_maximal->add_option("expr", expr, "Family expression")->required();
    fam_maximal->add_option("set", set_text, "Finite set")->required();
    fam_maximal->callback([&] {
        action = [&] {
            const auto f = parse_family(expr);
            const auto s = parse_finset(set_text);
            format_or(opt, "json", {"json"});
            emit(opt, line({{"set", set_json(s)}, {"maximal", is_maximal(f, s)}}));
            return Exit::Ok;
        };
    });

    auto* fam_rank = fam->add_subcommand("rank", "Cantor-Bendixson rank in Cantor normal form");
    fam_rank->add_option("expr", expr, "Family expression")->required();
    fam_rank->callback([&] {
        action = [&] {
            const auto f = parse_family(expr);
            const auto info = rank_info(f);
            if (!opt.format) {
                emit(opt, ord_print(info.rank) + "\n");
                return Exit::Ok;
            }
            format_or(opt, "json", {"json"});
            emit(opt, line({{"family", print_family(f)}, {"rank", ord_print(info.rank)}, {"rule_derived", info.rule_derived}}));
            return Exit::Ok;
        };
    });

    // ---- theta
    auto* th = app.add_subcommand("theta", "The parity kernel")->require_subcommand(1);
    std::string s_text;
    std::string t_text;

    auto* th_eval = th->add_subcommand("eval", "Evaluate <s,t> and Theta(s,t)");
    th_eval->add_option("--s", s_text, "s in S")->required();
    th_eval->add_option("--t", t_text, "t in S2")->required();
    th_eval->callback([&] {
        action = [&] {
            const auto s = parse_finset(s_text);
            const auto t = parse_finset(t_text);
            format_or(opt, "json", {"json"});
            const auto d = t.empty() ? Decomposition{} : decompose(t);
            const auto k = t.empty() ? std::size_t{0} : inner(s, d);
            const int v = t.empty() ? 1 : theta(s, d);
            emit(opt, line({{"inner", k}, {"theta", v}, {"decomposition", blocks_json(d.blocks)}}));
            return Exit::Ok;
        };
    });

    auto* th_dec = th->add_subcommand("decompose", "Canonical decomposition of t in S2");
    th_dec->add_option("t", t_text, "Nonempty t")->required();
    th_dec->callback([&] {
        action = [&] {
            const auto t = parse_finset(t_text);
            format_or(opt, "json", {"json"});
            emit(opt, line({{"t", set_json(t)}, {"blocks", blocks_json(decompose(t).blocks)}}));
            return Exit::Ok;
        };
    });

    // ---- compacta
    auto* cmp = app.add_subcommand("compacta", "Theta matrices for K_alpha and L_alpha")->require_subcommand(1);
    std::string mode_text = "K";
    std::string alpha_text = "w";
    std::string index_text = "all";
    Nat row_bound = 6;
    Nat col_bound = 6;
    auto matrix_options = [&](CLI::App* sub) {
        sub->add_option("--mode", mode_text, "K (rows s) or L (rows t)")->check(CLI::IsMember({"K", "L"}))->capture_default_str();
        sub->add_option("--alpha", alpha_text, "Positive integer or w")->capture_default_str();
        sub->add_option("--index", index_text, "Index set: all, from(n), powers(b), ap(s,d) or {..}")->capture_default_str();
        sub->add_option("--rows", row_bound, "Row index bound")->capture_default_str();
        sub->add_option("--cols", col_bound, "Column index bound")->capture_default_str();
    };
    auto make_matrix = [&] {
        return build_matrix(mode_text == "K" ? MatrixMode::K : MatrixMode::L, Alpha::parse(alpha_text),
                            parse_index_set(index_text), row_bound, col_bound);
    };

    auto* cmp_matrix = cmp->add_subcommand("matrix", "Build a truncated 0/1 Theta matrix");
    matrix_options(cmp_matrix);
    cmp_matrix->callback([&] {
        action = [&] {
            const auto fmt = format_or(opt, "csv", {"csv", "json", "pbm"});
            const auto m = make_matrix();
            emit(opt, fmt == "csv" ? matrix_to_csv(m) : fmt == "pbm" ? matrix_to_pbm(m) : matrix_to_json(m) + "\n");
            return Exit::Ok;
        };
    });

    auto* cmp_inject = cmp->add_subcommand("inject", "Classes of identical rows");
    matrix_options(cmp_inject);
    cmp_inject->callback([&] {
        action = [&] {
            format_or(opt, "json", {"json"});
            const auto m = make_matrix();
            const auto report = injectivity_report(m);
            std::string text = line({{"rows", m.rows()},
                                     {"cols", m.cols()},
                                     {"classes", report.classes.size()},
                                     {"injective", report.injective()},
                                     {"genuine_collisions", report.genuine_collisions()},
                                     {"artifact_collisions", report.artifact_collisions()}});
            for (const auto& cls : report.classes) {
                if (cls.rows.size() < 2)
                    continue;
                ordered_json members = ordered_json::array();
                for (auto i : cls.rows)
                    members.push_back(set_json(m.row_index[i]));
                text += line({{"class", members}, {"artifact", cls.truncation_artifact}});
            }
            emit(opt, text);
            return Exit::Ok;
        };
    });

    std::string s0_text;
    std::string s1_text;
    auto* cmp_witness = cmp->add_subcommand("witness", "Dyadic separating t for two sets of powers of two");
    cmp_witness->add_option("--s0", s0_text, "First set")->required();
    cmp_witness->add_option("--s1", s1_text, "Second set")->required();
    cmp_witness->callback([&] {
        action = [&] {
            format_or(opt, "json", {"json"});
            const auto s0 = parse_finset(s0_text);
            const auto s1 = parse_finset(s1_text);
            const auto t = powers_witness(s0, s1);
            const bool in_s2 = member(Family::s2(), t);
            emit(opt, line({{"t", set_json(t)},
                            {"in_s2", in_s2},
                            {"theta0", theta(s0, t)},
                            {"theta1", theta(s1, t)}}));
            return Exit::Ok;
        };
    });

    Nat search_bound = 22;
    auto* cmp_search = cmp->add_subcommand("search", "Smallest s separating two elements of S2");
    cmp_search->add_option("--t0", s0_text, "First t")->required();
    cmp_search->add_option("--t1", s1_text, "Second t")->required();
    cmp_search->add_option("--bound", search_bound, "Largest element of s")->capture_default_str();
    cmp_search->callback([&] {
        action = [&] {
            format_or(opt, "json", {"json"});
            const auto found = distinguishing_search(parse_finset(s0_text), parse_finset(s1_text), search_bound);
            emit(opt, line({{"s", found ? set_json(*found) : ordered_json(nullptr)}}));
            return Exit::Ok;
        };
    });

    // ---- tree
    auto* tree = app.add_subcommand("tree", "Averaging-tree cancellation identity")->require_subcommand(1);
    Nat n = 2;
    Nat m = 0;
    std::optional<std::uint64_t> seed;
    auto* tree_check = tree->add_subcommand("check", "One cancellation check with exact rationals");
    tree_check->add_option("--n", n, "Level n")->capture_default_str();
    tree_check->add_option("--s", s_text, "The set s, #s < n")->required();
    tree_check->add_option("--m", m, "New element, m > max s")->required();
    tree_check->add_option("--seed", seed, "Seeded generator (default: canonical dyadic blocks)");
    tree_check->callback([&] {
        action = [&] {
            format_or(opt, "json", {"json"});
            const auto gen = seed ? ChainGenerator::seeded(*seed) : ChainGenerator::canonical();
            const auto chain = build_chain(n, parse_finset(s_text), gen);
            const auto r = cancellation_check(chain, m, gen);
            emit(opt, line({{"k", r.k()},
                            {"chain", blocks_json(r.chain.deltas)},
                            {"extension", set_json(r.extended.deltas.back())},
                            {"l0", r.l0.str()},
                            {"l1", r.l1.str()},
                            {"l2", r.l2.str()},
                            {"first", rational_text(r.first)},
                            {"second", rational_text(r.second)},
                            {"value", rational_text(r.value)},
                            {"holds", r.holds()}}));
            return r.holds() ? Exit::Ok : Exit::Failed;
        };
    });

    Nat max_n = 4;
    Nat set_bound = 9;
    Nat m_bound = 10;
    std::size_t seeds = 100;
    auto* tree_sweep = tree->add_subcommand("sweep", "Cancellation over all small chains and seeds");
    tree_sweep->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    tree_sweep->add_option("--bound", set_bound, "s ranges over subsets of [1..bound]")->capture_default_str();
    tree_sweep->add_option("--m-bound", m_bound, "Largest m")->capture_default_str();
    tree_sweep->add_option("--seeds", seeds, "Number of random seeds besides the canonical generator")->capture_default_str();
    tree_sweep->callback([&] {
        action = [&] {
            format_or(opt, "json", {"json"});
            const auto r = verify::tree_cancellation(max_n, set_bound, m_bound, seeds);
            emit(opt, verify::report_line(r) + "\n");
            return r.passed() ? Exit::Ok : Exit::Failed;
        };
    });

    // ---- verify
    std::optional<std::string> suite;
    Nat cap = 1000;
    bool list = false;
    auto* ver = app.add_subcommand("verify", "Run the property suites");
    ver->add_option("--suite", suite, "Run only this suite");
    ver->add_option("--max", cap, "Cap every truncation bound at N");
    ver->add_flag("--list", list, "List suite names and exit");
    ver->callback([&] {
        action = [&] {
            format_or(opt, "json", {"json"});
            if (list) {
                std::string text;
                for (const auto& s : verify::suites())
                    text += s.name + "\t" + s.description + "\n";
                emit(opt, text);
                return Exit::Ok;
            }
            const auto start = std::chrono::steady_clock::now();
            const auto results = verify::run(suite, cap);
            std::string text;
            bool ok = true;
            for (const auto& r : results) {
                text += verify::report_line(r) + "\n";
                ok = ok && r.passed();
            }
            emit(opt, text);
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            std::cerr << "wall time " << elapsed.count() << " s\n";
            return ok ? Exit::Ok : Exit::Failed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return static_cast<int>(Exit::Usage);
    }

    try {
        return static_cast<int>(action());
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const NotInS2& e) {
        std::cerr << "not in S2: " << e.what() << "\n";
    } catch (const DegenerateIndex& e) {
        std::cerr << "degenerate index set: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return static_cast<int>(Exit::Usage);
}
