#include "command.hpp"

#include "schreier/compacta.hpp"
#include "schreier/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace schreier;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome from_suite(const verify::SuiteResult& r)
{
    std::string detail = "cases=" + std::to_string(r.cases) + " failures=" + std::to_string(r.failure_count);
    if (!r.failures.empty())
        detail += " first: " + r.failures.front().inputs + " expected " + r.failures.front().expected + " got " +
                  r.failures.front().actual;
    return {r.passed(), detail};
}

int failed = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    if (limit_s > 0 && dt.count() > limit_s) {
        o.ok = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s budget)";
    }
    if (!o.ok)
        ++failed;
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), dt.count());
    std::fflush(stdout);
}

Outcome determinism()
{
    // Same bytes for repeated runs and for one versus four workers.
    const std::string matrix = "compacta matrix --mode K --alpha w --rows 9 --cols 10";
    const std::string lmatrix = "compacta matrix --mode L --alpha 3 --rows 10 --cols 9";
    const std::string report = "verify --max 8";
    for (const auto& args : {matrix, lmatrix, report}) {
        const auto a = run_command(kit(args, "SCHREIER_KIT_THREADS=1") + " 2>/dev/null");
        const auto b = run_command(kit(args, "SCHREIER_KIT_THREADS=4") + " 2>/dev/null");
        const auto c = run_command(kit(args, "SCHREIER_KIT_THREADS=4") + " 2>/dev/null");
        if (a.exit_code != 0 || b.exit_code != 0 || c.exit_code != 0)
            return {false, "'" + args + "' exited with " + std::to_string(a.exit_code) + "/" + std::to_string(b.exit_code)};
        if (a.out.empty() || a.out != b.out || b.out != c.out)
            return {false, "'" + args + "' output differs across runs"};
    }
    const auto in_process = verify::compacta_matrix_determinism(10, 10);
    if (!in_process.passed())
        return from_suite(in_process);
    return {true, "matrix CSV and verify reports identical for 1 and 4 threads"};
}

} // namespace

int main()
{
    criterion(1, "decomposition uniqueness", 60, [] { return from_suite(verify::theta_uniqueness(12)); });
    criterion(2, "local constancy of theta", 120, [] { return from_suite(verify::theta_local_constancy(12, 40)); });
    criterion(3, "parity formula", 0, [] { return from_suite(verify::theta_formula(12)); });
    criterion(4, "powers-of-two witnesses", 60, [] { return from_suite(verify::compacta_powers_witness(10, 4)); });
    criterion(5, "isolated points of schreier", 0, [] { return from_suite(verify::family_isolated_points(12)); });
    criterion(6, "rank table", 0, [] { return from_suite(verify::family_rank_table(6, 4, 12)); });
    criterion(7, "cancellation identity", 60, [] { return from_suite(verify::tree_cancellation(4, 9, 10, 100)); });
    criterion(8, "evaluator equivalence", 0,
              [] { return from_suite(verify::tree_evaluator_equivalence(200, 10000, 2024)); });
    criterion(9, "theta_1 separation", 0, [] { return from_suite(verify::compacta_theta1_separation(10, 22)); });
    criterion(10, "determinism", 0, determinism);
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
