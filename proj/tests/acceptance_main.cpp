// Acceptance suite: eight end-to-end checks, one pass/fail line each.
// Exit status is the number of failed checks.

#include "wmono/commands.hpp"
#include "wmono/measures.hpp"
#include "wmono/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace wmono;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

Outcome criterion1_figure1() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    const auto rows = cli::figure_rows(1, cli::default_grid(1));

    out.require(!rows.empty() && rows.front().exponent == 2.0, "grid must start at x = 2");
    const auto& first = rows.front();
    out.require(std::abs(first.exact - 0.75) <= 1e-12, "exact(2) != 0.75");
    out.require(std::abs(first.bound_new - 0.75) <= 1e-12, "bound_new(2) != 0.75");
    out.require(std::abs(first.bound_old - 0.75) <= 1e-12, "bound_old(2) != 0.75");

    double max_dev = 0.0;
    bool ordered = true;
    bool found_x3 = false;
    const double root3_half = std::sqrt(3.0) / 2.0;
    for (const auto& row : rows) {
        const double x = row.exponent;
        const double exact_ref = std::pow(root3_half, x);
        const double new_ref = (1.0 + x / 2.0 + x * x / 4.0) * std::pow(0.5, x);
        const double old_ref = 3.0 * std::pow(0.5, x);
        max_dev = std::max({max_dev, std::abs(row.exact - exact_ref),
                            std::abs(row.bound_new - new_ref), std::abs(row.bound_old - old_ref)});
        ordered = ordered && row.exact >= row.bound_new - 1e-12 &&
                  row.bound_new >= row.bound_old - 1e-12;
        if (std::abs(x - 3.0) < 1e-9) {
            found_x3 = true;
            out.require(std::abs(row.exact - 0.649519053) <= 1e-9, "exact(3) != 0.649519053");
            out.require(std::abs(row.bound_new - 0.59375) <= 1e-12, "bound_new(3) != 0.59375");
            out.require(std::abs(row.bound_old - 0.375) <= 1e-12, "bound_old(3) != 0.375");
        }
    }
    out.require(found_x3, "grid must contain x = 3");
    out.require(max_dev <= 1e-9, "pipeline deviates from the closed expressions by " + fmt(max_dev));
    out.require(ordered, "row ordering exact >= bound_new >= bound_old broken");

    const auto tmp = std::filesystem::temp_directory_path() / "wmono_acc_fig1.csv";
    cli::FigureOptions fopts;
    fopts.which = 1;
    fopts.out_path = tmp;
    std::ostringstream sink, err;
    out.require(cli::cmd_figure(fopts, sink, err) == cli::kExitOk, "cmd_figure failed");

    const double elapsed = seconds_since(start);
    out.require(elapsed < 1.0, "took " + fmt(elapsed) + " s (limit 1 s)");
    out.detail = "161 rows, max closed-form deviation " + fmt(max_dev) + ", " + fmt(elapsed) + " s" +
                 (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion2_figure2() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    const auto rows = cli::figure_rows(2, cli::default_grid(2));

    double max_dev = 0.0;
    bool strict = true;
    bool found_y1 = false;
    const double root3_half = std::sqrt(3.0) / 2.0;
    for (const auto& row : rows) {
        const double y = row.exponent;
        const double exact_ref = std::pow(root3_half, y);
        const double new_ref = std::pow(0.5, y);
        const double old_ref = 3.0 * std::pow(0.5, y);
        max_dev = std::max({max_dev, std::abs(row.exact - exact_ref),
                            std::abs(row.bound_new - new_ref), std::abs(row.bound_old - old_ref)});
        strict = strict && row.exact < row.bound_new && row.bound_new < row.bound_old;
        if (std::abs(y + 1.0) < 1e-9) {
            found_y1 = true;
            out.require(std::abs(row.exact - 1.154700538) <= 1e-9, "exact(-1) != 1.154700538");
            out.require(std::abs(row.bound_new - 2.0) <= 1e-9, "bound_new(-1) != 2");
            out.require(std::abs(row.bound_old - 6.0) <= 1e-9, "bound_old(-1) != 6");
        }
    }
    out.require(found_y1, "grid must contain y = -1");
    out.require(max_dev <= 1e-9, "pipeline deviates from the closed expressions by " + fmt(max_dev));
    out.require(strict, "strict ordering exact < bound_new < bound_old broken");

    const double elapsed = seconds_since(start);
    out.require(elapsed < 1.0, "took " + fmt(elapsed) + " s (limit 1 s)");
    out.detail = std::to_string(rows.size()) + " rows, max closed-form deviation " + fmt(max_dev) +
                 ", " + fmt(elapsed) + " s" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion3_closed_vs_oracle() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();

    double max_pair_dev = 0.0;
    double max_block_dev = 0.0;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        std::mt19937_64 rng(verify::trial_seed(1003, trial));
        const std::size_t n = 3 + rng() % 4;
        const auto c = verify::sample_wclass(n, rng);
        const auto psi = build_state(c);
        for (std::size_t i = 1; i < n; ++i) {
            const DensityMatrix pair(reduce_pure(psi, {0, i}), DimList::qubits(2));
            max_pair_dev = std::max(max_pair_dev, std::abs(concurrence_two_qubit(pair) -
                                                           pair_concurrence_closed(c, i)));
        }
        const double closed = block_concurrence_closed(c, SubsystemSelection::full(n));
        const double pure = concurrence_pure(psi, Bipartition::first_vs_rest(n));
        max_block_dev = std::max(max_block_dev, std::abs(closed - pure));
    }
    out.require(max_pair_dev <= 1e-10, "pair closed vs spin-flip " + fmt(max_pair_dev));
    out.require(max_block_dev <= 1e-12, "full-block closed vs pure " + fmt(max_block_dev));

    double worst_low = 0.0, worst_high = 0.0;
    for (std::size_t trial = 0; trial < 100; ++trial) {
        std::mt19937_64 rng(verify::trial_seed(1013, trial));
        const std::size_t n = 4 + rng() % 3;
        const auto c = verify::sample_wclass(n, rng);
        SubsystemSelection sel;
        const std::size_t size = 1 + rng() % (n - 2); // proper sub-block
        std::vector<std::size_t> all(n - 1);
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
        for (std::size_t i = 0; i < size; ++i) {
            const std::size_t pick = i + rng() % (all.size() - i);
            std::swap(all[i], all[pick]);
            sel.block.push_back(all[i]);
        }
        std::sort(sel.block.begin(), sel.block.end());
        const double closed = block_concurrence_closed(c, sel);
        const double est = verify::convex_roof_oracle(reduce(c, sel),
                                                      verify::RoofObjective::Minimize,
                                                      verify::RoofMeasure::Concurrence, {},
                                                      verify::trial_seed(1013, trial))
                               .value;
        worst_low = std::max(worst_low, closed - est);
        worst_high = std::max(worst_high, est - closed);
    }
    out.require(worst_low <= 1e-9, "oracle undercut the closed block value by " + fmt(worst_low));
    out.require(worst_high <= 2e-3, "oracle exceeded the closed block value by " + fmt(worst_high));

    const double elapsed = seconds_since(start);
    out.require(elapsed < 300.0, "took " + fmt(elapsed) + " s (limit 300 s)");
    out.detail = "pair dev " + fmt(max_pair_dev) + ", block dev " + fmt(max_block_dev) +
                 ", oracle [-" + fmt(worst_low) + ", +" + fmt(worst_high) + "], " + fmt(elapsed) +
                 " s" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion4_coa_oracle() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    double worst_over = 0.0, worst_under = 0.0;
    for (std::size_t trial = 0; trial < 100; ++trial) {
        std::mt19937_64 rng(verify::trial_seed(1023, trial));
        const auto rho = verify::sample_two_qubit_density(2, rng);
        const double closed = coa_two_qubit(rho);
        const double est = verify::convex_roof_oracle(rho, verify::RoofObjective::Maximize,
                                                      verify::RoofMeasure::Concurrence, {},
                                                      verify::trial_seed(1023, trial))
                               .value;
        worst_over = std::max(worst_over, est - closed);
        worst_under = std::max(worst_under, closed - est);
    }
    out.require(worst_over <= 1e-9, "search exceeded the spectral value by " + fmt(worst_over));
    out.require(worst_under <= 1e-3, "search fell short of the spectral value by " + fmt(worst_under));

    const double elapsed = seconds_since(start);
    out.require(elapsed < 120.0, "took " + fmt(elapsed) + " s (limit 120 s)");
    out.detail = "100 rank-2 states, search in [-" + fmt(worst_under) + ", +" + fmt(worst_over) +
                 "], " + fmt(elapsed) + " s" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion5_ckw() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        std::mt19937_64 rng(verify::trial_seed(1033, trial));
        const std::size_t n = 3 + rng() % 4;
        worst = std::max(worst, verify::ckw_saturation_check(verify::sample_wclass(n, rng)));
    }
    out.require(worst <= 1e-10, "saturation defect " + fmt(worst));

    const double elapsed = seconds_since(start);
    out.require(elapsed < 60.0, "took " + fmt(elapsed) + " s (limit 60 s)");
    out.detail = "1000 states, max defect " + fmt(worst) + ", " + fmt(elapsed) + " s" +
                 (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

// Shared by criteria 6-8: the default fuzz configuration.
const verify::FuzzSummary& default_fuzz_summary(double* seconds = nullptr) {
    static double cached_seconds = 0.0;
    static const verify::FuzzSummary summary = [] {
        const auto start = std::chrono::steady_clock::now();
        verify::FuzzConfig cfg; // 10^4 trials, grids {2,2.5,3,5,8} / {-0.5,-1,-2,-5}
        auto s = verify::run_fuzz(cfg);
        cached_seconds = seconds_since(start);
        return s;
    }();
    if (seconds) *seconds = cached_seconds;
    return summary;
}

Outcome criterion6_soundness() {
    Outcome out;
    double fuzz_seconds = 0.0;
    const auto& summary = default_fuzz_summary(&fuzz_seconds);
    const auto start = std::chrono::steady_clock::now();

    for (const auto& [id, tally] : summary.per_inequality) {
        out.require(tally.violated == 0,
                    id + " violated " + std::to_string(tally.violated) + " times (worst seed " +
                        std::to_string(tally.worst_seed) + ")");
        out.require(tally.applicable >= 1, id + " never became applicable");
    }

    out.require(summary.oracle_checks >= 1, "no inline oracle cross-checks ran");
    out.require(summary.max_oracle_deviation <= 2e-3,
                "inline oracle deviation " + fmt(summary.max_oracle_deviation));

    verify::FuzzConfig mutated;
    mutated.trials = 300;
    mutated.weight_base_scale = 2.0;
    const auto broken = verify::run_fuzz(mutated);
    out.require(broken.total_violations() >= 1,
                "corrupting the weight base went undetected");

    const double elapsed = fuzz_seconds + seconds_since(start);
    out.require(elapsed < 900.0, "took " + fmt(elapsed) + " s (limit 900 s)");
    out.detail = std::to_string(summary.trials) + " trials, 0 violations, mutation caught " +
                 std::to_string(broken.total_violations()) + " violations, " + fmt(elapsed) + " s" +
                 (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion7_tightness() {
    Outcome out;
    const auto& summary = default_fuzz_summary();
    out.require(summary.weighted_dominance_ok,
                "weighted bound fell below the plain power sum, or failed strictness off x = 2");
    out.require(summary.min_weighted_vs_baseline >= -1e-15,
                "min(weighted - plain) = " + fmt(summary.min_weighted_vs_baseline));
    out.require(summary.averaged_scaling_exact,
                "averaged bound is not exactly the plain sum divided by m-1");
    out.detail = "min(weighted - plain) " + fmt(summary.min_weighted_vs_baseline) +
                 ", averaged scaling exact" + (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

Outcome criterion8_measure_identities() {
    Outcome out;
    const auto& summary = default_fuzz_summary();
    out.require(summary.max_pair_closed_vs_wootters <= 1e-10,
                "pair closed vs spin-flip " + fmt(summary.max_pair_closed_vs_wootters));
    out.require(summary.max_pair_identity_gap <= 1e-10,
                "pair C vs C_a spread " + fmt(summary.max_pair_identity_gap));
    out.require(summary.max_block_closed_vs_pure <= 1e-9,
                "block closed vs pure routes " + fmt(summary.max_block_closed_vs_pure));

    double worst = 0.0;
    for (std::size_t trial = 0; trial < 500; ++trial) {
        std::mt19937_64 rng(verify::trial_seed(1043, trial));
        const auto psi = verify::sample_pure_state(2, rng);
        const auto cut = Bipartition::first_vs_rest(2);
        worst = std::max(worst,
                         std::abs(concurrence_pure(psi, cut) - negativity_pure(psi, cut)));
    }
    out.require(worst <= 1e-10, "pure two-qubit C vs N " + fmt(worst));
    out.detail = "pair gap " + fmt(summary.max_pair_identity_gap) + ", pure C vs N " + fmt(worst) +
                 (out.detail.empty() ? "" : "; " + out.detail);
    return out;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 worked example, x >= 2 curves", criterion1_figure1},
        {"2 worked example, y < 0 curves", criterion2_figure2},
        {"3 closed forms vs decomposition search", criterion3_closed_vs_oracle},
        {"4 assistance value vs maximizing search", criterion4_coa_oracle},
        {"5 squared-concurrence saturation", criterion5_ckw},
        {"6 soundness fuzz with mutation check", criterion6_soundness},
        {"7 tightness dominance over the prior bounds", criterion7_tightness},
        {"8 measure identities", criterion8_measure_identities},
    };

    int failures = 0;
    for (const auto& [label, fn] : criteria) {
        const Outcome out = fn();
        if (!out.pass) ++failures;
        std::printf("[%s] criterion %s%s%s\n", out.pass ? "PASS" : "FAIL", label.c_str(),
                    out.detail.empty() ? "" : ": ", out.detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
