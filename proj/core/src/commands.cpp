#include "wmono/commands.hpp"

#include "wmono/measures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace wmono::cli {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("WMONO_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<std::uint64_t>(v);
    }
    return 42;
}

namespace {

const char* status_name(monogamy::OrderingStatus s) {
    switch (s) {
        case monogamy::OrderingStatus::AllOrdered: return "all-ordered";
        case monogamy::OrderingStatus::SplitFound: return "split-found";
        case monogamy::OrderingStatus::NoValidSplit: return "no-valid-split";
        case monogamy::OrderingStatus::TrivialSmall: return "trivial-small";
    }
    return "?";
}

void print_report(std::ostream& out, const monogamy::InequalityReport& r) {
    out << std::left << std::setw(8) << r.id << " e=" << std::setw(6) << format_sig9(r.exponent)
        << " lhs=" << std::setw(13) << format_sig9(r.lhs) << " rhs=" << std::setw(13)
        << format_sig9(r.rhs) << " baseline=" << std::setw(13) << format_sig9(r.baseline_rhs)
        << " margin=" << std::setw(14) << format_sig9(r.margin)
        << (r.direction == monogamy::Direction::GreaterEqual ? " [>=]" : " [< ]");
    if (!r.applicable())
        out << " not-applicable" << (r.satisfied ? " (holds anyway)" : "");
    else
        out << (r.satisfied ? " satisfied" : " VIOLATED");
    if (r.t_used >= 0) out << " t=" << r.t_used;
    out << " lhs:" << r.lhs_source << "\n";
    bool any_failed = std::any_of(r.hypotheses.begin(), r.hypotheses.end(),
                                  [](const auto& f) { return !f.ok; });
    if (any_failed) {
        out << "         hypotheses:";
        for (const auto& f : r.hypotheses) out << " [" << f.name << ": " << (f.ok ? "ok" : "FAILED") << "]";
        out << "\n";
    }
}

void print_profile(std::ostream& out, const monogamy::OrderingProfile& profile) {
    out << "ordering: block =";
    for (auto j : profile.block.block) out << " " << j;
    out << "  (m=" << profile.m() << ", status=" << status_name(profile.status)
        << ", t=" << profile.t << (profile.forced ? ", forced" : "") << ")\n";
    for (std::size_t i = 1; i < profile.pair_values.size(); ++i) {
        out << "  pos " << i << ": pair=" << format_sig9(profile.pair_values[i - 1])
            << " vs downstream-block=" << format_sig9(profile.downstream_values[i]) << " ["
            << (profile.ge_ok[i - 1] ? ">=" : "") << (profile.le_ok[i - 1] ? "<=" : "")
            << "]  vs next-pair=" << format_sig9(profile.pair_values[i]) << " ["
            << (profile.alt_ge_ok[i - 1] ? ">=" : "") << (profile.alt_le_ok[i - 1] ? "<=" : "")
            << "]\n";
    }
}

bool id_selected(const std::vector<std::string>& filter, const std::string& id) {
    return filter.empty() || std::find(filter.begin(), filter.end(), id) != filter.end();
}

} // namespace

int cmd_evaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& err) {
    std::optional<StateSpec> parsed;
    try {
        parsed = parse_state_file(opts.state_file);
    } catch (const std::exception& e) {
        err << opts.state_file.string() << ": " << e.what() << "\n";
        return kExitUsage;
    }
    const StateSpec& spec = *parsed;
    const auto& c = spec.coefficients;
    const std::size_t n = c.n_qubits();
    const SubsystemSelection block = spec.block.value_or(SubsystemSelection::full(n));
    const bool full_block = block.block.size() == n - 1;

    for (const auto& id : opts.ids)
        if (std::find(monogamy::all_inequality_ids().begin(), monogamy::all_inequality_ids().end(),
                      id) == monogamy::all_inequality_ids().end()) {
            err << "unknown inequality id '" << id << "'\n";
            return kExitUsage;
        }
    for (double x : opts.x_values)
        if (!(x >= 2.0)) {
            err << "--x values must be >= 2\n";
            return kExitUsage;
        }
    for (double y : opts.y_values)
        if (!(y < 0.0)) {
            err << "--y values must be < 0\n";
            return kExitUsage;
        }

    auto profile = monogamy::check_ordering(c, block);
    if (spec.t) profile = profile.with_forced_split(*spec.t);
    const auto& pairs = profile.pair_values;
    const double lhs_closed = profile.block_value();
    const std::size_t count = pairs.size();
    const std::size_t zeros =
        static_cast<std::size_t>(std::count(pairs.begin(), pairs.end(), 0.0));

    const PureState psi = build_state(c);
    out << "state: " << n << " qubits";
    if (full_block)
        out << ", full block\n";
    else
        out << ", sub-block of size " << count << "\n";

    std::vector<MeasureValue> block_measures{{MeasureKind::Concurrence, lhs_closed}};
    if (full_block) {
        const auto cut = Bipartition::first_vs_rest(n);
        block_measures.push_back(
            {MeasureKind::ConcurrenceOfAssistance, concurrence_pure(psi, cut)});
        block_measures.push_back({MeasureKind::Negativity, negativity_pure(psi, cut)});
    }
    out << "measures (A|block):";
    for (const auto& m : block_measures)
        out << " " << measure_symbol(m.kind) << "=" << format_sig9(m.value);
    out << (full_block ? "  (pure cut: C = C_a = N_c = N_a)\n" : "  (closed form)\n");
    out << "pair values:";
    for (double p : pairs) out << " " << format_sig9(p);
    out << "\n";
    print_profile(out, profile);

    // <-type LHS for proper sub-blocks: optionally tightened by the
    // decomposition search (estimates the assistance value from below).
    std::optional<double> upper_lhs;
    if (opts.oracle_lhs && !full_block) {
        const auto oracle = verify::convex_roof_oracle(
            reduce(c, block), verify::RoofObjective::Maximize, verify::RoofMeasure::Concurrence,
            opts.oracle_budget, opts.seed.value_or(default_seed()));
        upper_lhs = oracle.value;
        out << "assistance estimate for A|block (decomposition search, " << opts.oracle_budget.starts
            << " starts): " << format_sig9(oracle.value) << "\n";
    }
    const double upper_lhs_value = upper_lhs.value_or(lhs_closed);
    const std::string upper_source = upper_lhs ? "oracle" : "closed-form";

    std::vector<monogamy::InequalityReport> reports;
    auto add = [&](monogamy::InequalityReport r, const std::string& source = "") {
        if (!source.empty()) r.lhs_source = source;
        reports.push_back(std::move(r));
    };

    for (double xv : opts.x_values) {
        const monogamy::Exponent x{xv};
        if (id_selected(opts.ids, "th1")) add(monogamy::coa_lower_th1(pairs, profile, x));
        if (id_selected(opts.ids, "th2")) add(monogamy::coa_lower_th2(pairs, profile, x));
        if (id_selected(opts.ids, "th4"))
            add(monogamy::crenoa_th4(pairs, profile, x, lhs_closed), "closed-form");
        if (id_selected(opts.ids, "th5"))
            add(monogamy::crenoa_th5(pairs, profile, x, lhs_closed), "closed-form");
        if (id_selected(opts.ids, "lem2"))
            add(monogamy::neg_lower_lemma2(pairs, x, lhs_closed), "closed-form");
        if (id_selected(opts.ids, "lem3"))
            add(monogamy::neg_lower_lemma3(pairs, profile, x, lhs_closed), "closed-form");
        if (id_selected(opts.ids, "eq4")) add(monogamy::coa_lower_eq4(pairs, x, lhs_closed));
        if (id_selected(opts.ids, "eq2")) {
            auto both = monogamy::concurrence_baselines(pairs, x, lhs_closed,
                                                        std::max(profile.t, 1), &profile);
            add(std::move(both.first), "closed-form");
        }
    }
    for (double yv : opts.y_values) {
        const monogamy::Exponent y{yv};
        if (zeros == 0) {
            if (id_selected(opts.ids, "th3"))
                add(monogamy::coa_upper_th3(pairs, profile, y, upper_lhs));
            if (id_selected(opts.ids, "th6"))
                add(monogamy::crenoa_th6(pairs, y, upper_lhs_value), upper_source);
            if (id_selected(opts.ids, "lem4"))
                add(monogamy::neg_upper_lemma4(pairs, y, lhs_closed), "closed-form");
            if (id_selected(opts.ids, "eq5")) add(monogamy::coa_upper_eq5(pairs, y, lhs_closed));
            if (id_selected(opts.ids, "eq3")) {
                auto both = monogamy::concurrence_baselines(pairs, y, lhs_closed, 1, &profile);
                add(std::move(both.second), "closed-form");
            }
            if (id_selected(opts.ids, "remark1") || id_selected(opts.ids, "remark2"))
                out << "remark1/remark2 skipped at e=" << format_sig9(yv)
                    << ": they need exactly one vanishing pair value\n";
        } else if (zeros == 1 && count >= 2) {
            std::vector<double> nonzero;
            for (double p : pairs)
                if (p != 0.0) nonzero.push_back(p);
            if (id_selected(opts.ids, "remark1"))
                add(monogamy::remark_cyclic(nonzero, y, count + 1, lhs_closed));
            if (id_selected(opts.ids, "remark2"))
                add(monogamy::crenoa_remark(nonzero, y, count + 1, upper_lhs_value), upper_source);
            for (const char* id : {"th3", "th6", "lem4", "eq5", "eq3"})
                if (id_selected(opts.ids, id))
                    out << id << " skipped at e=" << format_sig9(yv)
                        << ": a pair value vanishes; remark1/remark2 cover that case\n";
        } else {
            out << "upper bounds skipped at e=" << format_sig9(yv) << ": " << zeros
                << " pair values vanish\n";
        }
    }

    out << "\n";
    bool violation = false;
    for (const auto& r : reports) {
        print_report(out, r);
        if (r.applicable() && !r.satisfied) violation = true;
    }
    return violation ? kExitViolation : kExitOk;
}

int cmd_figure(const FigureOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        FigureGrid grid = default_grid(opts.which);
        if (opts.from) grid.from = *opts.from;
        if (opts.to) grid.to = *opts.to;
        if (opts.step) grid.step = *opts.step;
        const auto rows = figure_rows(opts.which, grid);
        write_figure_csv(opts.out_path, rows);
        out << "figure " << opts.which << ": wrote " << rows.size() << " rows to "
            << opts.out_path.string() << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "figure: " << e.what() << "\n";
        return kExitUsage;
    }
}

std::string fuzz_summary_csv(const verify::FuzzSummary& summary) {
    std::ostringstream os;
    os << "id,applicable,satisfied,violated,worst_distance,worst_exponent,worst_seed\n";
    for (const auto& [id, tally] : summary.per_inequality) {
        os << id << ',' << tally.applicable << ',' << tally.satisfied << ',' << tally.violated
           << ',';
        if (tally.applicable > 0)
            os << format_sig9(tally.worst_distance) << ',' << format_sig9(tally.worst_exponent)
               << ',' << tally.worst_seed;
        else
            os << ",,";
        os << '\n';
    }
    return os.str();
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    verify::FuzzConfig cfg;
    cfg.seed = opts.seed.value_or(default_seed());
    cfg.trials = opts.trials;
    cfg.min_qubits = opts.min_qubits;
    cfg.max_qubits = opts.max_qubits;
    cfg.id_filter = opts.ids;
    for (const auto& id : opts.ids)
        if (std::find(monogamy::all_inequality_ids().begin(), monogamy::all_inequality_ids().end(),
                      id) == monogamy::all_inequality_ids().end()) {
            err << "unknown inequality id '" << id << "'\n";
            return kExitUsage;
        }

    const auto summary = verify::run_fuzz(cfg);

    out << "fuzz: trials=" << summary.trials << " seed=" << summary.seed << " qubits=["
        << cfg.min_qubits << "," << cfg.max_qubits << "]\n";
    out << std::left << std::setw(9) << "id" << std::right << std::setw(12) << "applicable"
        << std::setw(12) << "satisfied" << std::setw(10) << "violated" << std::setw(16)
        << "worst_dist" << std::setw(10) << "worst_e" << std::setw(22) << "worst_seed" << "\n";
    for (const auto& [id, tally] : summary.per_inequality) {
        out << std::left << std::setw(9) << id << std::right << std::setw(12) << tally.applicable
            << std::setw(12) << tally.satisfied << std::setw(10) << tally.violated;
        if (tally.applicable > 0)
            out << std::setw(16) << format_sig9(tally.worst_distance) << std::setw(10)
                << format_sig9(tally.worst_exponent) << std::setw(22) << tally.worst_seed;
        else
            out << std::setw(16) << "-" << std::setw(10) << "-" << std::setw(22) << "-";
        out << "\n";
    }
    out << "identity deviations: pair closed vs spin-flip="
        << format_sig9(summary.max_pair_closed_vs_wootters)
        << "  pair C vs C_a=" << format_sig9(summary.max_pair_identity_gap)
        << "  block closed vs pure routes=" << format_sig9(summary.max_block_closed_vs_pure)
        << "  ckw defect=" << format_sig9(summary.max_ckw_defect) << "\n";
    out << "oracle cross-checks: " << summary.oracle_checks
        << "  max |closed - search|=" << format_sig9(summary.max_oracle_deviation) << "\n";
    out << "dominance: min(weighted rhs - plain rhs)="
        << format_sig9(summary.min_weighted_vs_baseline)
        << (summary.weighted_dominance_ok ? " [ok]" : " [BROKEN]")
        << "  averaged scaling exact: " << (summary.averaged_scaling_exact ? "yes" : "NO") << "\n";
    out << "violations: " << summary.total_violations() << "\n\n";

    const std::string csv = fuzz_summary_csv(summary);
    out << csv;
    if (opts.csv_path) {
        const std::filesystem::path tmp = opts.csv_path->string() + ".tmp";
        {
            std::ofstream f(tmp);
            if (!f) {
                err << "cannot write " << tmp.string() << "\n";
                return kExitUsage;
            }
            f << csv;
        }
        std::filesystem::rename(tmp, *opts.csv_path);
    }
    return summary.total_violations() == 0 ? kExitOk : kExitViolation;
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> known{"concurrence", "coa", "cren", "crenoa", "block"};
    std::vector<std::string> measures = opts.measures.empty() ? known : opts.measures;
    for (const auto& m : measures)
        if (std::find(known.begin(), known.end(), m) == known.end()) {
            err << "unknown measure '" << m << "' (use concurrence, coa, cren, crenoa, block)\n";
            return kExitUsage;
        }
    if (opts.rank < 1 || opts.rank > 4) {
        err << "--rank must be in 1..4\n";
        return kExitUsage;
    }

    const std::uint64_t master = opts.seed.value_or(default_seed());
    out << std::left << std::setw(12) << "measure" << std::right << std::setw(8) << "trials"
        << std::setw(16) << "max |closed-o|" << std::setw(18) << "one-sided breach" << "\n";

    bool breach_found = false;
    for (std::size_t mi = 0; mi < measures.size(); ++mi) {
        const auto& name = measures[mi];
        double max_abs_dev = 0.0;
        double max_breach = 0.0; // oracle crossing the side it must not cross
        for (std::size_t trial = 0; trial < opts.trials; ++trial) {
            const std::uint64_t tseed =
                verify::trial_seed(master ^ (0x9e3779b97f4a7c15ULL * (mi + 1)), trial);
            std::mt19937_64 rng(tseed);

            double closed = 0.0;
            double estimate = 0.0;
            bool oracle_is_upper = true; // min-search overshoots, max-search undershoots
            if (name == "block") {
                const std::size_t n = 4 + rng() % 3;
                WClassCoefficients c = verify::sample_wclass(n, rng);
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
                closed = block_concurrence_closed(c, sel);
                estimate = verify::convex_roof_oracle(reduce(c, sel),
                                                      verify::RoofObjective::Minimize,
                                                      verify::RoofMeasure::Concurrence,
                                                      opts.budget, tseed)
                               .value;
                oracle_is_upper = true;
            } else {
                const DensityMatrix rho = verify::sample_two_qubit_density(opts.rank, rng);
                if (name == "concurrence") {
                    closed = concurrence_two_qubit(rho);
                    estimate = verify::convex_roof_oracle(rho, verify::RoofObjective::Minimize,
                                                          verify::RoofMeasure::Concurrence,
                                                          opts.budget, tseed)
                                   .value;
                    oracle_is_upper = true;
                } else if (name == "coa") {
                    closed = coa_two_qubit(rho);
                    estimate = verify::convex_roof_oracle(rho, verify::RoofObjective::Maximize,
                                                          verify::RoofMeasure::Concurrence,
                                                          opts.budget, tseed)
                                   .value;
                    oracle_is_upper = false;
                } else if (name == "cren") {
                    closed = cren_two_qubit(rho);
                    estimate = verify::convex_roof_oracle(rho, verify::RoofObjective::Minimize,
                                                          verify::RoofMeasure::Negativity,
                                                          opts.budget, tseed)
                                   .value;
                    oracle_is_upper = true;
                } else { // crenoa
                    closed = crenoa_two_qubit(rho);
                    estimate = verify::convex_roof_oracle(rho, verify::RoofObjective::Maximize,
                                                          verify::RoofMeasure::Negativity,
                                                          opts.budget, tseed)
                                   .value;
                    oracle_is_upper = false;
                }
            }
            max_abs_dev = std::max(max_abs_dev, std::abs(estimate - closed));
            const double breach = oracle_is_upper ? closed - estimate : estimate - closed;
            max_breach = std::max(max_breach, breach);
        }
        out << std::left << std::setw(12) << name << std::right << std::setw(8) << opts.trials
            << std::setw(16) << format_sig9(max_abs_dev) << std::setw(18)
            << format_sig9(max_breach) << "\n";
        if (max_breach > 1e-9) breach_found = true;
    }
    return breach_found ? kExitViolation : kExitOk;
}

} // namespace wmono::cli
