#include "wmono/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wmono::verify {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    std::uint64_t s = master_seed;
    const std::uint64_t mixed = splitmix64(s);
    s = mixed ^ (trial_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

namespace {

double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace

double gaussian(std::mt19937_64& rng) {
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

WClassCoefficients sample_wclass(std::size_t n, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("W-class sample needs n >= 2");
    const Complex a{gaussian(rng), gaussian(rng)};
    std::vector<Complex> b(n);
    for (auto& v : b) v = Complex{gaussian(rng), gaussian(rng)};
    return WClassCoefficients::normalized(n, a, std::move(b));
}

PureState sample_pure_state(std::size_t n, std::mt19937_64& rng) {
    std::vector<Complex> amp(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto& v : amp) {
        v = Complex{gaussian(rng), gaussian(rng)};
        norm2 += std::norm(v);
    }
    const double s = 1.0 / std::sqrt(norm2);
    for (auto& v : amp) v *= s;
    return PureState(std::move(amp));
}

DensityMatrix sample_two_qubit_density(std::size_t rank, std::mt19937_64& rng) {
    if (rank < 1 || rank > 4) throw std::invalid_argument("rank must be in 1..4");
    ComplexMatrix rho(4, 4);
    for (std::size_t k = 0; k < rank; ++k) {
        std::array<Complex, 4> g;
        for (auto& v : g) v = Complex{gaussian(rng), gaussian(rng)};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) rho(i, j) += g[i] * std::conj(g[j]);
    }
    const double tr = rho.trace().real();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rho(i, j) /= tr;
    return DensityMatrix(std::move(rho), DimList::qubits(2));
}

namespace {

struct RoofWorkspace {
    std::size_t dim, d_a, d_b, rank;
    RoofMeasure measure;
    std::vector<std::vector<Complex>> scaled_eigvecs; // sqrt(lambda_k) v_k
    std::vector<Complex> w;                           // scratch, dim
    std::vector<Complex> rho_a;                       // scratch, d_a x d_a
};

// Probability-weighted pure-state measure of one unnormalized member w.
// For a qubit on side A both measures reduce to 2 sqrt(det(W W^dag)) with W
// the 2 x d_b amplitude matrix; Cauchy-Binet turns that determinant into a
// cancellation-free sum of squared 2x2 minors.
double term_value(RoofWorkspace& ws) {
    if (ws.d_a == 2) {
        const Complex* w0 = ws.w.data();
        const Complex* w1 = ws.w.data() + ws.d_b;
        double det = 0.0;
        for (std::size_t i = 0; i + 1 < ws.d_b; ++i)
            for (std::size_t j = i + 1; j < ws.d_b; ++j)
                det += std::norm(w0[i] * w1[j] - w0[j] * w1[i]);
        return 2.0 * std::sqrt(det);
    }

    auto& r = ws.rho_a;
    std::fill(r.begin(), r.end(), Complex{});
    for (std::size_t al = 0; al < ws.d_a; ++al)
        for (std::size_t be = al; be < ws.d_a; ++be) {
            Complex s{};
            const Complex* wa = ws.w.data() + al * ws.d_b;
            const Complex* wb = ws.w.data() + be * ws.d_b;
            for (std::size_t b = 0; b < ws.d_b; ++b) s += wa[b] * std::conj(wb[b]);
            r[al * ws.d_a + be] = s;
            r[be * ws.d_a + al] = std::conj(s);
        }
    double p = 0.0;
    for (std::size_t al = 0; al < ws.d_a; ++al) p += r[al * ws.d_a + al].real();

    if (ws.measure == RoofMeasure::Concurrence) {
        double purity = 0.0;
        for (const auto& v : r) purity += std::norm(v);
        return std::sqrt(std::max(0.0, 2.0 * (p * p - purity)));
    }
    ComplexMatrix m(ws.d_a, ws.d_a);
    for (std::size_t i = 0; i < ws.d_a; ++i)
        for (std::size_t j = 0; j < ws.d_a; ++j) m(i, j) = r[i * ws.d_a + j];
    const auto eig = hermitian_eig(m);
    double root_sum = 0.0;
    for (double lam : eig.eigenvalues) root_sum += std::sqrt(std::max(lam, 0.0));
    return root_sum * root_sum - p;
}

double decomposition_average(RoofWorkspace& ws, const std::vector<Complex>& t, std::size_t length) {
    double total = 0.0;
    for (std::size_t i = 0; i < length; ++i) {
        std::fill(ws.w.begin(), ws.w.end(), Complex{});
        for (std::size_t k = 0; k < ws.rank; ++k) {
            const Complex coef = t[i * ws.rank + k];
            if (coef == Complex{}) continue;
            const auto& u = ws.scaled_eigvecs[k];
            for (std::size_t d = 0; d < ws.dim; ++d) ws.w[d] += coef * u[d];
        }
        total += term_value(ws);
    }
    return total;
}

// Column-wise modified Gram-Schmidt; columns span the mixing isometry.
bool orthonormalize_columns(std::vector<Complex>& t, std::size_t length, std::size_t rank) {
    for (std::size_t k = 0; k < rank; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex proj{};
            for (std::size_t i = 0; i < length; ++i)
                proj += std::conj(t[i * rank + j]) * t[i * rank + k];
            for (std::size_t i = 0; i < length; ++i) t[i * rank + k] -= proj * t[i * rank + j];
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < length; ++i) norm2 += std::norm(t[i * rank + k]);
        if (norm2 < 1e-24) return false;
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < length; ++i) t[i * rank + k] *= inv;
    }
    return true;
}

struct RoofCandidate {
    double value;
    std::vector<Complex> t;
    std::size_t length;
};

} // namespace

OracleResult convex_roof_oracle(const DensityMatrix& rho, RoofObjective objective,
                                RoofMeasure measure, const OracleBudget& budget,
                                std::uint64_t seed) {
    if (budget.starts == 0) throw std::invalid_argument("oracle budget must be positive");
    const auto& tol = default_tolerances();
    const auto eig = hermitian_eig(rho.matrix(), tol);

    std::size_t rank = 0;
    while (rank < eig.eigenvalues.size() && eig.eigenvalues[rank] > tol.eigenvalue_clamp) ++rank;
    if (rank == 0) throw std::invalid_argument("input has no positive eigenvalues");
    if (rank > 4) throw std::invalid_argument("oracle supports rank <= 4 only");

    RoofWorkspace ws;
    ws.dim = rho.dimension();
    ws.d_a = rho.dims().dim(0);
    ws.d_b = ws.dim / ws.d_a;
    ws.rank = rank;
    ws.measure = measure;
    ws.w.resize(ws.dim);
    ws.rho_a.resize(ws.d_a * ws.d_a);
    ws.scaled_eigvecs.resize(rank);
    for (std::size_t k = 0; k < rank; ++k) {
        ws.scaled_eigvecs[k].resize(ws.dim);
        const double root = std::sqrt(eig.eigenvalues[k]);
        for (std::size_t i = 0; i < ws.dim; ++i)
            ws.scaled_eigvecs[k][i] = root * eig.eigenvectors(i, k);
    }

    std::mt19937_64 rng(seed);
    const bool maximize = objective == RoofObjective::Maximize;
    auto better = [maximize](double a, double b) { return maximize ? a > b : a < b; };

    const std::size_t min_length = std::max<std::size_t>(2, rank);
    const std::size_t max_length = 2 * rank;
    const std::size_t n_lengths = max_length - min_length + 1;

    OracleResult result;
    auto& diag = result.diagnostics;
    std::vector<RoofCandidate> top;
    RoofCandidate best{maximize ? -1.0 : std::numeric_limits<double>::infinity(), {}, 0};

    auto consider = [&](double value, const std::vector<Complex>& t, std::size_t length) {
        if (top.empty() || better(value, best.value)) {
            best = RoofCandidate{value, t, length};
            diag.improvement_trace.emplace_back(diag.evaluations, value);
        }
        const std::size_t cap = std::max<std::size_t>(1, budget.refine_candidates);
        auto pos = std::find_if(top.begin(), top.end(),
                                [&](const RoofCandidate& c) { return better(value, c.value); });
        if (pos != top.end() || top.size() < cap) {
            top.insert(pos, RoofCandidate{value, t, length});
            if (top.size() > cap) top.pop_back();
        }
    };

    // Deterministic first candidate: the eigendecomposition itself.
    {
        std::vector<Complex> t(min_length * rank, Complex{});
        for (std::size_t k = 0; k < rank; ++k) t[k * rank + k] = 1.0;
        const double v = decomposition_average(ws, t, min_length);
        ++diag.evaluations;
        consider(v, t, min_length);
    }

    std::vector<Complex> t;
    for (std::size_t s = 0; s + 1 < budget.starts; ++s) {
        const std::size_t length = min_length + (s % n_lengths);
        t.assign(length * rank, Complex{});
        for (auto& v : t) v = Complex{gaussian(rng), gaussian(rng)};
        if (!orthonormalize_columns(t, length, rank)) continue;
        const double v = decomposition_average(ws, t, length);
        ++diag.evaluations;
        consider(v, t, length);
    }

    // Local refinement of the retained candidates.
    for (const auto& seed_candidate : top) {
        RoofCandidate current = seed_candidate;
        double step = 0.25;
        for (std::size_t it = 0; it < budget.refine_steps; ++it) {
            t = current.t;
            for (auto& v : t) v += step * Complex{gaussian(rng), gaussian(rng)};
            if (!orthonormalize_columns(t, current.length, rank)) continue;
            const double v = decomposition_average(ws, t, current.length);
            ++diag.evaluations;
            if (better(v, current.value)) {
                current.value = v;
                current.t = t;
                step = std::min(step * 1.1, 0.5);
                if (better(v, best.value)) {
                    best = current;
                    diag.improvement_trace.emplace_back(diag.evaluations, v);
                }
            } else {
                step = std::max(step * 0.93, 1e-6);
            }
        }
    }

    result.value = best.value;
    diag.best_length = best.length;
    for (std::size_t i = 0; i < best.length; ++i) {
        std::vector<Complex> member(ws.dim, Complex{});
        for (std::size_t k = 0; k < rank; ++k) {
            const Complex coef = best.t[i * rank + k];
            for (std::size_t d = 0; d < ws.dim; ++d) member[d] += coef * ws.scaled_eigvecs[k][d];
        }
        double p = 0.0;
        for (const auto& v : member) p += std::norm(v);
        if (p < 1e-15) continue;
        const double inv = 1.0 / std::sqrt(p);
        for (auto& v : member) v *= inv;
        result.decomposition.push_back(DecompositionTerm{p, std::move(member)});
    }
    return result;
}

double ckw_saturation_check(const WClassCoefficients& c) {
    const PureState psi = build_state(c);
    const std::size_t n = c.n_qubits();
    const double block = concurrence_pure(psi, Bipartition::first_vs_rest(n));
    double pair_squares = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const DensityMatrix pair(reduce_pure(psi, {0, i}), DimList::qubits(2));
        const double conc = concurrence_two_qubit(pair);
        pair_squares += conc * conc;
    }
    return std::abs(block * block - pair_squares);
}

std::size_t FuzzSummary::total_violations() const {
    std::size_t total = 0;
    for (const auto& [id, tally] : per_inequality) total += tally.violated;
    return total;
}

namespace {

std::string describe_coefficients(const WClassCoefficients& c) {
    std::ostringstream os;
    os.precision(17);
    os << "n=" << c.n_qubits() << " a=(" << c.a().real() << "," << c.a().imag() << ") b=[";
    for (std::size_t i = 0; i < c.b().size(); ++i) {
        if (i) os << " ";
        os << "(" << c.b()[i].real() << "," << c.b()[i].imag() << ")";
    }
    os << "]";
    return os.str();
}

std::vector<SubsystemSelection> enumerate_blocks(std::size_t n, std::size_t cap,
                                                 std::mt19937_64& rng) {
    const std::size_t n_b = n - 1;
    const std::size_t total = (std::size_t{1} << n_b) - 1;
    std::vector<SubsystemSelection> blocks;
    auto from_mask = [n_b](std::size_t mask) {
        SubsystemSelection sel;
        for (std::size_t bit = 0; bit < n_b; ++bit)
            if (mask & (std::size_t{1} << bit)) sel.block.push_back(bit + 1);
        return sel;
    };
    if (n <= 5) {
        for (std::size_t mask = 1; mask <= total; ++mask) blocks.push_back(from_mask(mask));
    } else {
        std::set<std::size_t> chosen;
        const std::size_t want = std::min(cap, total);
        std::size_t attempts = 0;
        while (chosen.size() < want && attempts < 50 * want) {
            chosen.insert(1 + rng() % total);
            ++attempts;
        }
        for (auto mask : chosen) blocks.push_back(from_mask(mask));
    }
    return blocks;
}

class Aggregator {
  public:
    Aggregator(FuzzSummary& summary, const std::vector<std::string>& filter)
        : summary_(summary), filter_(filter) {}

    void set_trial(std::uint64_t seed, const WClassCoefficients* c) {
        trial_seed_ = seed;
        coefficients_ = c;
    }

    void add(const monogamy::InequalityReport& report) {
        if (!filter_.empty() &&
            std::find(filter_.begin(), filter_.end(), report.id) == filter_.end())
            return;
        if (!report.applicable()) return;
        auto& tally = summary_.per_inequality[report.id];
        ++tally.applicable;
        if (report.satisfied)
            ++tally.satisfied;
        else
            ++tally.violated;
        const double dist = report.distance_to_violation();
        if (dist < tally.worst_distance) {
            tally.worst_distance = dist;
            tally.worst_exponent = report.exponent;
            tally.worst_seed = trial_seed_;
            tally.worst_coefficients = coefficients_ ? describe_coefficients(*coefficients_) : "";
        }
    }

  private:
    FuzzSummary& summary_;
    const std::vector<std::string>& filter_;
    std::uint64_t trial_seed_ = 0;
    const WClassCoefficients* coefficients_ = nullptr;
};

} // namespace

FuzzSummary run_fuzz(const FuzzConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("fuzz needs at least one trial");
    if (cfg.min_qubits < 2 || cfg.max_qubits < cfg.min_qubits || cfg.max_qubits > 12)
        throw std::invalid_argument("qubit range must satisfy 2 <= min <= max <= 12");
    for (double x : cfg.x_grid)
        if (!(x >= 2.0)) throw std::invalid_argument("x grid values must be >= 2");
    for (double y : cfg.y_grid)
        if (!(y < 0.0)) throw std::invalid_argument("y grid values must be < 0");

    FuzzSummary summary;
    summary.seed = cfg.seed;
    summary.trials = cfg.trials;
    for (const auto& id : monogamy::all_inequality_ids())
        if (cfg.id_filter.empty() ||
            std::find(cfg.id_filter.begin(), cfg.id_filter.end(), id) != cfg.id_filter.end())
            summary.per_inequality[id]; // ensure a row even if never applicable

    Aggregator agg(summary, cfg.id_filter);
    const monogamy::EvalOptions opts{cfg.weight_base_scale, default_tolerances().report_slack};

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t tseed = trial_seed(cfg.seed, trial);
        std::mt19937_64 rng(tseed);
        const std::size_t n =
            cfg.min_qubits + (cfg.max_qubits > cfg.min_qubits
                                  ? rng() % (cfg.max_qubits - cfg.min_qubits + 1)
                                  : 0);
        WClassCoefficients c = sample_wclass(n, rng);

        if (cfg.zero_injection_period > 0 &&
            trial % cfg.zero_injection_period == cfg.zero_injection_period - 1) {
            const std::size_t zero_index = 1 + rng() % (n - 1);
            if (1.0 - std::norm(c.b()[zero_index]) > 1e-9) {
                std::vector<Complex> b = c.b();
                b[zero_index] = 0.0;
                c = WClassCoefficients::normalized(n, c.a(), std::move(b));
            }
        }
        agg.set_trial(tseed, &c);

        // Pipeline identity checks on the sampled state (closed forms vs the
        // spin-flip and reduced-density routes).
        const PureState psi = build_state(c);
        const Bipartition cut_a = Bipartition::first_vs_rest(n);
        const double c_pure = concurrence_pure(psi, cut_a);
        const double n_pure = negativity_pure(psi, cut_a);
        const double closed_full =
            block_concurrence_closed(c, SubsystemSelection::full(n));
        summary.max_block_closed_vs_pure =
            std::max({summary.max_block_closed_vs_pure, std::abs(closed_full - c_pure),
                      std::abs(closed_full - n_pure)});

        double pair_square_sum = 0.0;
        for (std::size_t i = 1; i < n; ++i) {
            const DensityMatrix pair(reduce_pure(psi, {0, i}), DimList::qubits(2));
            const auto lam = spin_flip_lambdas(pair);
            const double conc = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
            const double coa = lam[0] + lam[1] + lam[2] + lam[3];
            const double closed_pair = pair_concurrence_closed(c, i);
            summary.max_pair_closed_vs_wootters =
                std::max(summary.max_pair_closed_vs_wootters, std::abs(conc - closed_pair));
            summary.max_pair_identity_gap =
                std::max(summary.max_pair_identity_gap, std::abs(coa - conc));
            pair_square_sum += conc * conc;
        }
        summary.max_ckw_defect =
            std::max(summary.max_ckw_defect, std::abs(c_pure * c_pure - pair_square_sum));

        if (cfg.oracle_check_period > 0 && n >= 4 &&
            trial % cfg.oracle_check_period == cfg.oracle_check_period - 1) {
            SubsystemSelection sel;
            const std::size_t size = 1 + rng() % (n - 2); // proper sub-block
            std::vector<std::size_t> candidates(n - 1);
            for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i + 1;
            for (std::size_t i = 0; i < size; ++i) {
                const std::size_t pick = i + rng() % (candidates.size() - i);
                std::swap(candidates[i], candidates[pick]);
                sel.block.push_back(candidates[i]);
            }
            std::sort(sel.block.begin(), sel.block.end());
            const double closed = block_concurrence_closed(c, sel);
            const double est =
                convex_roof_oracle(reduce(c, sel), RoofObjective::Minimize,
                                   RoofMeasure::Concurrence, cfg.oracle_budget, rng())
                    .value;
            summary.max_oracle_deviation =
                std::max(summary.max_oracle_deviation, std::abs(est - closed));
            ++summary.oracle_checks;
        }

        for (const auto& sel : enumerate_blocks(n, cfg.max_blocks_per_state, rng)) {
            const auto profile = monogamy::check_ordering(c, sel);
            const auto& pairs = profile.pair_values;
            const double lhs_value = profile.block_value();
            const std::size_t count = pairs.size();
            const int split_for_eq2 = profile.t >= 1 ? profile.t : 1;

            for (double x : cfg.x_grid) {
                const monogamy::Exponent ex{x};
                const auto eq4 = monogamy::coa_lower_eq4(pairs, ex, lhs_value, opts);
                agg.add(eq4);
                agg.add(monogamy::neg_lower_lemma2(pairs, ex, lhs_value, opts));

                const auto th1 = monogamy::coa_lower_th1(pairs, profile, ex, opts);
                agg.add(th1);
                agg.add(monogamy::neg_lower_lemma3(pairs, profile, ex, lhs_value, opts));
                agg.add(monogamy::crenoa_th4(pairs, profile, ex, lhs_value, opts));
                const auto [eq2, eq3_unused] = monogamy::concurrence_baselines(
                    pairs, ex, lhs_value, split_for_eq2, &profile, opts);
                agg.add(eq2);
                agg.add(eq3_unused);

                const auto th2 = monogamy::coa_lower_th2(pairs, profile, ex, opts);
                agg.add(th2);
                agg.add(monogamy::crenoa_th5(pairs, profile, ex, lhs_value, opts));

                // Dominance of the weighted bounds over the plain power sum.
                for (const auto* rep : {&th1, &th2}) {
                    if (!rep->applicable()) continue;
                    const double diff = rep->rhs - eq4.rhs;
                    summary.min_weighted_vs_baseline =
                        std::min(summary.min_weighted_vs_baseline, diff);
                    if (x == 2.0) {
                        if (std::abs(diff) > 1e-12 * std::max(1.0, std::abs(eq4.rhs)))
                            summary.weighted_dominance_ok = false;
                    } else {
                        const double tail = eq4.rhs - std::pow(pairs[0], x);
                        if (diff < 0.0 || (tail > 1e-12 && diff <= 1e-12))
                            summary.weighted_dominance_ok = false;
                    }
                }
            }

            const std::size_t zeros =
                static_cast<std::size_t>(std::count(pairs.begin(), pairs.end(), 0.0));
            for (double y : cfg.y_grid) {
                const monogamy::Exponent ey{y};
                if (zeros == 0) {
                    const auto eq5 = monogamy::coa_upper_eq5(pairs, ey, lhs_value, opts);
                    agg.add(eq5);
                    const auto th3 = monogamy::coa_upper_th3(pairs, profile, ey, {}, opts);
                    agg.add(th3);
                    agg.add(monogamy::crenoa_th6(pairs, ey, lhs_value, opts));
                    agg.add(monogamy::neg_upper_lemma4(pairs, ey, lhs_value, opts));
                    const auto [eq2_unused, eq3] = monogamy::concurrence_baselines(
                        pairs, ey, lhs_value, split_for_eq2, &profile, opts);
                    agg.add(eq3);
                    agg.add(eq2_unused);
                    if (th3.applicable() &&
                        th3.rhs != eq5.rhs / static_cast<double>(count))
                        summary.averaged_scaling_exact = false;
                } else if (zeros == 1 && count >= 2) {
                    std::vector<double> nonzero;
                    nonzero.reserve(count - 1);
                    for (double v : pairs)
                        if (v != 0.0) nonzero.push_back(v);
                    agg.add(monogamy::remark_cyclic(nonzero, ey, count + 1, lhs_value, opts));
                    agg.add(monogamy::crenoa_remark(nonzero, ey, count + 1, lhs_value, opts));
                }
            }
        }
    }
    return summary;
}

} // namespace wmono::verify
