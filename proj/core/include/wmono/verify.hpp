#pragma once

#include "wmono/measures.hpp"
#include "wmono/monogamy.hpp"
#include "wmono/wclass.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace wmono::verify {

/// SplitMix64 step; used to derive independent per-trial seeds from a master
/// seed so trials can run in any order or in parallel.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Standard normal via Box-Muller on the raw mt19937_64 stream; keeps the
/// sample sequence independent of libstdc++'s distribution internals.
double gaussian(std::mt19937_64& rng);

/// Coefficients drawn uniformly from the unit sphere in C^{N+1}.
WClassCoefficients sample_wclass(std::size_t n, std::mt19937_64& rng);

/// Haar-like random pure state on n qubits (normalized complex Gaussian).
PureState sample_pure_state(std::size_t n, std::mt19937_64& rng);

/// Random rank-limited two-qubit density matrix (mixture of Gaussian rays).
DensityMatrix sample_two_qubit_density(std::size_t rank, std::mt19937_64& rng);

enum class RoofObjective { Minimize, Maximize };
enum class RoofMeasure { Concurrence, Negativity };

struct OracleBudget {
    std::size_t starts = 20000;      // random isometry candidates
    std::size_t refine_steps = 200;  // hill-climb proposals per retained candidate
    std::size_t refine_candidates = 3;
};

struct DecompositionTerm {
    double probability;
    std::vector<Complex> state; // normalized
};

struct OracleDiagnostics {
    std::size_t evaluations = 0;
    std::size_t best_length = 0;
    std::vector<std::pair<std::size_t, double>> improvement_trace; // (evaluation, value)
};

struct OracleResult {
    double value = 0.0;
    std::vector<DecompositionTerm> decomposition;
    OracleDiagnostics diagnostics;
};

/// Randomized search over pure-state decompositions of rho (rank <= 4),
/// averaging the pure-state measure across the cut factor-0 | rest.
/// Decompositions of length L (2 <= L <= 2 rank) are generated by isometric
/// mixing of the eigendecomposition, then refined by accepted perturbations.
/// Minimization returns an upper bound on the convex roof, maximization a
/// lower bound on the assistance value.
OracleResult convex_roof_oracle(const DensityMatrix& rho, RoofObjective objective,
                                RoofMeasure measure, const OracleBudget& budget,
                                std::uint64_t seed);

/// |C^2(A|all) - sum_i C^2(rho_{AB_i})| computed through the pure-state and
/// spin-flip pipelines, not the closed forms. Expected ~0 for W-class states.
double ckw_saturation_check(const WClassCoefficients& c);

struct FuzzConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 10000;
    std::size_t min_qubits = 3;
    std::size_t max_qubits = 6;
    std::vector<double> x_grid = {2.0, 2.5, 3.0, 5.0, 8.0};
    std::vector<double> y_grid = {-0.5, -1.0, -2.0, -5.0};
    std::vector<std::string> id_filter; // empty = all ids
    std::size_t max_blocks_per_state = 20; // cap for n_qubits > 5
    std::size_t zero_injection_period = 4; // every k-th trial zeroes one b amplitude
    std::size_t oracle_check_period = 50;  // every k-th trial cross-checks one sub-block
    OracleBudget oracle_budget{2000, 100, 2};
    double weight_base_scale = 1.0; // harness-sensitivity mutation hook
};

struct InequalityTally {
    std::size_t applicable = 0;
    std::size_t satisfied = 0;
    std::size_t violated = 0;
    double worst_distance = std::numeric_limits<double>::infinity();
    double worst_exponent = 0.0;
    std::uint64_t worst_seed = 0;
    std::string worst_coefficients;
};

struct FuzzSummary {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::map<std::string, InequalityTally> per_inequality;

    // measure-identity deviations collected along the way
    double max_pair_closed_vs_wootters = 0.0; // closed pair value vs spin-flip concurrence
    double max_pair_identity_gap = 0.0;       // spread of C, C_a, N_c, N_a on pair reductions
    double max_block_closed_vs_pure = 0.0;    // closed block value vs pure-state routes
    double max_ckw_defect = 0.0;
    double max_oracle_deviation = 0.0; // closed sub-block value vs decomposition search
    std::size_t oracle_checks = 0;

    // dominance bookkeeping across applicable reports
    double min_weighted_vs_baseline = std::numeric_limits<double>::infinity();
    bool weighted_dominance_ok = true;  // weighted rhs >= unweighted rhs, strict off x=2
    bool averaged_scaling_exact = true; // th3 rhs equals eq5 rhs / (m-1) bitwise

    std::size_t total_violations() const;
};

/// Samples W-class states, enumerates blocks (all for N <= 5, a random cap
/// above), gates every inequality on its hypothesis flags and aggregates.
/// Violations are data, not errors. Deterministic for a fixed config.
FuzzSummary run_fuzz(const FuzzConfig& cfg);

} // namespace wmono::verify
