#pragma once

#include "wmono/wclass.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wmono::monogamy {

/// Power applied to a measure. Lower-bound evaluators require value >= 2,
/// upper-bound evaluators require value < 0.
struct Exponent {
    double value;
};

enum class Direction { GreaterEqual, StrictLess };

struct HypothesisFlag {
    std::string name;
    bool ok;
};

/// One evaluated inequality. margin = lhs - rhs, so >=-type bounds carry a
/// non-negative margin when satisfied and <-type bounds a negative one.
struct InequalityReport {
    std::string id;
    double exponent = 0.0;
    Direction direction = Direction::GreaterEqual;
    double lhs_value = 0.0; // unpowered bipartite measure
    double lhs = 0.0;       // lhs_value^exponent
    double rhs = 0.0;
    double baseline_rhs = 0.0; // unweighted prior bound on the same values
    double margin = 0.0;
    bool satisfied = false;
    std::vector<HypothesisFlag> hypotheses;
    std::string lhs_source = "closed-form";
    int t_used = -1;

    bool applicable() const;
    /// margin for >=-type, -margin for <-type: positive distance = safe.
    double distance_to_violation() const;
};

enum class OrderingStatus { AllOrdered, SplitFound, NoValidSplit, TrivialSmall };

/// Hypothesis pattern of a block: position i (1-based, i = 1..m-2) compares
/// the pair concurrence C(rho_{AB_{j_i}}) against the downstream block value.
/// Two readings of the downstream value are kept: the A|block concurrence of
/// the remaining qubits (primary, used for gating) and the next pair value.
struct OrderingProfile {
    SubsystemSelection block;
    std::vector<double> pair_values;       // position i-1 -> C(rho_{AB_{j_i}})
    std::vector<double> downstream_values; // k -> C(A | j_{k+1}..j_{m-1}); [0] = whole block
    std::vector<bool> ge_ok, le_ok;        // primary reading, positions 1..m-2
    std::vector<bool> alt_ge_ok, alt_le_ok; // next-pair reading
    OrderingStatus status = OrderingStatus::TrivialSmall;
    int t = 0;          // largest valid split when status == SplitFound
    bool forced = false; // t was imposed by the caller, not derived

    std::size_t m() const { return pair_values.size() + 1; }
    bool all_ordered() const { return status == OrderingStatus::AllOrdered; }
    bool split_valid() const { return status == OrderingStatus::SplitFound; }
    double block_value() const { return downstream_values.front(); }

    OrderingProfile with_forced_split(int forced_t) const;
};

/// Pair and downstream concurrences from the closed forms, ties counting as
/// satisfying ">="; picks the largest valid split.
OrderingProfile check_ordering(const WClassCoefficients& c, const SubsystemSelection& block);

/// Harness-sensitivity hook: scales the geometric weight base (x/2) of the
/// weighted evaluators. 1.0 everywhere outside mutation tests.
struct EvalOptions {
    double weight_base_scale = 1.0;
    double slack = 1e-12;
};

/// Sum of pairs[i]^x (prior unweighted lower bound). Requires x >= 2.
double coa_lower_baseline(std::span<const double> pairs, Exponent x);

/// Report forms of the prior assistance bounds on a block.
InequalityReport coa_lower_eq4(std::span<const double> pairs, Exponent x, double lhs_value,
                               const EvalOptions& opts = {});
InequalityReport coa_upper_eq5(std::span<const double> pairs, Exponent y, double lhs_value,
                               const EvalOptions& opts = {});

/// Weighted lower bound with split t: weights 1, x/2, ..., (x/2)^{t-1} on the
/// first t terms, (x/2)^{t+1} on the middle group, (x/2)^t on the last term.
InequalityReport coa_lower_th1(std::span<const double> pairs, const OrderingProfile& profile,
                               Exponent x, const EvalOptions& opts = {});

/// Fully ordered variant: weights (x/2)^{i-1} throughout.
InequalityReport coa_lower_th2(std::span<const double> pairs, const OrderingProfile& profile,
                               Exponent x, const EvalOptions& opts = {});

/// Upper bound (1/(m-1)) sum pairs[i]^y for y < 0; strict. All pairs must be
/// nonzero (a single zero routes to remark_cyclic).
InequalityReport coa_upper_th3(std::span<const double> pairs, const OrderingProfile& profile,
                               Exponent y, std::optional<double> lhs_override = std::nullopt,
                               const EvalOptions& opts = {});

/// Zero-pair variant of the upper bound: the vanishing pair is removed, the
/// remaining qubit set is an exact (m-1)-qubit reduction, and the averaged
/// bound applies with constant 1/(m-2).
InequalityReport remark_cyclic(std::span<const double> nonzero_pairs, Exponent y, std::size_t m,
                               double lhs_value, const EvalOptions& opts = {});

/// lhs^x >= sum values[i]^x for any N-qubit state, x >= 2.
InequalityReport neg_lower_lemma2(std::span<const double> values, Exponent x, double lhs,
                                  const EvalOptions& opts = {});

/// CREN analog of the split-weighted lower bound.
InequalityReport neg_lower_lemma3(std::span<const double> values, const OrderingProfile& profile,
                                  Exponent x, double lhs, const EvalOptions& opts = {});

/// lhs^x < (1/(N-1)) sum values[i]^x for x < 0.
InequalityReport neg_upper_lemma4(std::span<const double> values, Exponent x, double lhs,
                                  const EvalOptions& opts = {});

/// CRENOA mirrors of the three theorem shapes.
InequalityReport crenoa_th4(std::span<const double> values, const OrderingProfile& profile,
                            Exponent x, double lhs, const EvalOptions& opts = {});
InequalityReport crenoa_th5(std::span<const double> values, const OrderingProfile& profile,
                            Exponent x, double lhs, const EvalOptions& opts = {});
InequalityReport crenoa_th6(std::span<const double> values, Exponent y, double lhs,
                            const EvalOptions& opts = {});
InequalityReport crenoa_remark(std::span<const double> nonzero_values, Exponent y, std::size_t m,
                               double lhs_value, const EvalOptions& opts = {});

/// Prior concurrence bounds: the split-weighted lower form (alpha >= 2) and
/// the 1/(N-1)-averaged upper form (alpha < 0). Whichever form the exponent
/// does not fit is returned with its exponent-domain flag down.
std::pair<InequalityReport, InequalityReport> concurrence_baselines(
    std::span<const double> values, Exponent alpha, double lhs, std::size_t m_split,
    const OrderingProfile* ordering = nullptr, const EvalOptions& opts = {});

/// Stable identifiers used by the CLI and CSV output.
const std::vector<std::string>& all_inequality_ids();

namespace detail {
/// RHS of the split-weighted bound over values^x with weight base scaled.
double t_split_rhs(std::span<const double> values, int t, double x, double base_scale);
/// RHS of the fully ordered bound: sum (x/2)^{i-1} values[i]^x.
double ordered_rhs(std::span<const double> values, double x, double base_scale);
double power_sum(std::span<const double> values, double exponent);
} // namespace detail

} // namespace wmono::monogamy
