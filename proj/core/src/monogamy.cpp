#include "wmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wmono::monogamy {

bool InequalityReport::applicable() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const HypothesisFlag& f) { return f.ok; });
}

double InequalityReport::distance_to_violation() const {
    return direction == Direction::GreaterEqual ? margin : -margin;
}

OrderingProfile OrderingProfile::with_forced_split(int forced_t) const {
    OrderingProfile p = *this;
    p.status = OrderingStatus::SplitFound;
    p.t = forced_t;
    p.forced = true;
    return p;
}

namespace detail {

double power_sum(std::span<const double> values, double exponent) {
    double s = 0.0;
    for (double v : values) s += std::pow(v, exponent);
    return s;
}

double t_split_rhs(std::span<const double> values, int t, double x, double base_scale) {
    const std::size_t count = values.size();
    if (count < 3 || t < 1 || t > static_cast<int>(count) - 2)
        throw std::invalid_argument("split index out of range for weighted bound");
    const double base = base_scale * x / 2.0;
    double rhs = 0.0;
    double w = 1.0;
    for (int i = 0; i < t; ++i) {
        rhs += w * std::pow(values[i], x);
        w *= base;
    }
    // w == base^t here
    const double middle_weight = w * base;
    for (std::size_t i = t; i + 1 < count; ++i) rhs += middle_weight * std::pow(values[i], x);
    rhs += w * std::pow(values[count - 1], x);
    return rhs;
}

double ordered_rhs(std::span<const double> values, double x, double base_scale) {
    const double base = base_scale * x / 2.0;
    double rhs = 0.0;
    double w = 1.0;
    for (double v : values) {
        rhs += w * std::pow(v, x);
        w *= base;
    }
    return rhs;
}

} // namespace detail

namespace {

bool split_pattern_ok(const OrderingProfile& p, int t) {
    const int comparisons = static_cast<int>(p.pair_values.size()) - 1;
    if (t < 1 || t > static_cast<int>(p.pair_values.size()) - 2) return false;
    for (int i = 1; i <= t; ++i)
        if (!p.ge_ok[i - 1]) return false;
    for (int k = t + 1; k <= comparisons; ++k)
        if (!p.le_ok[k - 1]) return false;
    return true;
}

bool fully_ordered(const OrderingProfile& p) {
    return std::all_of(p.ge_ok.begin(), p.ge_ok.end(), [](bool b) { return b; });
}

InequalityReport make_report(std::string id, Exponent e, Direction dir, double lhs_value,
                             double rhs, double baseline, std::vector<HypothesisFlag> flags,
                             const EvalOptions& opts, std::string lhs_source, int t_used = -1) {
    InequalityReport r;
    r.id = std::move(id);
    r.exponent = e.value;
    r.direction = dir;
    r.lhs_value = lhs_value;
    r.lhs = std::pow(lhs_value, e.value);
    r.rhs = rhs;
    r.baseline_rhs = baseline;
    r.margin = r.lhs - r.rhs;
    r.satisfied = dir == Direction::GreaterEqual ? r.margin >= -opts.slack
                                                 : r.margin <= opts.slack;
    r.hypotheses = std::move(flags);
    r.lhs_source = std::move(lhs_source);
    r.t_used = t_used;
    return r;
}

void require_lower_exponent(Exponent x) {
    if (!(x.value >= 2.0)) throw std::invalid_argument("lower-bound exponent must be >= 2");
}

void require_upper_exponent(Exponent y) {
    if (!(y.value < 0.0)) throw std::invalid_argument("upper-bound exponent must be < 0");
}

bool all_positive(std::span<const double> values) {
    return std::all_of(values.begin(), values.end(), [](double v) { return v > 0.0; });
}

// Shared core of the split-weighted lower bounds (th1 / lem3 / th4 / eq2).
InequalityReport split_weighted_lower(std::string id, std::span<const double> values,
                                      const OrderingProfile& profile, Exponent x, double lhs_value,
                                      std::string split_flag_name, const EvalOptions& opts,
                                      std::string lhs_source) {
    require_lower_exponent(x);
    const std::size_t count = values.size();
    const int t = profile.t;
    const bool ordering_ok = split_pattern_ok(profile, t);
    std::vector<HypothesisFlag> flags{
        {"exponent >= 2", x.value >= 2.0},
        {"block size >= 3", count >= 3},
        {std::move(split_flag_name), ordering_ok},
    };
    double rhs;
    int t_used = -1;
    if (count >= 3) {
        t_used = std::clamp(t, 1, static_cast<int>(count) - 2);
        rhs = detail::t_split_rhs(values, t_used, x.value, opts.weight_base_scale);
    } else {
        rhs = detail::ordered_rhs(values, x.value, opts.weight_base_scale);
    }
    const double baseline = detail::power_sum(values, x.value);
    return make_report(std::move(id), x, Direction::GreaterEqual, lhs_value, rhs, baseline,
                       std::move(flags), opts, std::move(lhs_source), t_used);
}

// Shared core of the fully ordered lower bounds (th2 / th5).
InequalityReport ordered_lower(std::string id, std::span<const double> values,
                               const OrderingProfile& profile, Exponent x, double lhs_value,
                               const EvalOptions& opts, std::string lhs_source) {
    require_lower_exponent(x);
    std::vector<HypothesisFlag> flags{
        {"exponent >= 2", x.value >= 2.0},
        {"all positions ordered", fully_ordered(profile)},
    };
    const double rhs = detail::ordered_rhs(values, x.value, opts.weight_base_scale);
    const double baseline = detail::power_sum(values, x.value);
    return make_report(std::move(id), x, Direction::GreaterEqual, lhs_value, rhs, baseline,
                       std::move(flags), opts, std::move(lhs_source));
}

// Shared core of the averaged strict upper bounds (th3 / lem4 / th6 / eq3).
InequalityReport averaged_upper(std::string id, std::span<const double> values, Exponent y,
                                double lhs_value, const EvalOptions& opts,
                                std::string lhs_source) {
    require_upper_exponent(y);
    const std::size_t count = values.size();
    std::vector<HypothesisFlag> flags{
        {"exponent < 0", y.value < 0.0},
        {"at least two pair terms", count >= 2},
        {"all pair values nonzero", all_positive(values)},
    };
    const double sum = detail::power_sum(values, y.value);
    const double rhs = sum / static_cast<double>(count);
    return make_report(std::move(id), y, Direction::StrictLess, lhs_value, rhs, sum,
                       std::move(flags), opts, std::move(lhs_source));
}

InequalityReport removed_term_upper(std::string id, std::span<const double> nonzero_values,
                                    Exponent y, std::size_t m, double lhs_value,
                                    const EvalOptions& opts) {
    require_upper_exponent(y);
    if (m < 3 || nonzero_values.size() != m - 2)
        throw std::invalid_argument("expected the m-2 pair values left after removing one zero");
    if (!all_positive(nonzero_values))
        throw std::invalid_argument("more than one vanishing pair value");
    std::vector<HypothesisFlag> flags{
        {"exponent < 0", y.value < 0.0},
        {"block size >= 3 after removal", m >= 4},
        {"exactly one vanishing pair", true},
    };
    const double sum = detail::power_sum(nonzero_values, y.value);
    const double rhs = sum / static_cast<double>(m - 2);
    return make_report(std::move(id), y, Direction::StrictLess, lhs_value, rhs, sum,
                       std::move(flags), opts, "closed-form");
}

} // namespace

OrderingProfile check_ordering(const WClassCoefficients& c, const SubsystemSelection& block) {
    block.validate(c.n_qubits());
    const std::size_t count = block.block.size();

    OrderingProfile p;
    p.block = block;
    p.pair_values.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        p.pair_values[i] = pair_concurrence_closed(c, block.block[i]);

    std::vector<double> suffix(count + 1, 0.0);
    for (std::size_t i = count; i-- > 0;)
        suffix[i] = suffix[i + 1] + std::norm(c.b()[block.block[i]]);
    const double b1 = std::abs(c.b()[0]);
    p.downstream_values.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        p.downstream_values[i] = 2.0 * b1 * std::sqrt(suffix[i]);

    if (count >= 2) {
        p.ge_ok.resize(count - 1);
        p.le_ok.resize(count - 1);
        p.alt_ge_ok.resize(count - 1);
        p.alt_le_ok.resize(count - 1);
        for (std::size_t i = 1; i < count; ++i) {
            p.ge_ok[i - 1] = p.pair_values[i - 1] >= p.downstream_values[i];
            p.le_ok[i - 1] = p.pair_values[i - 1] <= p.downstream_values[i];
            p.alt_ge_ok[i - 1] = p.pair_values[i - 1] >= p.pair_values[i];
            p.alt_le_ok[i - 1] = p.pair_values[i - 1] <= p.pair_values[i];
        }
    }

    int best_t = 0;
    for (int t = static_cast<int>(count) - 2; t >= 1; --t)
        if (split_pattern_ok(p, t)) {
            best_t = t;
            break;
        }
    p.t = best_t;

    if (count == 1 || fully_ordered(p))
        p.status = OrderingStatus::AllOrdered;
    else if (best_t >= 1)
        p.status = OrderingStatus::SplitFound;
    else if (count < 3)
        p.status = OrderingStatus::TrivialSmall;
    else
        p.status = OrderingStatus::NoValidSplit;
    return p;
}

double coa_lower_baseline(std::span<const double> pairs, Exponent x) {
    require_lower_exponent(x);
    return detail::power_sum(pairs, x.value);
}

InequalityReport coa_lower_eq4(std::span<const double> pairs, Exponent x, double lhs_value,
                               const EvalOptions& opts) {
    require_lower_exponent(x);
    std::vector<HypothesisFlag> flags{{"exponent >= 2", x.value >= 2.0}};
    const double rhs = detail::power_sum(pairs, x.value);
    return make_report("eq4", x, Direction::GreaterEqual, lhs_value, rhs, rhs, std::move(flags),
                       opts, "closed-form");
}

InequalityReport coa_upper_eq5(std::span<const double> pairs, Exponent y, double lhs_value,
                               const EvalOptions& opts) {
    require_upper_exponent(y);
    std::vector<HypothesisFlag> flags{
        {"exponent < 0", y.value < 0.0},
        {"at least two pair terms", pairs.size() >= 2},
        {"all pair values nonzero", all_positive(pairs)},
    };
    const double rhs = detail::power_sum(pairs, y.value);
    return make_report("eq5", y, Direction::StrictLess, lhs_value, rhs, rhs, std::move(flags),
                       opts, "closed-form");
}

InequalityReport coa_lower_th1(std::span<const double> pairs, const OrderingProfile& profile,
                               Exponent x, const EvalOptions& opts) {
    return split_weighted_lower("th1", pairs, profile, x, profile.block_value(),
                                "split ordering of pair vs downstream block", opts,
                                "closed-form");
}

InequalityReport coa_lower_th2(std::span<const double> pairs, const OrderingProfile& profile,
                               Exponent x, const EvalOptions& opts) {
    return ordered_lower("th2", pairs, profile, x, profile.block_value(), opts, "closed-form");
}

InequalityReport coa_upper_th3(std::span<const double> pairs, const OrderingProfile& profile,
                               Exponent y, std::optional<double> lhs_override,
                               const EvalOptions& opts) {
    if (std::any_of(pairs.begin(), pairs.end(), [](double v) { return v == 0.0; }))
        throw std::invalid_argument(
            "vanishing pair value; remove it and use remark_cyclic instead");
    const double lhs_value = lhs_override.value_or(profile.block_value());
    return averaged_upper("th3", pairs, y, lhs_value, opts,
                          lhs_override ? "oracle" : "closed-form");
}

InequalityReport remark_cyclic(std::span<const double> nonzero_pairs, Exponent y, std::size_t m,
                               double lhs_value, const EvalOptions& opts) {
    return removed_term_upper("remark1", nonzero_pairs, y, m, lhs_value, opts);
}

InequalityReport neg_lower_lemma2(std::span<const double> values, Exponent x, double lhs,
                                  const EvalOptions& opts) {
    require_lower_exponent(x);
    std::vector<HypothesisFlag> flags{{"exponent >= 2", x.value >= 2.0}};
    const double rhs = detail::power_sum(values, x.value);
    return make_report("lem2", x, Direction::GreaterEqual, lhs, rhs, rhs, std::move(flags), opts,
                       "caller");
}

InequalityReport neg_lower_lemma3(std::span<const double> values, const OrderingProfile& profile,
                                  Exponent x, double lhs, const EvalOptions& opts) {
    return split_weighted_lower("lem3", values, profile, x, lhs,
                                "split ordering of pair vs downstream block", opts, "caller");
}

InequalityReport neg_upper_lemma4(std::span<const double> values, Exponent x, double lhs,
                                  const EvalOptions& opts) {
    return averaged_upper("lem4", values, x, lhs, opts, "caller");
}

InequalityReport crenoa_th4(std::span<const double> values, const OrderingProfile& profile,
                            Exponent x, double lhs, const EvalOptions& opts) {
    return split_weighted_lower("th4", values, profile, x, lhs,
                                "split ordering of pair vs downstream block", opts, "caller");
}

InequalityReport crenoa_th5(std::span<const double> values, const OrderingProfile& profile,
                            Exponent x, double lhs, const EvalOptions& opts) {
    return ordered_lower("th5", values, profile, x, lhs, opts, "caller");
}

InequalityReport crenoa_th6(std::span<const double> values, Exponent y, double lhs,
                            const EvalOptions& opts) {
    return averaged_upper("th6", values, y, lhs, opts, "caller");
}

InequalityReport crenoa_remark(std::span<const double> nonzero_values, Exponent y, std::size_t m,
                               double lhs_value, const EvalOptions& opts) {
    return removed_term_upper("remark2", nonzero_values, y, m, lhs_value, opts);
}

std::pair<InequalityReport, InequalityReport> concurrence_baselines(
    std::span<const double> values, Exponent alpha, double lhs, std::size_t m_split,
    const OrderingProfile* ordering, const EvalOptions& opts) {
    if (!(alpha.value >= 2.0) && !(alpha.value < 0.0))
        throw std::invalid_argument("baseline exponent must be >= 2 or < 0");
    const std::size_t count = values.size();
    const bool lower_domain = alpha.value >= 2.0;

    InequalityReport lower;
    if (lower_domain) {
        const bool split_in_range = count >= 3 && m_split >= 1 && m_split <= count - 2;
        const bool ordering_ok =
            ordering ? split_pattern_ok(*ordering, static_cast<int>(m_split)) : split_in_range;
        std::vector<HypothesisFlag> flags{
            {"exponent >= 2", true},
            {"split in range", split_in_range},
            {ordering ? "split ordering of pair vs downstream block" : "ordering unchecked",
             ordering_ok},
        };
        const double rhs = split_in_range
                               ? detail::t_split_rhs(values, static_cast<int>(m_split),
                                                     alpha.value, opts.weight_base_scale)
                               : detail::ordered_rhs(values, alpha.value, opts.weight_base_scale);
        lower = make_report("eq2", alpha, Direction::GreaterEqual, lhs, rhs,
                            detail::power_sum(values, alpha.value), std::move(flags), opts,
                            "caller", split_in_range ? static_cast<int>(m_split) : -1);
    } else {
        lower = make_report("eq2", alpha, Direction::GreaterEqual, lhs, 0.0, 0.0,
                            {{"exponent >= 2", false}}, opts, "caller");
    }

    InequalityReport upper;
    if (!lower_domain) {
        upper = averaged_upper("eq3", values, alpha, lhs, opts, "caller");
    } else {
        upper = make_report("eq3", alpha, Direction::StrictLess, lhs, 0.0, 0.0,
                            {{"exponent < 0", false}}, opts, "caller");
    }
    return {std::move(lower), std::move(upper)};
}

const std::vector<std::string>& all_inequality_ids() {
    static const std::vector<std::string> ids{
        "th1", "th2", "th3", "th4", "th5", "th6", "lem2", "lem3",
        "lem4", "eq2", "eq3", "eq4", "eq5", "remark1", "remark2",
    };
    return ids;
}

} // namespace wmono::monogamy
