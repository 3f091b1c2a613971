#include "wmono/figures.hpp"

#include "wmono/measures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace wmono::cli {

FigureGrid default_grid(int which) {
    if (which == 1) return {2.0, 10.0, 0.05};
    if (which == 2) return {-10.0, -0.05, 0.05};
    throw std::invalid_argument("figure must be 1 or 2");
}

namespace {

void validate_grid(int which, const FigureGrid& grid) {
    if (!(grid.step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (!(grid.from <= grid.to)) throw std::invalid_argument("grid has from > to");
    if (which == 1) {
        if (grid.from < 2.0 || grid.to > 10.0)
            throw std::invalid_argument("figure 1 exponents must lie in [2, 10]");
    } else if (which == 2) {
        if (grid.from < -10.0 || !(grid.to < 0.0))
            throw std::invalid_argument("figure 2 exponents must lie in [-10, 0)");
    } else {
        throw std::invalid_argument("figure must be 1 or 2");
    }
}

} // namespace

std::vector<FigureRow> figure_rows(int which, const FigureGrid& grid) {
    validate_grid(which, grid);

    // Uniform 4-qubit W state, everything below goes through the pipeline.
    const WClassCoefficients w4(4, Complex{0.0, 0.0},
                                {Complex{0.5, 0.0}, Complex{0.5, 0.0}, Complex{0.5, 0.0},
                                 Complex{0.5, 0.0}});
    const PureState psi = build_state(w4);
    const double exact_base = concurrence_pure(psi, Bipartition::first_vs_rest(4));

    const SubsystemSelection full = SubsystemSelection::full(4);
    std::vector<double> pairs;
    for (std::size_t i = 1; i <= 3; ++i) {
        const DensityMatrix pair = reduce(w4, SubsystemSelection{{i}});
        pairs.push_back(concurrence_two_qubit(pair));
    }
    const auto profile = monogamy::check_ordering(w4, full).with_forced_split(1);

    std::vector<FigureRow> rows;
    for (std::size_t k = 0;; ++k) {
        const double e = grid.from + static_cast<double>(k) * grid.step;
        if (e > grid.to + 1e-12) break;
        FigureRow row{};
        row.exponent = e;
        row.exact = std::pow(exact_base, e);
        if (which == 1) {
            row.bound_new = monogamy::coa_lower_th1(pairs, profile, {e}).rhs;
            row.bound_old = monogamy::coa_lower_baseline(pairs, {e});
        } else {
            const auto report = monogamy::coa_upper_th3(pairs, profile, {e});
            row.bound_new = report.rhs;
            row.bound_old = report.baseline_rhs;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string format_sig9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

void write_figure_csv(const std::filesystem::path& path, std::span<const FigureRow> rows) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << "exponent,exact,bound_new,bound_old\n";
        for (const auto& row : rows)
            out << format_sig9(row.exponent) << ',' << format_sig9(row.exact) << ','
                << format_sig9(row.bound_new) << ',' << format_sig9(row.bound_old) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

} // namespace wmono::cli
