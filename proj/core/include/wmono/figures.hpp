#pragma once

#include "wmono/monogamy.hpp"

#include <filesystem>
#include <span>
#include <vector>

namespace wmono::cli {

/// One grid point of a bound-comparison curve.
struct FigureRow {
    double exponent;
    double exact;     // assistance value of the full A|B1B2B3 cut, powered
    double bound_new; // weighted bound (figure 1) / averaged bound (figure 2)
    double bound_old; // plain power-sum bound
};

/// Defaults when the caller gives no grid: figure 1 covers x in [2, 10],
/// figure 2 covers y in [-10, -0.05], both with step 0.05.
struct FigureGrid {
    double from;
    double to;
    double step;
};

FigureGrid default_grid(int which);

/// Curves for the uniform 4-qubit W state, computed through the full
/// state -> measures -> bound-evaluator pipeline. which = 1 uses the split
/// bound at t = 1 for x >= 2; which = 2 the averaged upper bound for y < 0.
std::vector<FigureRow> figure_rows(int which, const FigureGrid& grid);

/// CSV with header "exponent,exact,bound_new,bound_old", 9 significant
/// digits, written atomically (temp file + rename).
void write_figure_csv(const std::filesystem::path& path, std::span<const FigureRow> rows);

std::string format_sig9(double value);

} // namespace wmono::cli
