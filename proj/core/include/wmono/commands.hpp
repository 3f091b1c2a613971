#pragma once

#include "wmono/figures.hpp"
#include "wmono/statefile.hpp"
#include "wmono/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>

namespace wmono::cli {

// Stable exit-status contract.
inline constexpr int kExitOk = 0;        // success / all applicable bounds satisfied
inline constexpr int kExitViolation = 1; // an applicable inequality was violated
inline constexpr int kExitUsage = 2;     // usage or parse error

/// WMONO_SEED environment variable when set to an integer, 42 otherwise.
std::uint64_t default_seed();

struct EvaluateOptions {
    std::filesystem::path state_file;
    std::vector<std::string> ids;           // empty = every inequality
    std::vector<double> x_values{2.0, 3.0}; // exponents for >=-type bounds
    std::vector<double> y_values{-1.0};     // exponents for <-type bounds
    bool oracle_lhs = false; // refine <-type LHS of proper sub-blocks by decomposition search
    verify::OracleBudget oracle_budget{2000, 100, 2};
    std::optional<std::uint64_t> seed;
};
int cmd_evaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& err);

struct FigureOptions {
    int which = 1;
    std::optional<double> from;
    std::optional<double> to;
    std::optional<double> step;
    std::filesystem::path out_path;
};
int cmd_figure(const FigureOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::optional<std::uint64_t> seed;
    std::size_t trials = 10000;
    std::size_t min_qubits = 3;
    std::size_t max_qubits = 6;
    std::vector<std::string> ids; // empty = every inequality
    std::optional<std::filesystem::path> csv_path;
};
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct OracleOptions {
    std::vector<std::string> measures; // subset of {concurrence, coa, cren, crenoa, block}
    std::size_t rank = 2;
    std::size_t trials = 100;
    verify::OracleBudget budget;
    std::optional<std::uint64_t> seed;
};
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);

/// Summary CSV rows shared by cmd_verify's stdout block and --csv file.
std::string fuzz_summary_csv(const verify::FuzzSummary& summary);

} // namespace wmono::cli
