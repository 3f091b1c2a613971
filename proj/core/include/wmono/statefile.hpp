#pragma once

#include "wmono/wclass.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wmono::cli {

/// Parse failure with the 1-based line it happened on.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Key-value state description:
///   n_qubits = 4
///   a = 0,0
///   b = 0.5,0 0.5,0 0.5,0 0.5,0
///   block = 1 2 3      (optional)
///   t = 1              (optional split override)
/// Complex tokens are "re,im" pairs; a bare "re" means zero imaginary part.
/// '#' starts a comment.
struct StateSpec {
    WClassCoefficients coefficients;
    std::optional<SubsystemSelection> block;
    std::optional<int> t;
};

StateSpec parse_state_text(std::string_view text);
StateSpec parse_state_file(const std::filesystem::path& path);

} // namespace wmono::cli
