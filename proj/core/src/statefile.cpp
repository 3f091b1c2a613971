#include "wmono/statefile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace wmono::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view token, int line) {
    double value = 0.0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, "bad numeric token '" + std::string(token) + "'");
    return value;
}

Complex parse_complex(std::string_view token, int line) {
    const auto comma = token.find(',');
    if (comma == std::string_view::npos) return Complex{parse_real(token, line), 0.0};
    const double re = parse_real(token.substr(0, comma), line);
    const double im = parse_real(token.substr(comma + 1), line);
    return Complex{re, im};
}

std::vector<std::string_view> split_tokens(std::string_view s) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) tokens.push_back(s.substr(i, j - i));
        i = j;
    }
    return tokens;
}

} // namespace

StateSpec parse_state_text(std::string_view text) {
    std::optional<std::size_t> n_qubits;
    Complex a{0.0, 0.0};
    bool have_b = false;
    std::vector<Complex> b;
    std::optional<SubsystemSelection> block;
    std::optional<int> t;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) throw ParseError(line_no, "empty value for '" + std::string(key) + "'");

        if (key == "n_qubits") {
            const double v = parse_real(value, line_no);
            if (v < 2 || v != std::floor(v)) throw ParseError(line_no, "n_qubits must be an integer >= 2");
            n_qubits = static_cast<std::size_t>(v);
        } else if (key == "a") {
            a = parse_complex(value, line_no);
        } else if (key == "b") {
            have_b = true;
            b.clear();
            for (auto token : split_tokens(value)) b.push_back(parse_complex(token, line_no));
        } else if (key == "block") {
            SubsystemSelection sel;
            for (auto token : split_tokens(value)) {
                const double v = parse_real(token, line_no);
                if (v < 1 || v != std::floor(v))
                    throw ParseError(line_no, "block indices must be integers >= 1");
                sel.block.push_back(static_cast<std::size_t>(v));
            }
            block = std::move(sel);
        } else if (key == "t") {
            const double v = parse_real(value, line_no);
            if (v < 1 || v != std::floor(v)) throw ParseError(line_no, "t must be an integer >= 1");
            t = static_cast<int>(v);
        } else {
            throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }

    if (!n_qubits) throw ParseError(line_no, "missing n_qubits");
    if (!have_b) throw ParseError(line_no, "missing b amplitudes");
    if (b.size() != *n_qubits)
        throw ParseError(line_no, "expected " + std::to_string(*n_qubits) + " b amplitudes, got " +
                                      std::to_string(b.size()));
    try {
        StateSpec spec{WClassCoefficients(*n_qubits, a, std::move(b)), std::move(block), t};
        if (spec.block) spec.block->validate(*n_qubits);
        return spec;
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

StateSpec parse_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_text(buffer.str());
}

} // namespace wmono::cli
