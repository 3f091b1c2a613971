#include "wmono/wclass.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wmono {

WClassCoefficients::WClassCoefficients(std::size_t n_qubits, Complex a, std::vector<Complex> b,
                                       const Tolerances& tol)
    : n_qubits_(n_qubits), a_(a), b_(std::move(b)) {
    if (n_qubits_ < 2) throw std::invalid_argument("W-class state needs at least 2 qubits");
    if (b_.size() != n_qubits_)
        throw std::invalid_argument("expected one excitation amplitude per qubit");
    double norm2 = std::norm(a_);
    for (const auto& v : b_) norm2 += std::norm(v);
    if (std::abs(norm2 - 1.0) > tol.coefficient_norm)
        throw std::invalid_argument("W-class coefficients are not normalized");
}

WClassCoefficients WClassCoefficients::normalized(std::size_t n_qubits, Complex a,
                                                  std::vector<Complex> b) {
    double norm2 = std::norm(a);
    for (const auto& v : b) norm2 += std::norm(v);
    if (norm2 <= 0.0) throw std::invalid_argument("cannot normalize zero coefficients");
    const double s = 1.0 / std::sqrt(norm2);
    a *= s;
    for (auto& v : b) v *= s;
    return WClassCoefficients(n_qubits, a, std::move(b));
}

SubsystemSelection SubsystemSelection::full(std::size_t n_qubits) {
    SubsystemSelection sel;
    sel.block.resize(n_qubits - 1);
    std::iota(sel.block.begin(), sel.block.end(), 1);
    return sel;
}

void SubsystemSelection::validate(std::size_t n_qubits) const {
    if (block.empty()) throw std::invalid_argument("subsystem selection is empty");
    std::vector<bool> seen(n_qubits, false);
    for (auto j : block) {
        if (j < 1 || j > n_qubits - 1)
            throw std::invalid_argument("B-index out of range in subsystem selection");
        if (seen[j]) throw std::invalid_argument("duplicate B-index in subsystem selection");
        seen[j] = true;
    }
}

PureState build_state(const WClassCoefficients& c) {
    const std::size_t n = c.n_qubits();
    std::vector<Complex> amp(std::size_t{1} << n, Complex{});
    amp[0] = c.a();
    for (std::size_t k = 0; k < n; ++k) {
        // qubit k excited: bit (n-1-k) set
        amp[std::size_t{1} << (n - 1 - k)] = c.b()[k];
    }
    return PureState(std::move(amp));
}

DensityMatrix reduce(const WClassCoefficients& c, const SubsystemSelection& sel) {
    sel.validate(c.n_qubits());
    std::vector<std::size_t> keep{0};
    keep.insert(keep.end(), sel.block.begin(), sel.block.end());
    std::sort(keep.begin() + 1, keep.end());
    const PureState psi = build_state(c);
    return DensityMatrix(reduce_pure(psi, keep), DimList::qubits(keep.size()));
}

double pair_concurrence_closed(const WClassCoefficients& c, std::size_t b_index) {
    if (b_index < 1 || b_index > c.n_qubits() - 1)
        throw std::invalid_argument("B-index out of range");
    return 2.0 * std::abs(c.b()[0]) * std::abs(c.b()[b_index]);
}

double block_concurrence_closed(const WClassCoefficients& c, const SubsystemSelection& sel) {
    sel.validate(c.n_qubits());
    double sum = 0.0;
    for (auto j : sel.block) sum += std::norm(c.b()[j]);
    return 2.0 * std::abs(c.b()[0]) * std::sqrt(sum);
}

} // namespace wmono
