#include "wmono/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wmono {

namespace {

std::size_t log2_exact(std::size_t dim) {
    std::size_t n = 0;
    std::size_t d = dim;
    while (d > 1) {
        if (d % 2 != 0) throw std::invalid_argument("amplitude count is not a power of two");
        d /= 2;
        ++n;
    }
    if (n == 0) throw std::invalid_argument("state needs at least one qubit");
    return n;
}

} // namespace

PureState::PureState(std::vector<Complex> amplitudes, const Tolerances& tol)
    : n_qubits_(log2_exact(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > tol.state_norm)
        throw std::invalid_argument("pure state is not normalized");
}

Bipartition Bipartition::of(std::vector<std::size_t> side_a, std::size_t n_factors) {
    if (side_a.empty()) throw std::invalid_argument("bipartition side A is empty");
    std::vector<bool> in_a(n_factors, false);
    for (auto f : side_a) {
        if (f >= n_factors) throw std::invalid_argument("bipartition index out of range");
        if (in_a[f]) throw std::invalid_argument("duplicate bipartition index");
        in_a[f] = true;
    }
    Bipartition cut;
    cut.side_a = std::move(side_a);
    for (std::size_t f = 0; f < n_factors; ++f)
        if (!in_a[f]) cut.side_b.push_back(f);
    if (cut.side_b.empty()) throw std::invalid_argument("bipartition side B is empty");
    return cut;
}

Bipartition Bipartition::first_vs_rest(std::size_t n_factors) {
    return of({0}, n_factors);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, DimList dims, const Tolerances& tol)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
    if (!matrix_.is_square()) throw std::invalid_argument("density matrix is not square");
    if (matrix_.rows() != dims_.total())
        throw std::invalid_argument("density matrix dimension does not match factor list");
    if (matrix_.hermiticity_defect() > tol.hermiticity * std::max(1.0, matrix_.max_abs()))
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > tol.state_norm)
        throw std::invalid_argument("density matrix trace is not 1");
}

DensityMatrix projector(const PureState& psi) {
    const auto& amp = psi.amplitudes();
    const std::size_t d = amp.size();
    ComplexMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rho(i, j) = amp[i] * std::conj(amp[j]);
    return DensityMatrix(std::move(rho), psi.dims());
}

ComplexMatrix reduce_pure(const PureState& psi, const std::vector<std::size_t>& keep) {
    return partial_trace_pure(psi.amplitudes(), psi.dims(), keep);
}

} // namespace wmono
