#include "wmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wmono {

const char* measure_symbol(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Concurrence: return "C";
        case MeasureKind::ConcurrenceOfAssistance: return "C_a";
        case MeasureKind::Negativity: return "N";
        case MeasureKind::Cren: return "N_c";
        case MeasureKind::Crenoa: return "N_a";
    }
    return "?";
}

namespace {

double purity(const ComplexMatrix& rho) {
    double s = 0.0;
    for (std::size_t i = 0; i < rho.rows(); ++i)
        for (std::size_t j = 0; j < rho.cols(); ++j) s += std::norm(rho(i, j));
    return s;
}

ComplexMatrix spin_flip_operator() {
    // Y (x) Y
    ComplexMatrix s(4, 4);
    s(0, 3) = -1.0;
    s(1, 2) = 1.0;
    s(2, 1) = 1.0;
    s(3, 0) = -1.0;
    return s;
}

} // namespace

double concurrence_pure(const PureState& psi, const Bipartition& cut, const Tolerances& tol) {
    const ComplexMatrix rho_a = partial_trace_pure(psi.amplitudes(), psi.dims(), cut.side_a);
    const double p = purity(rho_a);
    (void)tol;
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

std::array<double, 4> spin_flip_lambdas(const DensityMatrix& rho, const Tolerances& tol) {
    if (rho.dimension() != 4)
        throw std::invalid_argument("spin-flip lambdas need a two-qubit density matrix");
    // The lambdas are the singular values of sqrt(rho) S sqrt(rho)*, whose
    // squares are the eigenvalues of sqrt(rho) S rho* S sqrt(rho). In the
    // eigenbasis of rho that matrix collapses to the rank-retained block
    // M_kl = sqrt(mu_k mu_l) (v_k^dag S v_l*), so exact zero eigenvalues never
    // feed spurious sqrt(round-off) rank into the result. Singular values are
    // read off the Hermitian embedding [[0, M], [M^dag, 0]], which keeps the
    // error linear in round-off even for vanishing lambdas.
    const auto eig = hermitian_eig(rho.matrix(), tol);
    if (eig.eigenvalues.back() < -tol.psd_reject)
        throw std::invalid_argument("spin-flip lambdas: input is not PSD");
    std::size_t rank = 0;
    while (rank < 4 && eig.eigenvalues[rank] > tol.eigenvalue_clamp) ++rank;
    std::array<double, 4> lambdas{};
    if (rank == 0) return lambdas;

    const ComplexMatrix flip = spin_flip_operator();
    ComplexMatrix embedding(2 * rank, 2 * rank);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t l = 0; l < rank; ++l) {
            Complex tau{};
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    if (flip(i, j) == Complex{}) continue;
                    tau += std::conj(eig.eigenvectors(i, k)) * flip(i, j) *
                           std::conj(eig.eigenvectors(j, l));
                }
            const Complex m = std::sqrt(eig.eigenvalues[k] * eig.eigenvalues[l]) * tau;
            embedding(k, rank + l) = m;
            embedding(rank + l, k) = std::conj(m);
        }
    const auto svd = hermitian_eig(embedding, tol);
    for (std::size_t i = 0; i < rank; ++i) lambdas[i] = std::max(svd.eigenvalues[i], 0.0);
    return lambdas;
}

double concurrence_two_qubit(const DensityMatrix& rho, const Tolerances& tol) {
    const auto lam = spin_flip_lambdas(rho, tol);
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double coa_two_qubit(const DensityMatrix& rho, const Tolerances& tol) {
    const auto lam = spin_flip_lambdas(rho, tol);
    return lam[0] + lam[1] + lam[2] + lam[3];
}

double negativity(const DensityMatrix& rho, const Bipartition& cut, const Tolerances& tol) {
    ComplexMatrix transposed = rho.matrix();
    for (auto f : cut.side_a) transposed = partial_transpose(transposed, rho.dims(), f);
    return trace_norm(transposed, tol) - 1.0;
}

double negativity_pure(const PureState& psi, const Bipartition& cut, const Tolerances& tol) {
    const ComplexMatrix rho_a = partial_trace_pure(psi.amplitudes(), psi.dims(), cut.side_a);
    const ComplexMatrix root = psd_sqrt(rho_a, tol);
    const double t = root.trace().real();
    return t * t - 1.0;
}

double cren_two_qubit(const DensityMatrix& rho, const Tolerances& tol) {
    return concurrence_two_qubit(rho, tol);
}

double crenoa_two_qubit(const DensityMatrix& rho, const Tolerances& tol) {
    return coa_two_qubit(rho, tol);
}

} // namespace wmono
