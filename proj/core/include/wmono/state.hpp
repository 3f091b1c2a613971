#pragma once

#include "wmono/matrix.hpp"

#include <vector>

namespace wmono {

/// Normalized amplitude vector over n qubits. Qubit 0 is the most significant
/// basis digit, so |10...0> has index 2^(n-1).
class PureState {
  public:
    PureState(std::vector<Complex> amplitudes, const Tolerances& tol = default_tolerances());

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    DimList dims() const { return DimList::qubits(n_qubits_); }

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// A cut of tensor factors into two non-empty complementary groups.
struct Bipartition {
    std::vector<std::size_t> side_a;
    std::vector<std::size_t> side_b;

    static Bipartition of(std::vector<std::size_t> side_a, std::size_t n_factors);
    static Bipartition first_vs_rest(std::size_t n_factors);
};

/// Hermitian unit-trace matrix with its tensor-factor split attached.
class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix matrix, DimList dims,
                  const Tolerances& tol = default_tolerances());

    const ComplexMatrix& matrix() const { return matrix_; }
    const DimList& dims() const { return dims_; }
    std::size_t dimension() const { return matrix_.rows(); }

  private:
    ComplexMatrix matrix_;
    DimList dims_;
};

DensityMatrix projector(const PureState& psi);

/// Reduced density matrix of |psi><psi| on the kept qubits.
ComplexMatrix reduce_pure(const PureState& psi, const std::vector<std::size_t>& keep);

} // namespace wmono
