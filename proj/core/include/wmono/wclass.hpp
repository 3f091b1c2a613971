#pragma once

#include "wmono/state.hpp"

#include <vector>

namespace wmono {

/// Amplitudes of an N-qubit generalized W-class state: a on |0...0> and one
/// single-excitation amplitude per qubit. b[0] belongs to qubit A (factor 0),
/// b[i] to qubit B_i (factor i). Immutable after construction.
class WClassCoefficients {
  public:
    WClassCoefficients(std::size_t n_qubits, Complex a, std::vector<Complex> b,
                       const Tolerances& tol = default_tolerances());

    /// Rescales (a, b) onto the unit sphere before constructing.
    static WClassCoefficients normalized(std::size_t n_qubits, Complex a, std::vector<Complex> b);

    std::size_t n_qubits() const { return n_qubits_; }
    Complex a() const { return a_; }
    const std::vector<Complex>& b() const { return b_; }

  private:
    std::size_t n_qubits_;
    Complex a_;
    std::vector<Complex> b_;
};

/// Ordered choice of B-qubits (1-based indices B_1..B_{N-1}); together with A
/// it selects an m-qubit reduction, m = block size + 1. Order matters for the
/// ordering-hypothesis checks.
struct SubsystemSelection {
    std::vector<std::size_t> block;

    static SubsystemSelection full(std::size_t n_qubits);
    void validate(std::size_t n_qubits) const;
    std::size_t m() const { return block.size() + 1; }
};

PureState build_state(const WClassCoefficients& c);

/// Density matrix on A plus the selected B-qubits, complement traced out.
/// Rank is at most 2.
DensityMatrix reduce(const WClassCoefficients& c, const SubsystemSelection& sel);

/// Concurrence of the pair reduction rho_{A,B_i}: 2 |b_1||b_{i+1}|.
double pair_concurrence_closed(const WClassCoefficients& c, std::size_t b_index);

/// Concurrence of the A|block cut of the reduced state:
/// 2 |b_1| sqrt(sum over the block of |b_{i+1}|^2).
double block_concurrence_closed(const WClassCoefficients& c, const SubsystemSelection& sel);

} // namespace wmono
