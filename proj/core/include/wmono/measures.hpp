#pragma once

#include "wmono/state.hpp"

#include <array>

namespace wmono {

enum class MeasureKind {
    Concurrence,             // C
    ConcurrenceOfAssistance, // C_a
    Negativity,              // N
    Cren,                    // N_c
    Crenoa,                  // N_a
};

struct MeasureValue {
    MeasureKind kind;
    double value; // >= 0
};

const char* measure_symbol(MeasureKind kind);

/// sqrt(2 (1 - Tr rho_A^2)) with rho_A the reduction to side A of the cut.
double concurrence_pure(const PureState& psi, const Bipartition& cut,
                        const Tolerances& tol = default_tolerances());

/// Spin-flip spectral values of a two-qubit density matrix: the descending
/// square roots of the eigenvalues of sqrt(rho) (Y(x)Y) rho* (Y(x)Y) sqrt(rho).
std::array<double, 4> spin_flip_lambdas(const DensityMatrix& rho,
                                        const Tolerances& tol = default_tolerances());

/// max(0, lam1 - lam2 - lam3 - lam4)
double concurrence_two_qubit(const DensityMatrix& rho,
                             const Tolerances& tol = default_tolerances());

/// lam1 + lam2 + lam3 + lam4
double coa_two_qubit(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// ||rho^{T_A}|| - 1, transpose applied to every factor on side A.
double negativity(const DensityMatrix& rho, const Bipartition& cut,
                  const Tolerances& tol = default_tolerances());

/// (Tr sqrt(rho_A))^2 - 1 for a pure state.
double negativity_pure(const PureState& psi, const Bipartition& cut,
                       const Tolerances& tol = default_tolerances());

/// Convex-roof extended negativity of a two-qubit state; coincides with the
/// concurrence because every two-qubit pure state has Schmidt rank <= 2.
double cren_two_qubit(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// Assistance counterpart of cren_two_qubit; coincides with coa_two_qubit.
double crenoa_two_qubit(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

} // namespace wmono
