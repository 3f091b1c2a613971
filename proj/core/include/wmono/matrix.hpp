#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace wmono {

using Complex = std::complex<double>;

/// Numerical thresholds shared by the dense kernels. Kept in one record so
/// property tests can tighten or loosen them uniformly.
struct Tolerances {
    double hermiticity = 1e-12;         // max |M(i,j) - conj(M(j,i))| accepted as Hermitian
    double eig_hermiticity = 1e-10;     // input gate for hermitian_eig
    double jacobi_off_diagonal = 1e-13; // off-diagonal target, relative to ||H||_F
    int jacobi_max_sweeps = 100;
    double eigenvalue_clamp = 1e-10;    // negatives above -clamp are rounded to zero
    double psd_reject = 1e-8;           // eigenvalues below -psd_reject reject the input
    double state_norm = 1e-10;          // unit-norm slack for pure states / unit-trace slack
    double coefficient_norm = 1e-12;    // normalization slack for state coefficients
    double report_slack = 1e-12;        // inequality satisfaction slack
};

const Tolerances& default_tolerances();

/// Dense row-major complex matrix. Treated as immutable once built; the free
/// functions below return fresh matrices, so values are safe to share across
/// threads.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix diagonal(std::span<const double> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    /// max |M(i,j) - conj(M(j,i))| over all entries; 0 for exactly Hermitian input.
    double hermiticity_defect() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);
std::vector<Complex> operator*(const ComplexMatrix& m, const std::vector<Complex>& v);

/// Ordered tensor-factor dimensions of a composite system. Factor 0 owns the
/// most significant digit of a basis index.
class DimList {
  public:
    DimList() = default;
    explicit DimList(std::vector<std::size_t> dims);
    static DimList qubits(std::size_t n);

    std::size_t size() const { return dims_.size(); }
    std::size_t dim(std::size_t factor) const { return dims_[factor]; }
    std::size_t total() const;
    const std::vector<std::size_t>& dims() const { return dims_; }
    /// index stride of one digit step in the given factor
    std::size_t stride(std::size_t factor) const;

  private:
    std::vector<std::size_t> dims_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix on the kept factors; trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimList& dims,
                            const std::vector<std::size_t>& keep);

/// Partial trace of |psi><psi| without forming the projector.
ComplexMatrix partial_trace_pure(std::span<const Complex> amplitudes, const DimList& dims,
                                 const std::vector<std::size_t>& keep);

/// Transposition applied to one tensor factor only.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimList& dims,
                                std::size_t subsystem);

struct EigResult {
    std::vector<double> eigenvalues; // descending
    ComplexMatrix eigenvectors;      // orthonormal columns, matching order
};

/// Cyclic Jacobi diagonalization for Hermitian matrices. Throws
/// std::invalid_argument for non-Hermitian input and std::runtime_error when
/// the sweep budget is exhausted before the off-diagonal target is reached.
EigResult hermitian_eig(const ComplexMatrix& h, const Tolerances& tol = default_tolerances());

/// Tr sqrt(M M^dag). Hermitian inputs take the sum-of-|eigenvalue| path.
double trace_norm(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());

/// Square root of a PSD matrix. Small negative eigenvalues are clamped to
/// zero; eigenvalues below -psd_reject throw.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho, const Tolerances& tol = default_tolerances());

} // namespace wmono
