#include "wmono/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wmono {

const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged initializer rows");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
    ComplexMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scale * m(i, j);
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, const std::vector<Complex>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Complex> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

DimList::DimList(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("empty dimension list");
    for (auto d : dims_)
        if (d < 2) throw std::invalid_argument("tensor factor dimension must be >= 2");
}

DimList DimList::qubits(std::size_t n) {
    return DimList(std::vector<std::size_t>(n, 2));
}

std::size_t DimList::total() const {
    std::size_t p = 1;
    for (auto d : dims_) p *= d;
    return p;
}

std::size_t DimList::stride(std::size_t factor) const {
    std::size_t s = 1;
    for (std::size_t f = factor + 1; f < dims_.size(); ++f) s *= dims_[f];
    return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

namespace {

// Absolute offsets of every digit combination over the chosen factors.
std::vector<std::size_t> factor_offsets(const DimList& dims, const std::vector<std::size_t>& factors) {
    std::size_t count = 1;
    for (auto f : factors) count *= dims.dim(f);
    std::vector<std::size_t> offsets(count, 0);
    std::size_t repeat = count;
    for (auto f : factors) {
        const std::size_t d = dims.dim(f);
        const std::size_t stride = dims.stride(f);
        repeat /= d;
        for (std::size_t idx = 0; idx < count; ++idx) {
            const std::size_t digit = (idx / repeat) % d;
            offsets[idx] += digit * stride;
        }
    }
    return offsets;
}

void validate_subsystems(const DimList& dims, const std::vector<std::size_t>& keep) {
    if (keep.empty()) throw std::invalid_argument("empty subsystem selection");
    std::vector<bool> seen(dims.size(), false);
    for (auto f : keep) {
        if (f >= dims.size()) throw std::invalid_argument("subsystem index out of range");
        if (seen[f]) throw std::invalid_argument("duplicate subsystem index");
        seen[f] = true;
    }
}

} // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimList& dims,
                            const std::vector<std::size_t>& keep) {
    if (!rho.is_square()) throw std::invalid_argument("partial_trace: non-square input");
    if (rho.rows() != dims.total())
        throw std::invalid_argument("partial_trace: dimension list does not match matrix");
    validate_subsystems(dims, keep);

    std::vector<std::size_t> traced;
    for (std::size_t f = 0; f < dims.size(); ++f)
        if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

    const auto keep_off = factor_offsets(dims, keep);
    const auto traced_off =
        traced.empty() ? std::vector<std::size_t>{0} : factor_offsets(dims, traced);

    ComplexMatrix out(keep_off.size(), keep_off.size());
    for (std::size_t r = 0; r < keep_off.size(); ++r)
        for (std::size_t c = 0; c < keep_off.size(); ++c) {
            Complex s = 0.0;
            for (auto t : traced_off) s += rho(keep_off[r] + t, keep_off[c] + t);
            out(r, c) = s;
        }
    return out;
}

ComplexMatrix partial_trace_pure(std::span<const Complex> amplitudes, const DimList& dims,
                                 const std::vector<std::size_t>& keep) {
    if (amplitudes.size() != dims.total())
        throw std::invalid_argument("partial_trace_pure: dimension list does not match vector");
    validate_subsystems(dims, keep);

    std::vector<std::size_t> traced;
    for (std::size_t f = 0; f < dims.size(); ++f)
        if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

    const auto keep_off = factor_offsets(dims, keep);
    const auto traced_off =
        traced.empty() ? std::vector<std::size_t>{0} : factor_offsets(dims, traced);

    ComplexMatrix out(keep_off.size(), keep_off.size());
    for (std::size_t r = 0; r < keep_off.size(); ++r)
        for (std::size_t c = r; c < keep_off.size(); ++c) {
            Complex s = 0.0;
            for (auto t : traced_off)
                s += amplitudes[keep_off[r] + t] * std::conj(amplitudes[keep_off[c] + t]);
            out(r, c) = s;
            out(c, r) = std::conj(s);
        }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimList& dims,
                                std::size_t subsystem) {
    if (!rho.is_square()) throw std::invalid_argument("partial_transpose: non-square input");
    if (rho.rows() != dims.total())
        throw std::invalid_argument("partial_transpose: dimension list does not match matrix");
    if (subsystem >= dims.size())
        throw std::invalid_argument("partial_transpose: subsystem index out of range");

    const std::size_t d = dims.dim(subsystem);
    const std::size_t stride = dims.stride(subsystem);
    const std::size_t n = rho.rows();
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t rd = (r / stride) % d;
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t cd = (c / stride) % d;
            const std::size_t rs = r - rd * stride + cd * stride;
            const std::size_t cs = c - cd * stride + rd * stride;
            out(rs, cs) = rho(r, c);
        }
    }
    return out;
}

namespace {

// One Jacobi similarity rotation zeroing a(p,q), accumulating into vecs.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& vecs, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double d = 0.5 * (app - aqq);
    const double r = std::hypot(d, std::abs(apq));
    const double lam1 = 0.5 * (app + aqq) + r;
    const double lam2 = 0.5 * (app + aqq) - r;

    // Eigenvector of the 2x2 block for lam1 is (apq, r - d), up to norm.
    // r - d cancels badly for small |apq| and positive d; use |apq|^2/(r+d).
    const double comp2 = d >= 0.0 ? std::norm(apq) / (r + d) : r - d;
    const double nn = std::sqrt(std::norm(apq) + comp2 * comp2);
    const Complex c1 = apq / nn;
    const double c2 = comp2 / nn;

    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c1 * aip + c2 * aiq;
        a(i, q) = -c2 * aip + std::conj(c1) * aiq;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = std::conj(c1) * apj + c2 * aqj;
        a(q, j) = -c2 * apj + c1 * aqj;
    }
    a(p, p) = lam1;
    a(q, q) = lam2;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t i = 0; i < n; ++i) {
        const Complex vip = vecs(i, p);
        const Complex viq = vecs(i, q);
        vecs(i, p) = c1 * vip + c2 * viq;
        vecs(i, q) = -c2 * vip + std::conj(c1) * viq;
    }
}

} // namespace

EigResult hermitian_eig(const ComplexMatrix& h, const Tolerances& tol) {
    if (!h.is_square()) throw std::invalid_argument("hermitian_eig: non-square input");
    const std::size_t n = h.rows();
    if (h.hermiticity_defect() > tol.eig_hermiticity * std::max(1.0, h.max_abs()))
        throw std::invalid_argument("hermitian_eig: input is not Hermitian");

    // Work on the exactly Hermitian part.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 0.5 * (h(i, i) + std::conj(h(i, i)));
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    ComplexMatrix vecs = ComplexMatrix::identity(n);
    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double target = tol.jacobi_off_diagonal * scale;

    bool converged = n < 2;
    for (int sweep = 0; sweep < tol.jacobi_max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > target) jacobi_rotate(a, vecs, p, q);
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        converged = off <= target;
    }
    if (!converged) throw std::runtime_error("hermitian_eig: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) res.eigenvectors(i, k) = vecs(i, order[k]);
    }
    return res;
}

double trace_norm(const ComplexMatrix& m, const Tolerances& tol) {
    if (!m.is_square()) throw std::invalid_argument("trace_norm: non-square input");
    if (m.hermiticity_defect() <= tol.hermiticity * std::max(1.0, m.max_abs())) {
        const auto eig = hermitian_eig(m, tol);
        double s = 0.0;
        for (double lam : eig.eigenvalues) s += std::abs(lam);
        return s;
    }
    const ComplexMatrix mmdag = m * m.adjoint();
    const auto eig = hermitian_eig(mmdag, tol);
    double s = 0.0;
    for (double lam : eig.eigenvalues) s += std::sqrt(std::max(lam, 0.0));
    return s;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho, const Tolerances& tol) {
    const auto eig = hermitian_eig(rho, tol);
    const std::size_t n = rho.rows();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam < -tol.psd_reject) throw std::invalid_argument("psd_sqrt: input is not PSD");
        // Round-off-sized eigenvalues go to zero; sqrt would amplify them to
        // 1e-8-scale rank the input does not have.
        roots[k] = lam > tol.eigenvalue_clamp ? std::sqrt(lam) : 0.0;
    }
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += eig.eigenvectors(i, k) * roots[k] * std::conj(eig.eigenvectors(j, k));
            out(i, j) = s;
            out(j, i) = std::conj(s);
        }
    return out;
}

} // namespace wmono
