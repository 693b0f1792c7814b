#include "boundent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "boundent/errors.hpp"

namespace boundent {

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t k) {
    if (k >= dim)
        throw ContractViolation("basis index out of range");
    ComplexVector v(dim);
    v[k] = cplx{1.0, 0.0};
    return v;
}

bool ComplexVector::all_finite() const {
    for (const cplx& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw ContractViolation("entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = cplx{1.0, 0.0};
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ContractViolation(std::string("shape mismatch in ") + op);
}

} // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix addition");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.entries().size(); ++i)
        r.entries()[i] = a.entries()[i] + b.entries()[i];
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix subtraction");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.entries().size(); ++i)
        r.entries()[i] = a.entries()[i] - b.entries()[i];
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw ContractViolation("shape mismatch in matrix product");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.entries().size(); ++i)
        r.entries()[i] = s * a.entries()[i];
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
    return cplx{s, 0.0} * a;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
    if (a.cols() != v.dim())
        throw ContractViolation("shape mismatch in matrix-vector product");
    ComplexVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc += a(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

cplx trace(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw ContractViolation("trace of a non-square matrix");
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i)
        t += a(i, i);
    return t;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(j, i) = std::conj(a(i, j));
    return r;
}

double frobenius_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const cplx& z : a.entries())
        acc += std::norm(z);
    return std::sqrt(acc);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cplx& z : a.entries())
        m = std::max(m, std::abs(z));
    return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw ContractViolation("hermiticity defect of a non-square matrix");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc += std::norm(a(i, j) - std::conj(a(j, i)));
    const double fro = frobenius_norm(a);
    if (fro == 0.0)
        return 0.0;
    return std::sqrt(acc) / fro;
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
    return a.rows() == a.cols() && hermiticity_defect(a) <= rel_tol;
}

cplx inner(const ComplexVector& u, const ComplexVector& v) {
    if (u.dim() != v.dim())
        throw ContractViolation("inner product of vectors with different dimensions");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < u.dim(); ++i)
        acc += std::conj(u[i]) * v[i];
    return acc;
}

double norm(const ComplexVector& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i)
        acc += std::norm(v[i]);
    return std::sqrt(acc);
}

ComplexVector normalized(const ComplexVector& v) {
    const double n = norm(v);
    if (n == 0.0)
        throw ContractViolation("cannot normalize the zero vector");
    ComplexVector r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        r[i] = v[i] / n;
    return r;
}

ComplexMatrix outer_projector(const ComplexVector& v) {
    ComplexMatrix r(v.dim(), v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j)
            r(i, j) = v[i] * std::conj(v[j]);
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > max_dim || cols > max_dim)
        throw SizeLimitError("kron result exceeds dimension limit", std::max(rows, cols), max_dim);
    ComplexMatrix r(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0})
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b, std::size_t max_dim) {
    const std::size_t dim = a.dim() * b.dim();
    if (dim > max_dim)
        throw SizeLimitError("kron result exceeds dimension limit", dim, max_dim);
    ComplexVector r(dim);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            r[i * b.dim() + j] = a[i] * b[j];
    return r;
}

namespace {

double offdiag_fro(const std::vector<cplx>& a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                acc += std::norm(a[i * n + j]);
    return std::sqrt(acc);
}

// Cyclic complex Jacobi. Destroys `a` (diagonal becomes the unsorted
// spectrum); accumulates the eigenvector columns into *vecs when given.
// Returns the final relative off-diagonal residual; sets *converged.
double jacobi_core(std::vector<cplx>& a, std::size_t n, std::vector<cplx>* vecs,
                   double off_tol_rel, std::size_t max_sweeps, bool* converged) {
    if (vecs) {
        vecs->assign(n * n, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < n; ++i)
            (*vecs)[i * n + i] = cplx{1.0, 0.0};
    }

    double fro = 0.0;
    for (const cplx& z : a)
        fro += std::norm(z);
    fro = std::sqrt(fro);
    if (fro == 0.0) {
        *converged = true;
        return 0.0;
    }

    const double target = off_tol_rel * fro;
    // Entries below this bound cannot collectively push the off-diagonal
    // mass above target, so rotations on them are skipped.
    const double skip = target / static_cast<double>(n);

    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = offdiag_fro(a, n);
        if (off <= target) {
            *converged = true;
            return off / fro;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a[p * n + q];
                const double w = std::abs(apq);
                if (w <= skip)
                    continue;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * w);
                const double sign = (tau >= 0.0) ? 1.0 : -1.0;
                const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx ph = apq / w;
                const cplx sph_conj = s * std::conj(ph);
                const cplx cph_conj = c * std::conj(ph);

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const cplx kp = a[k * n + p];
                    const cplx kq = a[k * n + q];
                    const cplx np_ = c * kp - sph_conj * kq;
                    const cplx nq_ = s * kp + cph_conj * kq;
                    a[k * n + p] = np_;
                    a[k * n + q] = nq_;
                    a[p * n + k] = std::conj(np_);
                    a[q * n + k] = std::conj(nq_);
                }
                a[p * n + p] = cplx{app - t * w, 0.0};
                a[q * n + q] = cplx{aqq + t * w, 0.0};
                a[p * n + q] = cplx{0.0, 0.0};
                a[q * n + p] = cplx{0.0, 0.0};

                if (vecs) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vp = (*vecs)[k * n + p];
                        const cplx vq = (*vecs)[k * n + q];
                        (*vecs)[k * n + p] = c * vp - sph_conj * vq;
                        (*vecs)[k * n + q] = s * vp + cph_conj * vq;
                    }
                }
            }
        }
    }

    const double off = offdiag_fro(a, n);
    if (off <= target) {
        *converged = true;
        return off / fro;
    }
    *converged = false;
    return off / fro;
}

void require_eig_input(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw ContractViolation("hermitian_eig requires a square matrix");
    if (m.rows() == 0)
        throw ContractViolation("hermitian_eig requires a nonempty matrix");
    if (!m.all_finite())
        throw ContractViolation("hermitian_eig requires finite entries");
    if (hermiticity_defect(m) > 1e-10)
        throw ContractViolation("hermitian_eig requires a Hermitian matrix");
}

std::vector<std::size_t> descending_order(const std::vector<double>& vals) {
    std::vector<std::size_t> idx(vals.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return vals[i] > vals[j]; });
    return idx;
}

} // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double off_tol_rel,
                                 std::size_t max_sweeps) {
    require_eig_input(m);
    const std::size_t n = m.rows();
    std::vector<cplx> a = m.entries();
    std::vector<cplx> vecs;
    bool converged = false;
    const double res = jacobi_core(a, n, &vecs, off_tol_rel, max_sweeps, &converged);
    if (!converged)
        throw ConvergenceError("Jacobi sweeps did not converge", res);

    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i)
        raw[i] = a[i * n + i].real();
    const auto order = descending_order(raw);

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t src = order[r];
        out.eigenvalues[r] = raw[src];
        ComplexVector v(n);
        for (std::size_t k = 0; k < n; ++k)
            v[k] = vecs[k * n + src];
        out.eigenvectors.push_back(std::move(v));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double off_tol_rel,
                                          std::size_t max_sweeps) {
    require_eig_input(m);
    const std::size_t n = m.rows();
    std::vector<cplx> a = m.entries();
    bool converged = false;
    const double res = jacobi_core(a, n, nullptr, off_tol_rel, max_sweeps, &converged);
    if (!converged)
        throw ConvergenceError("Jacobi sweeps did not converge", res);

    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i)
        raw[i] = a[i * n + i].real();
    std::sort(raw.begin(), raw.end(), std::greater<double>());
    return raw;
}

double trace_norm_hermitian(const ComplexMatrix& m, double off_tol_rel,
                            std::size_t max_sweeps) {
    const auto vals = hermitian_eigenvalues(m, off_tol_rel, max_sweeps);
    double acc = 0.0;
    for (double v : vals)
        acc += std::abs(v);
    return acc;
}

} // namespace boundent
