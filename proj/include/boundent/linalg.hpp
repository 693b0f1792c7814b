#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace boundent {

using cplx = std::complex<double>;

/// Dense complex vector. Entries are amplitudes; dimension is fixed at
/// construction.
class ComplexVector {
public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : entries_(dim, cplx{0.0, 0.0}) {}
    ComplexVector(std::initializer_list<cplx> init) : entries_(init) {}
    explicit ComplexVector(std::vector<cplx> entries) : entries_(std::move(entries)) {}

    static ComplexVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const { return entries_.size(); }
    cplx& operator[](std::size_t i) { return entries_[i]; }
    const cplx& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<cplx>& entries() const { return entries_; }

    bool all_finite() const;

private:
    std::vector<cplx> entries_;
};

/// Dense complex matrix in row-major order.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<cplx>& entries() const { return entries_; }
    std::vector<cplx>& entries() { return entries_; }

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);

cplx trace(const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);

/// Frobenius distance of a from its own adjoint, relative to ||a||_F.
double hermiticity_defect(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double rel_tol = 1e-10);

cplx inner(const ComplexVector& u, const ComplexVector& v); ///< <u|v>, conjugate-linear in u
double norm(const ComplexVector& v);
ComplexVector normalized(const ComplexVector& v);
ComplexMatrix outer_projector(const ComplexVector& v); ///< |v><v|

/// Kronecker product. Factor 0 is the slowest-varying index of the result.
/// Throws SizeLimitError when either result dimension exceeds max_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   std::size_t max_dim = 6561);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b,
                   std::size_t max_dim = 6561);

/// Spectrum of a Hermitian matrix, eigenvalues sorted descending with
/// matching orthonormal eigenvectors.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    std::vector<ComplexVector> eigenvectors;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations. Sweeps
/// run until the off-diagonal Frobenius mass drops below off_tol_rel times
/// the input norm, or the sweep budget runs out (ConvergenceError carrying
/// the residual). Input must be square and Hermitian to 1e-10 relative
/// tolerance (ContractViolation otherwise). Eigenvectors inside a degenerate
/// cluster are whichever orthonormal set the rotations produce; consumers
/// should rely on eigenvalues and objective values only.
EigenDecomposition hermitian_eig(const ComplexMatrix& a,
                                 double off_tol_rel = 1e-14,
                                 std::size_t max_sweeps = 100);

/// Eigenvalues only (descending), same algorithm and error behavior as
/// hermitian_eig without accumulating the eigenvector basis.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double off_tol_rel = 1e-14,
                                          std::size_t max_sweeps = 100);

/// Trace norm of a Hermitian matrix: sum of absolute eigenvalues.
double trace_norm_hermitian(const ComplexMatrix& a,
                            double off_tol_rel = 1e-14,
                            std::size_t max_sweeps = 100);

} // namespace boundent
