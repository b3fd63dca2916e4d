#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qid {

using Complex = std::complex<double>;

/// Largest composite dimension any operator is allowed to reach.
inline constexpr std::size_t kMaxDim = 4096;

/// Absolute floor used when classifying eigenvalues as negative/zero.
inline constexpr double kPsdTol = 1e-10;

/// Dense complex matrix, row-major. The carrier for every operator,
/// projector and density matrix in the library.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<double>& d);
    /// u v^dagger
    static ComplexMatrix outer(const std::vector<Complex>& u,
                               const std::vector<Complex>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }
    std::vector<Complex>& entries() { return entries_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        a *= s;
        return a;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        a *= s;
        return a;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvector k stored as column k of `eigenvectors`.
struct EigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// max_ij |a_ij|
double max_abs(const ComplexMatrix& a);
/// max_ij |a_ij - conj(a_ji)|
double hermitian_deviation(const ComplexMatrix& a);

/// Tolerance below which a matrix counts as Hermitian: 1e-10 * (1 + max|entry|).
double hermitian_tol(const ComplexMatrix& a);

/// Full spectrum of a Hermitian matrix, ascending, orthonormal eigenvectors.
/// Throws std::invalid_argument if the input is not square or not Hermitian
/// within hermitian_tol.
EigenSystem eig_hermitian(const ComplexMatrix& a);

double min_eigenvalue(const ComplexMatrix& a);

/// Sum of |eigenvalue| for Hermitian input.
double trace_norm(const ComplexMatrix& a);
/// max |eigenvalue| for Hermitian input.
double spectral_norm(const ComplexMatrix& a);

/// min eigenvalue >= -kPsdTol * spectral norm (with an absolute floor for
/// near-zero matrices).
bool is_psd(const ComplexMatrix& a);

}  // namespace qid
