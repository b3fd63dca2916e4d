#include "qid/matrix.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace qid {

namespace {

using EigenRowMajor =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMajor> as_eigen(const ComplexMatrix& a) {
    return Eigen::Map<const EigenRowMajor>(
        a.entries().data(), static_cast<Eigen::Index>(a.rows()),
        static_cast<Eigen::Index>(a.cols()));
}

void require_square(const ComplexMatrix& a, const char* what) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix is not square");
    }
}

void require_hermitian(const ComplexMatrix& a, const char* what) {
    require_square(a, what);
    if (hermitian_deviation(a) > hermitian_tol(a)) {
        throw std::invalid_argument(std::string(what) +
                                    ": matrix is not Hermitian within tolerance");
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<Complex>& u,
                                   const std::vector<Complex>& v) {
    ComplexMatrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = u[i] * std::conj(v[j]);
        }
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix addition: dimension mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch");
    }
    ComplexMatrix c(a.rows(), b.cols());
    Eigen::Map<EigenRowMajor> out(c.entries().data(),
                                  static_cast<Eigen::Index>(c.rows()),
                                  static_cast<Eigen::Index>(c.cols()));
    out = as_eigen(a) * as_eigen(b);
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > kMaxDim || cols > kMaxDim) {
        throw std::length_error("kron: composite dimension exceeds maximum of " +
                                std::to_string(kMaxDim));
    }
    ComplexMatrix c(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(j, i) = std::conj(a(i, j));
        }
    }
    return c;
}

Complex trace(const ComplexMatrix& a) {
    require_square(a, "trace");
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
    return m;
}

double hermitian_deviation(const ComplexMatrix& a) {
    double dev = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            dev = std::max(dev, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return dev;
}

double hermitian_tol(const ComplexMatrix& a) { return 1e-10 * (1.0 + max_abs(a)); }

EigenSystem eig_hermitian(const ComplexMatrix& a) {
    require_hermitian(a, "eig_hermitian");
    if (a.rows() > kMaxDim) {
        throw std::length_error("eig_hermitian: dimension exceeds maximum");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(as_eigen(a));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
    }
    EigenSystem sys;
    const auto n = a.rows();
    sys.eigenvalues.resize(n);
    sys.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sys.eigenvalues[k] = solver.eigenvalues()(static_cast<Eigen::Index>(k));
        for (std::size_t i = 0; i < n; ++i) {
            sys.eigenvectors(i, k) = solver.eigenvectors()(
                static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        }
    }
    return sys;
}

double min_eigenvalue(const ComplexMatrix& a) {
    return eig_hermitian(a).eigenvalues.front();
}

double trace_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (double lam : eig_hermitian(a).eigenvalues) s += std::abs(lam);
    return s;
}

double spectral_norm(const ComplexMatrix& a) {
    const auto ev = eig_hermitian(a).eigenvalues;
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

bool is_psd(const ComplexMatrix& a) {
    const auto ev = eig_hermitian(a).eigenvalues;
    const double norm = std::max(std::abs(ev.front()), std::abs(ev.back()));
    return ev.front() >= -kPsdTol * (1.0 + norm);
}

}  // namespace qid
