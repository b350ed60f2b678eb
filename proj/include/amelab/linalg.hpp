#pragma once

#include <complex>
#include <vector>

namespace ame {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major. Sized for this project: every operator
/// we touch lives on at most 8 qubits (dim 256), so everything is O(n^3)
/// without apology.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cdouble& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const cdouble& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<cdouble>& data() const { return data_; }
    std::vector<cdouble>& data() { return data_; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conjugate() const;
    cdouble trace() const;
    double frobenius_norm() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cdouble s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cdouble s) { return a *= s; }
    friend Matrix operator*(cdouble s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    /// Matrix-vector product.
    std::vector<cdouble> apply(const std::vector<cdouble>& v) const;

    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cdouble> data_;
};

/// Eigendecomposition of a Hermitian matrix: A = V diag(values) V^dagger,
/// eigenvalues ascending, eigenvectors as orthonormal columns of V.
struct HermitianEig {
    std::vector<double> values;
    Matrix vectors;
};

/// Cyclic Jacobi for complex Hermitian matrices. Deterministic sweep order.
HermitianEig eig_hermitian(const Matrix& a);

/// Eigendecomposition of a real symmetric matrix stored row-major.
/// Cyclic Jacobi for n <= 64, Householder tridiagonalization + implicit-shift
/// QL for larger sizes. Eigenvalues ascending, eigenvectors as columns.
struct SymmetricEig {
    std::vector<double> values;
    std::vector<double> vectors;  // n x n row-major, column j = eigenvector j
};

SymmetricEig eig_symmetric(const std::vector<double>& a, int n);

/// Singular value decomposition A = U diag(sigma) V^dagger via one-sided
/// Jacobi. Singular values non-increasing; U is rows(A) x k, V is cols(A) x k
/// with k = min(rows, cols), both with orthonormal columns (zero singular
/// values get orthonormal completions).
struct Svd {
    Matrix u;
    std::vector<double> sigma;
    Matrix v;
};

Svd svd(const Matrix& a);

/// max eigenvalue helper for Hermitian input.
double max_eigenvalue(const Matrix& a);

}  // namespace ame
