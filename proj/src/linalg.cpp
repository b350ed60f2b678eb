#include "amelab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "amelab/errors.hpp"

namespace ame {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
    return m;
}

cdouble Matrix::trace() const {
    cdouble t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(cdouble s) {
    for (auto& z : data_) z *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
    Matrix m(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int k = 0; k < a.cols(); ++k) {
            const cdouble ark = a(r, k);
            if (ark == cdouble(0.0)) continue;
            for (int c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
        }
    }
    return m;
}

std::vector<cdouble> Matrix::apply(const std::vector<cdouble>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionError("matrix apply: size mismatch");
    std::vector<cdouble> out(rows_);
    for (int r = 0; r < rows_; ++r) {
        cdouble s = 0.0;
        for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

bool Matrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r; c < cols_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

bool Matrix::is_unitary(double tol) const {
    if (rows_ != cols_) return false;
    Matrix g = adjoint() * (*this);
    g -= identity(rows_);
    return g.frobenius_norm() <= tol;
}

namespace {

// One real-Jacobi rotation (c, s) zeroing the off-diagonal of the 2x2
// symmetric block [[app, apq], [apq, aqq]] with apq > 0.
void jacobi_cs(double app, double apq, double aqq, double& c, double& s) {
    const double tau = (aqq - app) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
    c = 1.0 / std::sqrt(t * t + 1.0);
    s = t * c;
}

void sort_eig(std::vector<double>& values, std::vector<int>& order) {
    order.resize(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
}

// Householder tridiagonalization, accumulating the orthogonal transform in a.
// Classic tred2.
void tred2(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    A(j, i) = A(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
                for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
            }
        }
        d[i] = A(i, i);
        A(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) A(j, i) = A(i, j) = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e), rotations accumulated into z.
// Classic tql2.
void tql2(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, int n) {
    auto Z = [&](int i, int j) -> double& { return z[static_cast<size_t>(i) * n + j]; };
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 64) throw ConvergenceError("tql2: too many QL iterations", std::abs(e[l]));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = r = std::hypot(f, g);
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = Z(k, i + 1);
                        Z(k, i + 1) = s * Z(k, i) + c * f;
                        Z(k, i) = c * Z(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

SymmetricEig eig_symmetric_jacobi(std::vector<double> a, int n) {
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    auto V = [&](int i, int j) -> double& { return v[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) V(i, i) = 1.0;

    double norm = 0.0;
    for (const double x : a) norm += x * x;
    norm = std::sqrt(norm);
    const double stop = std::max(norm, 1.0) * 1e-15;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
        if (std::sqrt(off) <= stop) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (std::abs(apq) <= stop / n) continue;
                double c, s;
                jacobi_cs(A(p, p), apq, A(q, q), c, s);
                for (int k = 0; k < n; ++k) {
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = A(i, i);
    std::vector<int> order;
    sort_eig(vals, order);

    SymmetricEig out;
    out.values.resize(n);
    out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        out.values[j] = vals[order[j]];
        for (int i = 0; i < n; ++i) out.vectors[static_cast<size_t>(i) * n + j] = V(i, order[j]);
    }
    return out;
}

}  // namespace

SymmetricEig eig_symmetric(const std::vector<double>& a, int n) {
    if (static_cast<int>(a.size()) != n * n) throw DimensionError("eig_symmetric: size mismatch");
    if (n == 0) return {};
    if (n <= 64) return eig_symmetric_jacobi(a, n);

    std::vector<double> q = a;
    std::vector<double> d(n), e(n);
    tred2(q, n, d, e);
    tql2(d, e, q, n);

    std::vector<int> order;
    sort_eig(d, order);
    SymmetricEig out;
    out.values.resize(n);
    out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        out.values[j] = d[order[j]];
        for (int i = 0; i < n; ++i) out.vectors[static_cast<size_t>(i) * n + j] = q[static_cast<size_t>(i) * n + order[j]];
    }
    return out;
}

HermitianEig eig_hermitian(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("eig_hermitian: square matrix required");
    const int n = m.rows();
    Matrix a = m;
    Matrix v = Matrix::identity(n);

    const double stop = std::max(a.frobenius_norm(), 1.0) * 1e-15;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= stop) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= stop / n) continue;
                // Phase out a(p,q), then rotate as in the real case.
                const cdouble phase = apq / mag;  // e^{i phi}
                double c, s;
                jacobi_cs(std::real(a(p, p)), mag, std::real(a(q, q)), c, s);
                // Unitary J: J(p,p)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase), J(q,q)=c;
                // J^dagger A J has zero (p,q) entry for this (c,s).
                const cdouble jpq = s * phase;
                const cdouble jqp = -s * std::conj(phase);
                // A <- J^dagger A J : column update then row update.
                for (int k = 0; k < n; ++k) {
                    const cdouble akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * jqp;
                    a(k, q) = akp * jpq + akq * c;
                }
                for (int k = 0; k < n; ++k) {
                    const cdouble apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * c;
                }
            }
        }
    }

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = std::real(a(i, i));
    std::vector<int> order;
    sort_eig(vals, order);

    HermitianEig out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = vals[order[j]];
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

double max_eigenvalue(const Matrix& a) {
    const auto eig = eig_hermitian(a);
    return eig.values.back();
}

Svd svd(const Matrix& a) {
    const bool tall = a.rows() >= a.cols();
    Matrix w = tall ? a : a.adjoint();
    const int m = w.rows(), n = w.cols();
    Matrix v = Matrix::identity(n);

    const double scale = std::max(w.frobenius_norm(), 1e-300);
    const double stop = 1e-15;

    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                cdouble gamma = 0.0;
                for (int k = 0; k < m; ++k) {
                    alpha += std::norm(w(k, p));
                    beta += std::norm(w(k, q));
                    gamma += std::conj(w(k, p)) * w(k, q);
                }
                const double mag = std::abs(gamma);
                if (mag <= stop * scale * scale) continue;
                rotated = true;
                const cdouble phase = gamma / mag;
                double c, s;
                jacobi_cs(alpha, mag, beta, c, s);
                const cdouble jpq = s * phase;
                const cdouble jqp = -s * std::conj(phase);
                for (int k = 0; k < m; ++k) {
                    const cdouble wkp = w(k, p), wkq = w(k, q);
                    w(k, p) = wkp * c + wkq * jqp;
                    w(k, q) = wkp * jpq + wkq * c;
                }
                for (int k = 0; k < n; ++k) {
                    const cdouble vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * c;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sig(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < m; ++k) s += std::norm(w(k, j));
        sig[j] = std::sqrt(s);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] > sig[y]; });

    Matrix u(m, n), vv(n, n);
    std::vector<double> sigma(n);
    for (int j = 0; j < n; ++j) {
        const int o = order[j];
        sigma[j] = sig[o];
        for (int k = 0; k < n; ++k) vv(k, j) = v(k, o);
        if (sig[o] > 1e-14 * scale) {
            for (int k = 0; k < m; ++k) u(k, j) = w(k, o) / sig[o];
        }
    }
    // Orthonormal completion for (near-)zero singular values.
    for (int j = 0; j < n; ++j) {
        if (sigma[j] > 1e-14 * scale) continue;
        for (int cand = 0; cand < m; ++cand) {
            std::vector<cdouble> col(m, 0.0);
            col[cand] = 1.0;
            for (int jj = 0; jj < n; ++jj) {
                if (jj == j) continue;
                cdouble ip = 0.0;
                for (int k = 0; k < m; ++k) ip += std::conj(u(k, jj)) * col[k];
                for (int k = 0; k < m; ++k) col[k] -= ip * u(k, jj);
            }
            double nn = 0.0;
            for (const auto& z : col) nn += std::norm(z);
            nn = std::sqrt(nn);
            if (nn > 0.5) {
                for (int k = 0; k < m; ++k) u(k, j) = col[k] / nn;
                break;
            }
        }
    }

    Svd out;
    out.sigma = std::move(sigma);
    if (tall) {
        out.u = std::move(u);
        out.v = std::move(vv);
    } else {
        // a = (w)^dagger = (U S V^+)^+ = V S U^+
        out.u = std::move(vv);
        out.v = std::move(u);
    }
    return out;
}

}  // namespace ame
