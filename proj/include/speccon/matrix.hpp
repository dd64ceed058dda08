#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "speccon/errors.hpp"

namespace speccon {

using cplx = std::complex<double>;

// Dense row-major rectangular matrix. Used for data panels (n x p),
// triangular factors, and scratch buffers inside the solvers.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    double* row(std::size_t i) { return v_.data() + i * cols_; }
    const double* row(std::size_t i) const { return v_.data() + i * cols_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> v_;
};

// Dense real symmetric p x p matrix. The constructor symmetrizes so that
// at(i,j) == at(j,i) holds bit-exactly from then on; set() writes both
// mirror entries.
class SymMatrix {
public:
    SymMatrix() = default;

    explicit SymMatrix(std::size_t dim, double fill = 0.0)
        : p_(check_dim(dim)), v_(dim * dim, fill) {}

    // Symmetrizes a general square matrix as (a + a^T)/2.
    explicit SymMatrix(const Matrix& a) : p_(check_dim(a.rows())), v_(p_ * p_) {
        if (a.rows() != a.cols()) throw DimensionMismatch("SymMatrix: input not square");
        for (std::size_t i = 0; i < p_; ++i) {
            v_[i * p_ + i] = a(i, i);
            for (std::size_t j = i + 1; j < p_; ++j) {
                const double m = 0.5 * (a(i, j) + a(j, i));
                v_[i * p_ + j] = m;
                v_[j * p_ + i] = m;
            }
        }
    }

    // Row-major initializer for small literals: SymMatrix({{4,2},{2,3}}).
    SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
        : p_(check_dim(rows.size())), v_(p_ * p_) {
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != p_) throw DimensionMismatch("SymMatrix: ragged initializer");
            std::size_t j = 0;
            for (double x : r) v_[i * p_ + j++] = x;
            ++i;
        }
        for (i = 0; i < p_; ++i)
            for (std::size_t j = i + 1; j < p_; ++j) {
                const double m = 0.5 * (v_[i * p_ + j] + v_[j * p_ + i]);
                v_[i * p_ + j] = m;
                v_[j * p_ + i] = m;
            }
    }

    static SymMatrix identity(std::size_t n) {
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.v_[i * n + i] = 1.0;
        return m;
    }

    static SymMatrix diagonal(const std::vector<double>& d) {
        SymMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.v_[i * d.size() + i] = d[i];
        return m;
    }

    std::size_t dim() const { return p_; }

    double at(std::size_t i, std::size_t j) const { return v_[i * p_ + j]; }
    void set(std::size_t i, std::size_t j, double x) {
        v_[i * p_ + j] = x;
        v_[j * p_ + i] = x;
    }

    const double* data() const { return v_.data(); }
    const double* row(std::size_t i) const { return v_.data() + i * p_; }

    Matrix dense() const {
        Matrix m(p_, p_);
        for (std::size_t i = 0; i < p_ * p_; ++i) m.data()[i] = v_[i];
        return m;
    }

    bool operator==(const SymMatrix&) const = default;

private:
    static std::size_t check_dim(std::size_t n) {
        if (n < 1) throw DimensionMismatch("SymMatrix: dim must be >= 1");
        return n;
    }

    std::size_t p_ = 0;
    std::vector<double> v_;
};

// Dense complex Hermitian p x p matrix: at(i,j) == conj(at(j,i)) bit-exactly,
// diagonal entries real. Houses per-frequency cross-spectral matrices.
class HermMatrix {
public:
    HermMatrix() = default;

    explicit HermMatrix(std::size_t dim)
        : p_(check_dim(dim)), v_(dim * dim, cplx{0.0, 0.0}) {}

    std::size_t dim() const { return p_; }

    cplx at(std::size_t i, std::size_t j) const { return v_[i * p_ + j]; }

    // Writes entry (i,j) and its conjugate mirror; diagonal keeps the real part.
    void set(std::size_t i, std::size_t j, cplx x) {
        if (i == j) {
            v_[i * p_ + i] = cplx{x.real(), 0.0};
        } else {
            v_[i * p_ + j] = x;
            v_[j * p_ + i] = std::conj(x);
        }
    }

    const cplx* data() const { return v_.data(); }

    bool operator==(const HermMatrix&) const = default;

private:
    static std::size_t check_dim(std::size_t n) {
        if (n < 1) throw DimensionMismatch("HermMatrix: dim must be >= 1");
        return n;
    }

    std::size_t p_ = 0;
    std::vector<cplx> v_;
};

}  // namespace speccon
