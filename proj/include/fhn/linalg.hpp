#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fhn {

// Dense row-major matrix. Sizes here are tiny (regression dimension 5,
// Laplacians up to 8), so no attempt at blocking or views.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<const double> data() const { return a_; }

    // max |a_ij - a_ji|
    double asymmetry() const;

    void matvec(std::span<const double> x, std::span<double> out) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> values; // ascending
    Matrix vectors;             // column j pairs with values[j]
};

// Cyclic-by-row Jacobi rotations. Input must be symmetric; the caller is
// responsible for checking (see analysis::symmetric_eigenvalues for the
// checked front end). Converges quadratically; sizes up to ~100.
EigenDecomposition jacobi_eigen(Matrix a, int max_sweeps = 100);

} // namespace fhn
