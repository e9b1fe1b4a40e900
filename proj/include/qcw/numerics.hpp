#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qcw {

using cplx = std::complex<double>;

// Dense row-major real matrix.
struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    double* row(std::size_t r) { return a.data() + r * cols; }
    const double* row(std::size_t r) const { return a.data() + r * cols; }

    double frobenius_norm() const;
    bool is_symmetric(double tol) const;
};

// Dense row-major complex matrix.
struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<cplx> a;

    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t d) : dim(d), a(d * d, cplx{}) {}

    cplx& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    cplx at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
    std::vector<cplx> column(std::size_t c) const;
};

// Square complex matrix with unit columns; ||U'U - I||_max <= 1e-10 when
// produced by complete_to_unitary (checked by unitarity_residual).
struct UnitaryMatrix {
    ComplexMatrix m;

    std::size_t dim() const { return m.dim; }
    cplx at(std::size_t r, std::size_t c) const { return m.at(r, c); }
    std::vector<cplx> column(std::size_t c) const { return m.column(c); }

    // max_{ij} |(U'U - I)_{ij}|
    double unitarity_residual() const;
};

// Eigendecomposition A = Q diag(eigenvalues) Q^T of a real symmetric matrix.
// Eigenvalues are sorted by descending squared magnitude; ties keep the order
// in which the Jacobi iteration produced them. Column i of Q pairs with
// eigenvalues[i].
struct SpectralDecomposition {
    std::size_t dim = 0;
    std::vector<double> eigenvalues;
    RealMatrix eigenvectors;

    double reconstruction_residual(const RealMatrix& a) const;  // ||A - Q L Q^T||_F
    double orthogonality_residual() const;                      // ||Q^T Q - I||_max
};

struct JacobiOptions {
    int max_sweeps = 100;
    double rel_tol = 1e-12;  // converged when off-diagonal Frobenius < rel_tol * ||A||_F
};

// Cyclic Jacobi eigensolver. Rejects non-square or asymmetric (beyond 1e-12
// elementwise) input; throws with the residual off-diagonal norm if the sweep
// cap is exhausted.
SpectralDecomposition symmetric_eigendecomposition(const RealMatrix& a,
                                                   const JacobiOptions& opts = {});

// Builds a unitary whose columns at the prescribed indices equal the given
// orthonormal vectors exactly. Remaining columns come from Gram-Schmidt over
// the standard basis e_0, e_1, ... in ascending index order; candidates whose
// residual norm falls below 1e-10 are skipped. Deterministic.
UnitaryMatrix complete_to_unitary(
    const std::vector<std::pair<std::size_t, std::vector<cplx>>>& prescribed,
    std::size_t dim);

// Q D_r Q^T where D_r keeps the first `keep` eigenvalues in decomposition
// order and zeroes the rest. keep must lie in [1, dim].
RealMatrix low_rank_reconstruct(const SpectralDecomposition& decomp, std::size_t keep);

// Neumaier compensated accumulator for long probability sums.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// splitmix64 mix; documented seed-splitting rule for derived RNG streams.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qcw
