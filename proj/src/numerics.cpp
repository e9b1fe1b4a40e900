#include "qcw/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcw {

double RealMatrix::frobenius_norm() const {
    KahanSum s;
    for (double x : a) s.add(x * x);
    return std::sqrt(s.value());
}

bool RealMatrix::is_symmetric(double tol) const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            if (std::abs(at(i, j) - at(j, i)) > tol) return false;
    return true;
}

std::vector<cplx> ComplexMatrix::column(std::size_t c) const {
    std::vector<cplx> v(dim);
    for (std::size_t r = 0; r < dim; ++r) v[r] = at(r, c);
    return v;
}

double UnitaryMatrix::unitarity_residual() const {
    const std::size_t d = dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            cplx g{};
            for (std::size_t r = 0; r < d; ++r) g += std::conj(m.at(r, i)) * m.at(r, j);
            if (i == j) g -= 1.0;
            worst = std::max(worst, std::abs(g));
        }
    }
    return worst;
}

double SpectralDecomposition::reconstruction_residual(const RealMatrix& a) const {
    KahanSum s;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            double r = 0.0;
            for (std::size_t t = 0; t < dim; ++t)
                r += eigenvalues[t] * eigenvectors.at(i, t) * eigenvectors.at(j, t);
            double d = a.at(i, j) - r;
            s.add(d * d);
        }
    }
    return std::sqrt(s.value());
}

double SpectralDecomposition::orthogonality_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            double g = 0.0;
            for (std::size_t r = 0; r < dim; ++r)
                g += eigenvectors.at(r, i) * eigenvectors.at(r, j);
            if (i == j) g -= 1.0;
            worst = std::max(worst, std::abs(g));
        }
    }
    return worst;
}

namespace {

double off_diagonal_norm(const RealMatrix& a) {
    KahanSum s;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (i != j) s.add(a.at(i, j) * a.at(i, j));
    return std::sqrt(s.value());
}

}  // namespace

SpectralDecomposition symmetric_eigendecomposition(const RealMatrix& input,
                                                   const JacobiOptions& opts) {
    if (input.rows != input.cols) throw std::invalid_argument("symmetric_eigendecomposition: matrix not square");
    if (!input.is_symmetric(1e-12))
        throw std::invalid_argument("symmetric_eigendecomposition: matrix not symmetric within 1e-12");
    const std::size_t d = input.rows;

    RealMatrix a = input;
    const double norm_a = a.frobenius_norm();
    const double conv = opts.rel_tol * norm_a;
    // Skipping every pivot below rot_tol keeps the off-diagonal Frobenius norm
    // under conv: sqrt(d^2) * conv/(2d) < conv.
    const double rot_tol = (d > 0) ? conv / (2.0 * static_cast<double>(d)) : 0.0;

    // Eigenvectors accumulate transposed: row i of vt is eigenvector i, so the
    // rotation update touches two contiguous rows.
    RealMatrix vt(d, d);
    for (std::size_t i = 0; i < d; ++i) vt.at(i, i) = 1.0;

    std::vector<double> diag(d);
    for (std::size_t i = 0; i < d; ++i) diag[i] = a.at(i, i);

    int sweep = 0;
    double off = off_diagonal_norm(a);
    while (off > conv) {
        if (sweep >= opts.max_sweeps) {
            std::ostringstream msg;
            msg << "symmetric_eigendecomposition: no convergence after " << opts.max_sweeps
                << " sweeps; off-diagonal norm " << off;
            throw std::runtime_error(msg.str());
        }
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double apq = a.at(p, q);
                if (std::abs(apq) <= rot_tol) continue;

                const double theta = (diag[q] - diag[p]) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;

                diag[p] -= h;
                diag[q] += h;
                a.at(p, p) -= h;
                a.at(q, q) += h;
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;

                double* ap = a.row(p);
                double* aq = a.row(q);
                for (std::size_t k = 0; k < d; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = ap[k];
                    const double akq = aq[k];
                    const double np = akp - s * (akq + tau * akp);
                    const double nq = akq + s * (akp - tau * akq);
                    ap[k] = np;
                    aq[k] = nq;
                    a.at(k, p) = np;
                    a.at(k, q) = nq;
                }

                double* vp = vt.row(p);
                double* vq = vt.row(q);
                for (std::size_t k = 0; k < d; ++k) {
                    const double gp = vp[k];
                    const double gq = vq[k];
                    vp[k] = gp - s * (gq + tau * gp);
                    vq[k] = gq + s * (gp - tau * gq);
                }
            }
        }
        ++sweep;
        off = off_diagonal_norm(a);
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return diag[i] * diag[i] > diag[j] * diag[j];
    });

    SpectralDecomposition out;
    out.dim = d;
    out.eigenvalues.resize(d);
    out.eigenvectors = RealMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        out.eigenvalues[i] = diag[order[i]];
        const double* src = vt.row(order[i]);
        for (std::size_t r = 0; r < d; ++r) out.eigenvectors.at(r, i) = src[r];
    }
    return out;
}

UnitaryMatrix complete_to_unitary(
    const std::vector<std::pair<std::size_t, std::vector<cplx>>>& prescribed,
    std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("complete_to_unitary: dim must be positive");
    for (const auto& [idx, v] : prescribed) {
        if (idx >= dim) throw std::invalid_argument("complete_to_unitary: column index out of range");
        if (v.size() != dim) throw std::invalid_argument("complete_to_unitary: vector length mismatch");
    }
    for (std::size_t i = 0; i < prescribed.size(); ++i) {
        for (std::size_t j = i; j < prescribed.size(); ++j) {
            if (j > i && prescribed[i].first == prescribed[j].first)
                throw std::invalid_argument("complete_to_unitary: duplicate column index");
            cplx g{};
            for (std::size_t r = 0; r < dim; ++r)
                g += std::conj(prescribed[i].second[r]) * prescribed[j].second[r];
            const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{};
            if (std::abs(g - want) > 1e-10) {
                std::ostringstream msg;
                msg << "complete_to_unitary: prescribed vectors not orthonormal; <col " << prescribed[i].first
                    << ", col " << prescribed[j].first << "> = (" << g.real() << ", " << g.imag() << ")";
                throw std::invalid_argument(msg.str());
            }
        }
    }

    UnitaryMatrix u;
    u.m = ComplexMatrix(dim);
    std::vector<bool> used(dim, false);

    // placed[k]: columns already fixed, in placement order; each new candidate
    // is orthogonalized against all of them (two passes for stability).
    std::vector<std::vector<cplx>> placed;
    placed.reserve(dim);
    for (const auto& [idx, v] : prescribed) {
        used[idx] = true;
        placed.push_back(v);
        for (std::size_t r = 0; r < dim; ++r) u.m.at(r, idx) = v[r];
    }

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < dim; ++c)
        if (!used[c]) free_cols.push_back(c);

    std::size_t next_free = 0;
    for (std::size_t j = 0; j < dim && next_free < free_cols.size(); ++j) {
        std::vector<cplx> v(dim, cplx{});
        v[j] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& w : placed) {
                cplx g{};
                for (std::size_t r = 0; r < dim; ++r) g += std::conj(w[r]) * v[r];
                for (std::size_t r = 0; r < dim; ++r) v[r] -= g * w[r];
            }
        }
        double nrm2 = 0.0;
        for (const cplx& x : v) nrm2 += std::norm(x);
        const double nrm = std::sqrt(nrm2);
        if (nrm < 1e-10) continue;
        for (cplx& x : v) x /= nrm;
        const std::size_t col = free_cols[next_free++];
        for (std::size_t r = 0; r < dim; ++r) u.m.at(r, col) = v[r];
        placed.push_back(std::move(v));
    }
    if (next_free != free_cols.size())
        throw std::runtime_error("complete_to_unitary: standard basis exhausted before completion");
    return u;
}

RealMatrix low_rank_reconstruct(const SpectralDecomposition& decomp, std::size_t keep) {
    if (keep < 1 || keep > decomp.dim)
        throw std::invalid_argument("low_rank_reconstruct: keep out of range [1, dim]");
    const std::size_t d = decomp.dim;
    RealMatrix out(d, d);
    std::vector<double> col(d);
    for (std::size_t t = 0; t < keep; ++t) {
        const double lam = decomp.eigenvalues[t];
        if (lam == 0.0) continue;
        for (std::size_t r = 0; r < d; ++r) col[r] = decomp.eigenvectors.at(r, t);
        for (std::size_t i = 0; i < d; ++i) {
            const double w = lam * col[i];
            double* row = out.row(i);
            for (std::size_t j = 0; j < d; ++j) row[j] += w * col[j];
        }
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace qcw
