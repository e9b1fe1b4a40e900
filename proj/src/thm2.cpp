#include "qcw/thm2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcw/bitstrings.hpp"

namespace qcw {

namespace {

int ceil_log2(std::uint64_t m) {
    if (m <= 1) return 0;
    return std::bit_width(m - 1);
}

std::vector<double> squared_prefix(const std::vector<double>& eigenvalues) {
    std::vector<double> prefix(eigenvalues.size());
    KahanSum s;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        s.add(eigenvalues[i] * eigenvalues[i]);
        prefix[i] = s.value();
    }
    return prefix;
}

}  // namespace

JointDistribution build_pu(int n) {
    const int r = exact_sqrt(n);
    if (r < 0) throw std::invalid_argument("build_pu: n must be a perfect square");
    if (n == 1)
        throw std::invalid_argument(
            "build_pu: weight-1 strings of length 1 are never disjoint; no support");
    if (n != 4 && n != 9 && n != 16)
        throw std::invalid_argument("build_pu: supported sizes are 4, 9, 16");

    const std::uint64_t n1 = binomial(n - r, r);
    const std::uint64_t n2 = binomial(n, r);
    const double val = 1.0 / (static_cast<double>(n1) * static_cast<double>(n2));

    const std::vector<BitString> block = enumerate_fixed_weight(n, r);
    std::vector<std::uint64_t> idx(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) idx[i] = block[i].value;

    std::vector<double> probs(block.size() * block.size(), 0.0);
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j)
            if (is_disjoint(block[i], block[j])) probs[i * block.size() + j] = val;

    std::vector<std::uint64_t> cols = idx;
    return JointDistribution::block(n, std::move(idx), std::move(cols), std::move(probs));
}

RealMatrix build_mu(const JointDistribution& pu) {
    if (pu.rows() != pu.cols())
        throw std::invalid_argument("build_mu: row and column index sets differ");
    const std::size_t d = pu.row_count();
    RealMatrix mu(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) mu.at(i, j) = std::sqrt(pu.at(i, j));
    return mu;
}

std::size_t truncation_rank(const SpectralDecomposition& spectrum, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 2.0))
        throw std::invalid_argument("truncation_rank: epsilon must lie in (0, 2)");
    if (spectrum.dim == 0) throw std::invalid_argument("truncation_rank: empty spectrum");
    const double threshold = 1.0 - epsilon * epsilon / 8.0;
    if (threshold <= 0.0) return 0;
    const std::vector<double> prefix = squared_prefix(spectrum.eigenvalues);
    for (std::size_t k = 0; k < prefix.size(); ++k)
        if (prefix[k] >= threshold) return k;
    return prefix.size() - 1;  // spectral mass rounded below threshold: keep all
}

Thm2Construction build_thm2(int n, double epsilon) {
    JointDistribution pu = build_pu(n);
    SpectralDecomposition spectrum = symmetric_eigendecomposition(build_mu(pu));
    return build_thm2_from_spectrum(n, epsilon, std::move(pu), std::move(spectrum));
}

Thm2Construction build_thm2_from_spectrum(int n, double epsilon, JointDistribution pu,
                                          SpectralDecomposition spectrum) {
    const int r = exact_sqrt(n);
    if (r < 0) throw std::invalid_argument("build_thm2: n must be a perfect square");
    const std::size_t k = truncation_rank(spectrum, epsilon);

    const std::vector<double> prefix = squared_prefix(spectrum.eigenvalues);
    const double n_prime = std::sqrt(prefix[k]);
    const int q = ceil_log2(k + 1);

    const std::vector<std::uint64_t>& block = pu.rows();
    const std::size_t d = spectrum.dim;

    ParadigmInstance inst;
    inst.n = n;
    inst.normalization = n_prime;
    inst.terms.reserve(k + 1);
    inst.alice_columns.reserve(k + 1);
    inst.bob_columns.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        inst.terms.push_back({spectrum.eigenvalues[i], i, i});
        SparseColumn col;
        col.index = i;
        col.entries.reserve(d);
        for (std::size_t rr = 0; rr < d; ++rr) {
            const double v = spectrum.eigenvectors.at(rr, i);
            if (v != 0.0) col.entries.emplace_back(block[rr], cplx{v, 0.0});
        }
        inst.alice_columns.push_back(col);
        inst.bob_columns.push_back(std::move(col));  // V = conj(U1) = U1: real vectors
    }

    const RealMatrix mk = low_rank_reconstruct(spectrum, k + 1);
    std::vector<double> probs(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double amp = mk.at(i, j) / n_prime;
            probs[i * d + j] = amp * amp;
        }
    JointDistribution p_r = JointDistribution::block(n, block, block, std::move(probs));

    return Thm2Construction{n,
                            epsilon,
                            binomial(n - r, r),
                            binomial(n, r),
                            std::move(pu),
                            std::move(spectrum),
                            k,
                            q,
                            n_prime,
                            std::move(inst),
                            std::move(p_r)};
}

Thm2Report verify_thm2(const Thm2Construction& con, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 2.0))
        throw std::invalid_argument("verify_thm2: epsilon must lie in (0, 2)");
    Thm2Report rep;
    rep.n1 = con.n1;
    rep.n2 = con.n2;
    rep.epsilon = epsilon;
    rep.classical_threshold = 2.0 * epsilon;

    const double uniform = 1.0 / (static_cast<double>(con.n1) * static_cast<double>(con.n2));
    for (std::size_t i = 0; i < con.p_u.row_count(); ++i)
        for (std::size_t j = 0; j < con.p_u.col_count(); ++j) {
            const double p = con.p_u.at(i, j);
            if (p == 0.0) continue;
            ++rep.support_size;
            rep.support_value_dev = std::max(rep.support_value_dev, std::abs(p - uniform));
        }

    const std::vector<double> prefix = squared_prefix(con.spectrum.eigenvalues);
    rep.spectral_mass_dev = std::abs(prefix.back() - 1.0);

    rep.k = con.k;
    const double threshold = 1.0 - epsilon * epsilon / 8.0;
    rep.k_minimal = prefix[con.k] >= threshold && (con.k == 0 || prefix[con.k - 1] < threshold);

    rep.q = con.q;
    for (double lam : con.spectrum.eigenvalues)
        if (std::abs(lam) > 1e-12) ++rep.rank_mu;
    rep.q_within_rank = rep.rank_mu > 0 && con.q <= ceil_log2(static_cast<std::uint64_t>(rep.rank_mu));

    rep.n_prime = con.n_prime;
    rep.n_prime_lower = threshold > 0.0 ? std::sqrt(threshold) : 0.0;
    rep.tail_mass = std::max(0.0, prefix.back() - prefix[con.k]);

    // Rebuilt truncation, compared against M_u entry by entry: checks the
    // tail identity through the matrices instead of through the spectrum.
    const RealMatrix mu = build_mu(con.p_u);
    const RealMatrix mk = low_rank_reconstruct(con.spectrum, con.k + 1);
    KahanSum gap;
    for (std::size_t i = 0; i < mu.rows; ++i)
        for (std::size_t j = 0; j < mu.cols; ++j) {
            const double dlt = mu.at(i, j) - mk.at(i, j);
            gap.add(dlt * dlt);
        }
    rep.frobenius_gap_sq = gap.value();

    rep.distance = variational_distance(con.p_u, con.p_r);

    const double eps_budget = epsilon * epsilon / 8.0;
    rep.pass = rep.support_size == rep.n1 * rep.n2 && rep.support_value_dev <= 1e-12 &&
               rep.spectral_mass_dev <= 1e-9 && rep.k_minimal && rep.q_within_rank &&
               rep.n_prime >= rep.n_prime_lower - 1e-12 && rep.n_prime <= 1.0 + 1e-12 &&
               rep.tail_mass <= eps_budget + 1e-12 &&
               rep.frobenius_gap_sq <= eps_budget + 1e-9 && rep.distance <= epsilon;
    return rep;
}

}  // namespace qcw
