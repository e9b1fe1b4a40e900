#pragma once

#include <cstdint>
#include <vector>

#include "qcw/correlations.hpp"
#include "qcw/numerics.hpp"
#include "qcw/paradigm.hpp"

namespace qcw {

// Spectral-truncation construction on n qubits per side (n a perfect square,
// r = sqrt(n)): the uniform disjoint-pair target P_u, its amplitude matrix
// M_u on the weight-r block, the minimal rank-(K+1) truncation within the
// epsilon budget, and the resulting measured distribution P_r.
struct Thm2Construction {
    int n;
    double epsilon;
    std::uint64_t n1;  // C(n-r, r): disjoint partners per row
    std::uint64_t n2;  // C(n, r): weight-r block dimension
    JointDistribution p_u;
    SpectralDecomposition spectrum;  // of M_u restricted to the weight-r block
    std::size_t k;                   // last kept eigenvalue index; K+1 Schmidt terms
    int q;                           // ceil(log2(K+1)) entangled qubit pairs
    double n_prime;                  // sqrt(sum_{i<=K} lambda_i^2)
    ParadigmInstance instance;
    JointDistribution p_r;
};

struct Thm2Report {
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    std::uint64_t support_size = 0;    // must equal n1*n2
    double support_value_dev = 0.0;    // max |cell - 1/(n1 n2)| over the support
    double spectral_mass_dev = 0.0;    // |sum_i lambda_i^2 - 1|, within 1e-9
    std::size_t k = 0;
    bool k_minimal = false;            // prefix(k) >= 1-eps^2/8 > prefix(k-1)
    int q = 0;
    int rank_mu = 0;                   // eigenvalues with |lambda| > 1e-12
    bool q_within_rank = false;        // q <= ceil(log2(rank_mu))
    double n_prime = 0.0;
    double n_prime_lower = 0.0;        // sqrt(1 - eps^2/8) <= n_prime <= 1
    double tail_mass = 0.0;            // sum_{i>K} lambda_i^2, <= eps^2/8
    double frobenius_gap_sq = 0.0;     // ||M_u - M_K||_F^2, equals tail_mass up to rounding
    double distance = 0.0;             // ||P_u - P_r||_1, <= epsilon
    double epsilon = 0.0;
    double classical_threshold = 0.0;  // 2*epsilon: any P_c within epsilon of P_r
                                       // must lie within 2*epsilon of P_u
    bool pass = false;
};

// Uniform distribution over ordered pairs of disjoint weight-r strings,
// stored on the full weight-r x weight-r block (zeros at non-disjoint cells).
// Accepts n in {4, 9, 16}; n = 1 is rejected because weight-1 strings of
// length 1 are never disjoint, leaving no support.
JointDistribution build_pu(int n);

// Elementwise square root of a block distribution with equal row and column
// index sets, as a dense matrix over the block.
RealMatrix build_mu(const JointDistribution& pu);

// Minimal K with sum_{i<=K} lambda_i^2 >= 1 - eps^2/8 (eigenvalues already in
// descending squared-magnitude order). Requires 0 < eps < 2.
std::size_t truncation_rank(const SpectralDecomposition& spectrum, double epsilon);

Thm2Construction build_thm2(int n, double epsilon);

// Same construction but reusing an existing P_u and spectrum; lets callers
// sweep epsilon without repeating the eigendecomposition.
Thm2Construction build_thm2_from_spectrum(int n, double epsilon, JointDistribution pu,
                                          SpectralDecomposition spectrum);

Thm2Report verify_thm2(const Thm2Construction& con, double epsilon);

}  // namespace qcw
