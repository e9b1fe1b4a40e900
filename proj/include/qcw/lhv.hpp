#pragma once

#include <cstdint>
#include <vector>

#include "qcw/correlations.hpp"

namespace qcw {

// One shared-randomness outcome: with probability `weight` the parties answer
// independently from `alice` and `bob`. Marginals are indexed by the model's
// rows/cols lists; private randomness is absorbed into the marginals, which
// is fully general for product behaviour.
struct LhvComponent {
    double weight = 0.0;
    std::vector<double> alice;
    std::vector<double> bob;
};

// Mixture of product distributions over n-bit outcome pairs. rows/cols name
// the full-space indices the marginals put mass on (a dense model lists all
// of {0,1}^n); component count = |S|, the shared-randomness support size.
struct LhvModel {
    int n = 1;
    std::vector<std::uint64_t> rows;
    std::vector<std::uint64_t> cols;
    std::vector<LhvComponent> components;
};

// Throws std::invalid_argument unless weights are nonnegative and sum to 1
// within 1e-9 and every marginal is nonnegative and sums to 1 within 1e-9.
void validate_model(const LhvModel& m);

// P_c = sum_z w_z (p_z outer q_z), as a block distribution on rows x cols.
JointDistribution evaluate(const LhvModel& m);

struct FitOptions {
    int max_sweeps = 500;
    double convergence = 1e-10;  // stop when the squared-loss drop per sweep is below this
};

struct FitResult {
    LhvModel model;
    double distance = 2.0;                // ||target - evaluate(model)||_1
    int winning_restart = 0;
    std::vector<double> surrogate_trace;  // squared loss after init and each sweep,
                                          // non-increasing; winning restart only
};

// Best-of-restarts alternating minimization of ||target - P_c||_F^2 over
// (weights, alice marginals, bob marginals), reporting L1. Marginal blocks
// are exact simplex-projected least squares; weights move by a Frank-Wolfe
// step with exact line search, so the surrogate never increases. The
// returned model is the best L1 iterate seen, so the result is never worse
// than its initialization. Restart 0 places point masses on the k largest
// target cells (exact whenever k >= support size); restarts r >= 1 draw
// Dirichlet(1) marginals from mt19937_64(splitmix64(seed + r)). Restarts run
// concurrently; selection is deterministic (best distance, tie -> lowest
// restart index).
FitResult fit(const JointDistribution& target, std::size_t k, std::uint64_t seed,
              int restarts = 32, const FitOptions& opts = {});

// fit() with one extra candidate: `warm` padded to k components by zero-weight
// point masses. Guarantees the result is at least as good as `warm`.
FitResult fit_warm(const JointDistribution& target, std::size_t k, std::uint64_t seed,
                   int restarts, const LhvModel& warm, const FitOptions& opts = {});

enum class CertificateMode { multiplicative, additive };

// Cross-free support rectangle: every cell of a x b (row-index set x
// column-index set, full-space indices) lies inside the certified support.
struct Rectangle {
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> b;
};

struct RectangleCover {
    std::vector<Rectangle> rectangles;
};

// Minimum family of support rectangles covering every support cell of a
// symmetric target, counting a rectangle as covering both a x b and b x a
// (components of a model for a symmetric target pair up with their
// transposes). Exhaustive over closed rectangles; requires side <= 8.
RectangleCover minimal_rectangle_cover(const JointDistribution& target,
                                       double tolerance = 1e-12);

// multiplicative: size of minimal_rectangle_cover — a lower bound on the
// component count of any model whose support matches the target's exactly,
// which beta-closeness with beta < 1 forces. additive: smallest k for which
// mixtures with all weights and marginals on the 1/16 grid come within
// `tolerance` in L1; a certificate heuristic (grid, not continuum), rejected
// when the target block exceeds 16 cells or the enumeration budget blows up.
int exact_min_components(const JointDistribution& target, CertificateMode mode,
                         double tolerance = 1e-12);

struct CurveRow {
    int n = 0;
    std::size_t k = 0;
    double distance = 2.0;
    bool pass = false;  // distance <= 2 * epsilon
};

// For each n: fit the uniform disjoint-pair target with every budget k in
// ascending order, warm-starting each budget from the previous best model,
// so distance is non-increasing in k. Rows come out sorted by (n, k).
std::vector<CurveRow> randomness_curve(const std::vector<int>& ns, double epsilon,
                                       const std::vector<std::size_t>& budgets,
                                       std::uint64_t seed, int restarts = 8);

}  // namespace qcw
