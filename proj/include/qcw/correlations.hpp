#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcw/bitstrings.hpp"
#include "qcw/numerics.hpp"

namespace qcw {

// One cell of a joint distribution: Prob{X = x, Y = y}.
struct Cell {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    double p = 0.0;
};

// Joint distribution of two n-bit outcomes. Probability mass lives on a
// rectangular index block rows x cols (sorted full-space indices); entries
// outside the block are exactly zero. A dense distribution is the special
// case where both index lists enumerate all of {0,1}^n; dense storage is
// capped at n <= 10, larger n must be block-supported.
class JointDistribution {
  public:
    static JointDistribution dense(int n, std::vector<double> probabilities);
    static JointDistribution block(int n, std::vector<std::uint64_t> rows,
                                   std::vector<std::uint64_t> cols,
                                   std::vector<double> block_probabilities);

    int n() const { return n_; }
    std::uint64_t side() const { return std::uint64_t{1} << n_; }
    bool is_dense() const;

    const std::vector<std::uint64_t>& rows() const { return rows_; }
    const std::vector<std::uint64_t>& cols() const { return cols_; }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_.size(); }

    // Probability at block coordinates (index into rows()/cols()).
    double at(std::size_t r, std::size_t c) const { return p_[r * cols_.size() + c]; }
    // Probability at full-space coordinates; zero outside the block.
    double prob(std::uint64_t x, std::uint64_t y) const;

    std::size_t support_size(double tol = 0.0) const;

  private:
    JointDistribution() = default;
    void validate() const;

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> cols_;
    std::vector<double> p_;  // row-major over the block
};

// Sum over all cells of |D1 - D2|; in [0, 2]. Requires equal n.
double variational_distance(const JointDistribution& d1, const JointDistribution& d2);

struct BetaCloseResult {
    bool close = true;
    // Worst violating cell (largest excursion outside the allowed band),
    // row-major first on ties; meaningful only when !close.
    std::optional<Cell> worst_cell;
    double violation = 0.0;
};

// Checks (1-beta) Pr <= Pc <= (1+beta) Pr cellwise; beta in [0, 1). A zero
// cell of Pr forces a zero cell of Pc, and a positive cell of Pr forces
// Pc > 0 there, so closeness implies exact support equality.
BetaCloseResult is_beta_close(const JointDistribution& pc, const JointDistribution& pr,
                              double beta);

// i.i.d. draws by CDF inversion over support cells in row-major block order.
// Uniforms come from mt19937_64(seed), mapped to [0,1) via the top 53 bits;
// identical (D, seed, count) reproduces identical output bytes.
std::vector<std::pair<BitString, BitString>> sample(const JointDistribution& d,
                                                    std::uint64_t seed, std::size_t count);

// Normalized frequency matrix; cells never observed have probability exactly 0.
JointDistribution empirical_distribution(
    const std::vector<std::pair<BitString, BitString>>& samples, int n);

// Cells with probability strictly greater than tol, row-major order.
// Default tolerance 1e-12 separates construction zeros from rounding.
std::vector<Cell> support(const JointDistribution& d, double tol = 1e-12);

}  // namespace qcw
