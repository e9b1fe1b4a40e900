#include "qcw/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace qcw {

namespace {

void check_sorted_unique(const std::vector<std::uint64_t>& v, std::uint64_t side, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= side) throw std::invalid_argument(std::string(what) + ": index exceeds 2^n");
        if (i > 0 && v[i] <= v[i - 1])
            throw std::invalid_argument(std::string(what) + ": indices must be strictly ascending");
    }
}

}  // namespace

JointDistribution JointDistribution::dense(int n, std::vector<double> probabilities) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("JointDistribution::dense: n must be in [1,10]; use block storage beyond");
    const std::uint64_t side = std::uint64_t{1} << n;
    if (probabilities.size() != side * side)
        throw std::invalid_argument("JointDistribution::dense: need 2^n x 2^n entries");
    JointDistribution d;
    d.n_ = n;
    d.rows_.resize(side);
    d.cols_.resize(side);
    for (std::uint64_t i = 0; i < side; ++i) d.rows_[i] = d.cols_[i] = i;
    d.p_ = std::move(probabilities);
    d.validate();
    return d;
}

JointDistribution JointDistribution::block(int n, std::vector<std::uint64_t> rows,
                                           std::vector<std::uint64_t> cols,
                                           std::vector<double> block_probabilities) {
    if (n < 1 || n > 62) throw std::invalid_argument("JointDistribution::block: n out of range");
    JointDistribution d;
    d.n_ = n;
    const std::uint64_t side = (n == 62) ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
    check_sorted_unique(rows, side, "JointDistribution rows");
    check_sorted_unique(cols, side, "JointDistribution cols");
    if (block_probabilities.size() != rows.size() * cols.size())
        throw std::invalid_argument("JointDistribution::block: block size mismatch");
    d.rows_ = std::move(rows);
    d.cols_ = std::move(cols);
    d.p_ = std::move(block_probabilities);
    d.validate();
    return d;
}

void JointDistribution::validate() const {
    KahanSum mass;
    for (double v : p_) {
        if (!(v >= 0.0)) throw std::invalid_argument("JointDistribution: negative or NaN probability");
        mass.add(v);
    }
    if (std::abs(mass.value() - 1.0) > 1e-9)
        throw std::invalid_argument("JointDistribution: total mass deviates from 1 beyond 1e-9");
}

bool JointDistribution::is_dense() const {
    const std::uint64_t side = this->side();
    if (n_ > 10) return false;
    return rows_.size() == side && cols_.size() == side;
}

double JointDistribution::prob(std::uint64_t x, std::uint64_t y) const {
    auto rit = std::lower_bound(rows_.begin(), rows_.end(), x);
    if (rit == rows_.end() || *rit != x) return 0.0;
    auto cit = std::lower_bound(cols_.begin(), cols_.end(), y);
    if (cit == cols_.end() || *cit != y) return 0.0;
    return at(static_cast<std::size_t>(rit - rows_.begin()),
              static_cast<std::size_t>(cit - cols_.begin()));
}

std::size_t JointDistribution::support_size(double tol) const {
    std::size_t k = 0;
    for (double v : p_)
        if (v > tol) ++k;
    return k;
}

namespace {

// Walks the cells of two block distributions in unified row-major full-space
// order, invoking f(p1, p2, x, y) for every cell that is inside either block.
template <typename F>
void zip_cells(const JointDistribution& a, const JointDistribution& b, F&& f) {
    std::size_t ra = 0, rb = 0;
    const auto& arows = a.rows();
    const auto& brows = b.rows();
    while (ra < arows.size() || rb < brows.size()) {
        const bool have_a = ra < arows.size();
        const bool have_b = rb < brows.size();
        std::uint64_t x;
        bool in_a = false, in_b = false;
        if (have_a && (!have_b || arows[ra] <= brows[rb])) {
            x = arows[ra];
            in_a = true;
            in_b = have_b && brows[rb] == x;
        } else {
            x = brows[rb];
            in_b = true;
        }
        std::size_t ca = 0, cb = 0;
        const auto& acols = a.cols();
        const auto& bcols = b.cols();
        while ((in_a && ca < acols.size()) || (in_b && cb < bcols.size())) {
            const bool hava = in_a && ca < acols.size();
            const bool havb = in_b && cb < bcols.size();
            std::uint64_t y;
            double p1 = 0.0, p2 = 0.0;
            if (hava && (!havb || acols[ca] <= bcols[cb])) {
                y = acols[ca];
                p1 = a.at(ra, ca);
                ++ca;
                if (havb && bcols[cb] == y) {
                    p2 = b.at(rb, cb);
                    ++cb;
                }
            } else {
                y = bcols[cb];
                p2 = b.at(rb, cb);
                ++cb;
            }
            f(p1, p2, x, y);
        }
        if (in_a) ++ra;
        if (in_b) ++rb;
    }
}

}  // namespace

double variational_distance(const JointDistribution& d1, const JointDistribution& d2) {
    if (d1.n() != d2.n()) throw std::invalid_argument("variational_distance: size mismatch");
    KahanSum s;
    zip_cells(d1, d2, [&](double p1, double p2, std::uint64_t, std::uint64_t) {
        s.add(std::abs(p1 - p2));
    });
    return s.value();
}

BetaCloseResult is_beta_close(const JointDistribution& pc, const JointDistribution& pr,
                              double beta) {
    if (pc.n() != pr.n()) throw std::invalid_argument("is_beta_close: size mismatch");
    if (!(beta >= 0.0 && beta < 1.0)) throw std::invalid_argument("is_beta_close: beta must be in [0,1)");
    BetaCloseResult res;
    zip_cells(pc, pr, [&](double c, double r, std::uint64_t x, std::uint64_t y) {
        const double lo = (1.0 - beta) * r;
        const double hi = (1.0 + beta) * r;
        double v = 0.0;
        if (c < lo) v = lo - c;
        if (c > hi) v = c - hi;
        if (v > 0.0) {
            res.close = false;
            if (v > res.violation) {
                res.violation = v;
                res.worst_cell = Cell{x, y, c};
            }
        }
    });
    return res;
}

std::vector<std::pair<BitString, BitString>> sample(const JointDistribution& d,
                                                    std::uint64_t seed, std::size_t count) {
    if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
    // Cumulative masses over row-major block cells; the final edge is forced
    // to 1 so a uniform draw of 1-eps cannot fall off the end.
    const std::size_t cells = d.row_count() * d.col_count();
    std::vector<double> cdf(cells);
    KahanSum acc;
    for (std::size_t r = 0, i = 0; r < d.row_count(); ++r) {
        for (std::size_t c = 0; c < d.col_count(); ++c, ++i) {
            acc.add(d.at(r, c));
            cdf[i] = acc.value();
        }
    }
    std::size_t last_positive = cells - 1;
    while (last_positive > 0 && d.at(last_positive / d.col_count(), last_positive % d.col_count()) == 0.0)
        --last_positive;
    for (std::size_t i = last_positive; i < cells; ++i) cdf[i] = 1.0;

    std::mt19937_64 gen(seed);
    std::vector<std::pair<BitString, BitString>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        const std::size_t idx = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        const std::size_t r = idx / d.col_count();
        const std::size_t c = idx % d.col_count();
        out.emplace_back(BitString(d.n(), d.rows()[r]), BitString(d.n(), d.cols()[c]));
    }
    return out;
}

JointDistribution empirical_distribution(
    const std::vector<std::pair<BitString, BitString>>& samples, int n) {
    if (samples.empty()) throw std::invalid_argument("empirical_distribution: no samples");
    std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, std::size_t>> counts;
    std::vector<std::uint64_t> rows, cols;
    for (const auto& [x, y] : samples) {
        if (x.n != n || y.n != n) throw std::invalid_argument("empirical_distribution: sample length mismatch");
        ++counts[x.value][y.value];
    }
    for (const auto& [x, row] : counts) {
        rows.push_back(x);
        for (const auto& [y, c] : row) cols.push_back(y);
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    std::vector<double> block(rows.size() * cols.size(), 0.0);
    const double inv = 1.0 / static_cast<double>(samples.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = counts[rows[r]];
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto it = row.find(cols[c]);
            if (it != row.end())
                block[r * cols.size() + c] = static_cast<double>(it->second) * inv;
        }
    }
    return JointDistribution::block(n, std::move(rows), std::move(cols), std::move(block));
}

std::vector<Cell> support(const JointDistribution& d, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("support: tol must be >= 0");
    std::vector<Cell> out;
    for (std::size_t r = 0; r < d.row_count(); ++r)
        for (std::size_t c = 0; c < d.col_count(); ++c)
            if (d.at(r, c) > tol) out.push_back(Cell{d.rows()[r], d.cols()[c], d.at(r, c)});
    return out;
}

}  // namespace qcw
