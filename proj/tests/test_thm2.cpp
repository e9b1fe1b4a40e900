#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "qcw/bitstrings.hpp"
#include "qcw/thm2.hpp"

using namespace qcw;

namespace {

// Spectrum carrying only eigenvalues; enough for truncation_rank, which never
// touches the eigenvectors.
SpectralDecomposition bare_spectrum(std::vector<double> eigenvalues) {
    SpectralDecomposition s;
    s.dim = eigenvalues.size();
    s.eigenvalues = std::move(eigenvalues);
    return s;
}

}  // namespace

TEST_CASE("build_pu(4) is uniform on the six complement pairs") {
    const auto pu = build_pu(4);
    CHECK(pu.n() == 4);
    REQUIRE(pu.row_count() == 6);
    REQUIRE(pu.col_count() == 6);
    const std::vector<std::uint64_t> block{3, 5, 6, 9, 10, 12};
    CHECK(pu.rows() == block);
    CHECK(pu.cols() == block);
    CHECK(pu.support_size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const bool complement = block[i] + block[j] == 15;
            if (complement)
                CHECK(pu.at(i, j) == 1.0 / 6.0);
            else
                CHECK(pu.at(i, j) == 0.0);
        }
}

TEST_CASE("build_pu(9) is uniform over ordered disjoint weight-3 pairs") {
    const auto pu = build_pu(9);
    REQUIRE(pu.row_count() == 84);
    CHECK(pu.support_size() == 1680);
    const double val = 1.0 / 1680.0;
    // 7 = 000000111 and 56 = 000111000 are disjoint; 7 and 14 overlap.
    CHECK(pu.prob(7, 56) == val);
    CHECK(pu.prob(56, 7) == val);
    CHECK(pu.prob(7, 14) == 0.0);
    CHECK(pu.prob(7, 7) == 0.0);

    KahanSum mass;
    for (std::size_t i = 0; i < 84; ++i)
        for (std::size_t j = 0; j < 84; ++j) mass.add(pu.at(i, j));
    CHECK(std::abs(mass.value() - 1.0) <= 1e-12);

    // Every row has exactly C(6,3) = 20 disjoint partners.
    for (std::size_t i = 0; i < 84; ++i) {
        int partners = 0;
        for (std::size_t j = 0; j < 84; ++j)
            if (pu.at(i, j) != 0.0) ++partners;
        CHECK(partners == 20);
    }
}

TEST_CASE("build_pu rejects sizes without a disjoint-pair block") {
    CHECK_THROWS_AS(build_pu(1), std::invalid_argument);
    CHECK_THROWS_AS(build_pu(2), std::invalid_argument);
    CHECK_THROWS_AS(build_pu(8), std::invalid_argument);
    CHECK_THROWS_AS(build_pu(25), std::invalid_argument);
    CHECK_THROWS_AS(build_pu(0), std::invalid_argument);
}

TEST_CASE("build_mu is the elementwise square root on the block") {
    const auto pu = build_pu(4);
    const auto mu = build_mu(pu);
    const double v = std::sqrt(1.0 / 6.0);
    REQUIRE(mu.rows == 6);
    REQUIRE(mu.cols == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(mu.at(i, j) == (i + j == 5 ? v : 0.0));  // block is complement-reversed
    CHECK(mu.is_symmetric(0.0));
}

TEST_CASE("the weight-2 amplitude matrix has eigenvalues +-1/sqrt(6)") {
    const auto spectrum = symmetric_eigendecomposition(build_mu(build_pu(4)));
    REQUIRE(spectrum.eigenvalues.size() == 6);
    const double v = std::sqrt(1.0 / 6.0);
    int plus = 0, minus = 0;
    KahanSum mass;
    for (double lam : spectrum.eigenvalues) {
        CHECK(std::abs(std::abs(lam) - v) <= 1e-10);
        mass.add(lam * lam);
        (lam > 0 ? plus : minus) += 1;
    }
    CHECK(plus == 3);
    CHECK(minus == 3);
    CHECK(std::abs(mass.value() - 1.0) <= 1e-9);
}

TEST_CASE("the weight-3 amplitude matrix has the four-level spectrum") {
    const auto spectrum = symmetric_eigendecomposition(build_mu(build_pu(9)));
    REQUIRE(spectrum.eigenvalues.size() == 84);
    const double s = 1.0 / std::sqrt(1680.0);
    // Sorted by squared magnitude: 20, then -10 (x8), then 4 (x27), then -1 (x48).
    std::vector<std::pair<double, int>> levels{{20.0, 1}, {-10.0, 8}, {4.0, 27}, {-1.0, 48}};
    std::size_t i = 0;
    for (const auto& [value, count] : levels)
        for (int rep = 0; rep < count; ++rep, ++i)
            CHECK(std::abs(spectrum.eigenvalues[i] - value * s) <= 1e-10);
    KahanSum mass;
    for (double lam : spectrum.eigenvalues) mass.add(lam * lam);
    CHECK(std::abs(mass.value() - 1.0) <= 1e-9);
}

TEST_CASE("truncation_rank keeps the minimal prefix meeting the tail budget") {
    // Squared masses 0.9 / 0.1: a budget of 1/8 (epsilon = 1) is met by the
    // top eigenvalue alone; a budget of 1/32 (epsilon = 1/2) needs both.
    const auto spectrum = bare_spectrum({std::sqrt(0.9), std::sqrt(0.1)});
    CHECK(truncation_rank(spectrum, 1.0) == 0);
    CHECK(truncation_rank(spectrum, 0.5) == 1);

    // Mass that rounds below an extreme threshold: every prefix misses, so
    // the whole spectrum is kept.
    const auto lossy =
        bare_spectrum({std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2) * (1.0 - 1e-9)});
    CHECK(truncation_rank(lossy, 1e-5) == 2);

    CHECK_THROWS_AS(truncation_rank(spectrum, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(truncation_rank(spectrum, -0.3), std::invalid_argument);
    CHECK_THROWS_AS(truncation_rank(spectrum, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(truncation_rank(bare_spectrum({}), 0.5), std::invalid_argument);
}

TEST_CASE("truncation_rank is monotone non-increasing in epsilon") {
    const auto spectrum = symmetric_eigendecomposition(build_mu(build_pu(9)));
    std::size_t prev = spectrum.dim;
    for (double eps : {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 1.9}) {
        const std::size_t k = truncation_rank(spectrum, eps);
        CHECK(k <= prev);
        prev = k;
    }
}

TEST_CASE("weight-3 truncation sizes at the three working budgets") {
    const auto spectrum = symmetric_eigendecomposition(build_mu(build_pu(9)));
    CHECK(truncation_rank(spectrum, 0.25) + 1 == 71);
    CHECK(truncation_rank(spectrum, 0.5) + 1 == 36);
    CHECK(truncation_rank(spectrum, 1.0) + 1 == 26);
}

TEST_CASE("build_thm2(4, 0.5) keeps the whole spectrum and reproduces P_u") {
    const auto con = build_thm2(4, 0.5);
    CHECK(con.n1 == 1);
    CHECK(con.n2 == 6);
    CHECK(con.k == 5);
    CHECK(con.q == 3);
    CHECK(schmidt_qubit_count(con.instance) == 3);
    CHECK(std::abs(con.n_prime - 1.0) <= 1e-9);

    const auto rep = verify_thm2(con, 0.5);
    CHECK(rep.pass);
    CHECK(rep.support_size == 6);
    CHECK(rep.support_value_dev <= 1e-12);
    CHECK(rep.spectral_mass_dev <= 1e-9);
    CHECK(rep.k_minimal);
    CHECK(rep.q_within_rank);
    CHECK(rep.distance <= 1e-9);
    CHECK(rep.tail_mass <= 0.5 * 0.5 / 8.0);
    CHECK(rep.classical_threshold == 1.0);
}

TEST_CASE("measured distribution equals the truncated-amplitude squares") {
    for (const auto& [n, eps] : {std::pair<int, double>{4, 0.5}, {9, 1.0}}) {
        CAPTURE(n);
        const auto con = build_thm2(n, eps);
        const auto born = born_distribution(con.instance);
        double worst = 0.0;
        for (std::uint64_t x : con.p_r.rows())
            for (std::uint64_t y : con.p_r.cols())
                worst = std::max(worst, std::abs(born.prob(x, y) - con.p_r.prob(x, y)));
        CHECK(worst <= 1e-10);
        CHECK_NOTHROW(validate_instance(con.instance));
    }
}

TEST_CASE("weight-3 construction at epsilon 0.5 verifies and hits its golden distance") {
    const auto con = build_thm2(9, 0.5);
    CHECK(con.k + 1 == 36);
    CHECK(con.q == 6);
    const auto rep = verify_thm2(con, 0.5);
    CHECK(rep.pass);
    CHECK(rep.support_size == 1680);
    CHECK(rep.distance <= 0.5);
    CHECK(rep.tail_mass <= 0.5 * 0.5 / 8.0 + 1e-12);
    // Deterministic pipeline: the distance is reproducible to full precision.
    // Frozen from the first verified run.
    // Frozen from the first verified build as a regression anchor; the value
    // is 2/35 up to summation rounding.
    const double golden = 0.057142857142857384;
    CHECK(std::abs(rep.distance - golden) <= 1e-9);
}

TEST_CASE("misreporting the truncation index fails verification") {
    auto con = build_thm2(4, 0.5);
    con.k = 4;  // claims a 5-term truncation; the budget needs all 6
    const auto rep = verify_thm2(con, 0.5);
    CHECK_FALSE(rep.k_minimal);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("build_thm2_from_spectrum reuses a decomposition without drift") {
    const auto base = build_thm2(9, 1.0);
    const auto again = build_thm2_from_spectrum(9, 1.0, base.p_u, base.spectrum);
    CHECK(again.k == base.k);
    CHECK(again.q == base.q);
    CHECK(again.n_prime == base.n_prime);
    for (std::uint64_t x : base.p_r.rows())
        for (std::uint64_t y : base.p_r.cols())
            CHECK(again.p_r.prob(x, y) == base.p_r.prob(x, y));

    // A tighter budget from the same spectrum keeps more terms.
    const auto tighter = build_thm2_from_spectrum(9, 0.25, base.p_u, base.spectrum);
    CHECK(tighter.k + 1 == 71);
    CHECK(verify_thm2(tighter, 0.25).pass);
}

TEST_CASE("verify_thm2 rejects out-of-range epsilon") {
    const auto con = build_thm2(4, 0.5);
    CHECK_THROWS_AS(verify_thm2(con, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm2(con, 2.0), std::invalid_argument);
}
