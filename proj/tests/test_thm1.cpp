#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "qcw/thm1.hpp"

using namespace qcw;

TEST_CASE("make_c_values produces the rescaled centered progression") {
    const auto c1 = make_c_values(1);
    REQUIRE(c1.size() == 2);
    const double want = 0.5 / std::sqrt(2.0);  // 1/(2 sqrt 2)
    CHECK(std::abs(c1[0] + want) <= 1e-15);
    CHECK(std::abs(c1[1] - want) <= 1e-15);

    const auto c2 = make_c_values(2);
    REQUIRE(c2.size() == 4);
    const double s40 = std::sqrt(40.0);
    const double expect[] = {-1.5, -0.5, 0.5, 1.5};
    for (int x = 0; x < 4; ++x) CHECK(std::abs(c2[x] - expect[x] / s40) <= 1e-15);

    for (int n : {1, 2, 3, 5, 8}) {
        const auto c = make_c_values(n);
        KahanSum sum, pair_sum;
        for (double v : c) sum.add(v);
        CHECK(std::abs(sum.value()) <= 1e-12);
        for (std::size_t x = 0; x < c.size(); ++x) {
            if (x > 0) CHECK(c[x] > c[x - 1]);  // distinct, ascending
            for (std::size_t y = x + 1; y < c.size(); ++y)
                pair_sum.add((c[y] - c[x]) * (c[y] - c[x]));
        }
        CHECK(std::abs(pair_sum.value() - 0.5) <= 1e-12);
    }
}

TEST_CASE("make_c_values enforces the size cap") {
    CHECK_THROWS_AS(make_c_values(0), std::invalid_argument);
    CHECK_THROWS_AS(make_c_values(11), std::invalid_argument);
    CHECK_THROWS_AS(build_thm1(11), std::invalid_argument);
    CHECK(make_c_values(11, 12).size() == 2048);
}

TEST_CASE("one-qubit construction reproduces the two-outcome half-half pattern") {
    const auto con = build_thm1(1);
    CHECK(con.p_r.prob(0, 0) == 0.0);
    CHECK(con.p_r.prob(1, 1) == 0.0);
    CHECK(std::abs(con.p_r.prob(0, 1) - 0.5) <= 1e-12);
    CHECK(std::abs(con.p_r.prob(1, 0) - 0.5) <= 1e-12);
}

TEST_CASE("two-qubit construction matches (y-x)^2/40 cellwise") {
    const auto con = build_thm1(2);
    for (std::uint64_t x = 0; x < 4; ++x)
        for (std::uint64_t y = 0; y < 4; ++y) {
            const double dx = static_cast<double>(y) - static_cast<double>(x);
            CHECK(std::abs(con.p_r.prob(x, y) - dx * dx / 40.0) <= 1e-10);
        }
}

TEST_CASE("verify_thm1 passes with an exactly zero diagonal for n = 1..4") {
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const auto con = build_thm1(n);
        const auto rep = verify_thm1(con);
        CHECK(rep.pass);
        CHECK(rep.diagonal_max == 0.0);
        CHECK(rep.offdiagonal_min > 0.0);
        CHECK(rep.c_sum_abs <= 1e-10);
        CHECK(rep.pair_sum_dev <= 1e-10);
        CHECK(rep.max_closed_form_dev <= 1e-10);
        CHECK(rep.unitarity_u <= 1e-10);
        CHECK(rep.unitarity_v <= 1e-10);
        CHECK(rep.mass_error <= 1e-9);
    }
}

TEST_CASE("the instance behind the construction is a two-term Schmidt form") {
    const auto con = build_thm1(3);
    CHECK_NOTHROW(validate_instance(con.instance));
    REQUIRE(con.instance.terms.size() == 2);
    CHECK(schmidt_qubit_count(con.instance) == 1);
    const double half = 1.0 / std::sqrt(2.0);
    CHECK(con.instance.terms[0].coefficient == half);
    CHECK(con.instance.terms[1].coefficient == half);
    CHECK(con.instance.terms[0].alice_column == 0);
    CHECK(con.instance.terms[0].bob_column == 0);
    CHECK(con.instance.terms[1].alice_column == 1);
    CHECK(con.instance.terms[1].bob_column == 4);  // 2^(n-1)
    CHECK(con.instance.normalization == 1.0);
}

TEST_CASE("born output agrees with the dense per-cell oracle at n = 3") {
    const auto con = build_thm1(3);
    const auto dense = oracles::born_dense(con.instance);
    for (std::uint64_t x = 0; x < 8; ++x)
        for (std::uint64_t y = 0; y < 8; ++y)
            CHECK(std::abs(con.p_r.prob(x, y) - dense[x * 8 + y]) <= 1e-12);
}

TEST_CASE("breaking the conjugate pairing destroys the zero diagonal") {
    auto con = build_thm1(2);
    for (auto& [row, amp] : con.instance.alice_columns[1].entries) amp = -amp;
    con.p_r = born_distribution(con.instance);
    const auto rep = verify_thm1(con);
    CHECK(rep.diagonal_max > 0.0);
    CHECK_FALSE(rep.pass);
}
