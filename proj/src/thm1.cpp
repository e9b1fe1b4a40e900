#include "qcw/thm1.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcw {

namespace {

SparseColumn densify(std::size_t index, const std::vector<cplx>& v) {
    SparseColumn col;
    col.index = index;
    col.entries.reserve(v.size());
    for (std::size_t x = 0; x < v.size(); ++x)
        if (v[x] != cplx{0.0, 0.0}) col.entries.emplace_back(x, v[x]);
    return col;
}

}  // namespace

std::vector<double> make_c_values(int n, int max_n) {
    if (n < 1 || n > max_n)
        throw std::invalid_argument("make_c_values: n must lie in [1, " +
                                    std::to_string(max_n) + "]");
    const std::size_t big_n = std::size_t{1} << n;
    std::vector<double> c(big_n);
    const double mid = (static_cast<double>(big_n) - 1.0) / 2.0;
    double sum_sq = 0.0;
    for (std::size_t x = 0; x < big_n; ++x) {
        c[x] = static_cast<double>(x) - mid;
        sum_sq += c[x] * c[x];
    }
    const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(big_n) * sum_sq);
    for (double& v : c) v *= scale;
    return c;
}

Thm1Construction build_thm1(int n, int max_n) {
    const std::vector<double> c = make_c_values(n, max_n);
    const std::size_t big_n = std::size_t{1} << n;
    const double a = 1.0 / std::sqrt(2.0 * static_cast<double>(big_n));
    const double b = std::sqrt(static_cast<double>(big_n));

    std::vector<cplx> u0(big_n), u1(big_n), v0(big_n), v1(big_n);
    for (std::size_t x = 0; x < big_n; ++x) {
        // One shared product b*c[x] per row keeps the four vectors exact
        // conjugates/negations of each other, which the Born engine's
        // diagonal cancellation relies on.
        const double t = b * c[x];
        u0[x] = cplx{a, t};
        u1[x] = cplx{a, -t};
        v0[x] = cplx{a, -t};
        v1[x] = cplx{-a, -t};
    }

    const std::size_t bob_active = big_n >> 1;  // 2^(n-1)
    UnitaryMatrix u_full = complete_to_unitary({{0, u0}, {1, u1}}, big_n);
    UnitaryMatrix v_full = complete_to_unitary({{0, v0}, {bob_active, v1}}, big_n);

    const double half = 1.0 / std::sqrt(2.0);
    ParadigmInstance inst;
    inst.n = n;
    inst.terms = {{half, 0, 0}, {half, 1, bob_active}};
    inst.normalization = 1.0;
    inst.alice_columns = {densify(0, u0), densify(1, u1)};
    inst.bob_columns = {densify(0, v0), densify(bob_active, v1)};

    JointDistribution p_r = born_distribution(inst);
    return Thm1Construction{n,
                            c,
                            a,
                            b,
                            std::move(u0),
                            std::move(u1),
                            std::move(v0),
                            std::move(v1),
                            std::move(u_full),
                            std::move(v_full),
                            std::move(inst),
                            std::move(p_r)};
}

Thm1Report verify_thm1(const Thm1Construction& con) {
    Thm1Report rep;
    const std::vector<double>& c = con.c_values;
    const std::size_t big_n = c.size();

    KahanSum c_sum;
    for (double v : c) c_sum.add(v);
    rep.c_sum_abs = std::abs(c_sum.value());

    KahanSum pair_sum;
    for (std::size_t x = 0; x < big_n; ++x)
        for (std::size_t y = x + 1; y < big_n; ++y) {
            const double d = c[y] - c[x];
            pair_sum.add(d * d);
        }
    rep.pair_sum_dev = std::abs(pair_sum.value() - 0.5);

    rep.unitarity_u = con.U.unitarity_residual();
    rep.unitarity_v = con.V.unitarity_residual();

    KahanSum mass;
    rep.offdiagonal_min = 2.0;
    for (std::size_t x = 0; x < big_n; ++x)
        for (std::size_t y = 0; y < big_n; ++y) {
            const double p = con.p_r.prob(x, y);
            const double d = c[y] - c[x];
            rep.max_closed_form_dev = std::max(rep.max_closed_form_dev, std::abs(p - d * d));
            mass.add(p);
            if (x == y)
                rep.diagonal_max = std::max(rep.diagonal_max, p);
            else
                rep.offdiagonal_min = std::min(rep.offdiagonal_min, p);
        }
    rep.mass_error = std::abs(mass.value() - 1.0);

    rep.pass = rep.c_sum_abs <= 1e-10 && rep.pair_sum_dev <= 1e-10 &&
               rep.max_closed_form_dev <= 1e-10 && rep.unitarity_u <= 1e-10 &&
               rep.unitarity_v <= 1e-10 && rep.diagonal_max == 0.0 &&
               rep.offdiagonal_min > 0.0 && rep.mass_error <= 1e-9;
    return rep;
}

}  // namespace qcw
