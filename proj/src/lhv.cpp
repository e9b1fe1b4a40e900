#include "qcw/lhv.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcw/numerics.hpp"
#include "qcw/thm2.hpp"

namespace qcw {

namespace {

bool sums_to_one(const std::vector<double>& v) {
    KahanSum s;
    for (double x : v) {
        if (x < 0.0) return false;
        s.add(x);
    }
    return std::abs(s.value() - 1.0) <= 1e-9;
}

// Euclidean projection onto the probability simplex; exact minimizer of the
// isotropic quadratic subproblems the marginal updates reduce to.
std::vector<double> project_simplex(std::vector<double> v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0;
    double theta = 0.0;
    std::size_t rho = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cum += u[j];
        const double t = (cum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) {
            rho = j + 1;
            theta = t;
        }
    }
    if (rho == 0) {  // all mass clipped: fall back to uniform
        std::fill(v.begin(), v.end(), 1.0 / static_cast<double>(v.size()));
        return v;
    }
    for (double& x : v) x = std::max(0.0, x - theta);
    return v;
}

double canonical_u01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::vector<double> dirichlet_flat(std::mt19937_64& gen, std::size_t d) {
    std::vector<double> v(d);
    double total = 0.0;
    for (double& x : v) {
        x = -std::log1p(-canonical_u01(gen));  // Exp(1)
        total += x;
    }
    if (total <= 0.0) return std::vector<double>(d, 1.0 / static_cast<double>(d));
    for (double& x : v) x /= total;
    return v;
}

struct FitState {
    std::vector<double> w;
    std::vector<std::vector<double>> p;
    std::vector<std::vector<double>> q;
};

struct FitWork {
    std::size_t rn = 0;
    std::size_t cn = 0;
    std::vector<double> t;  // target block, row-major
};

void rebuild_mixture(const FitWork& d, const FitState& s, std::vector<double>& c) {
    std::fill(c.begin(), c.end(), 0.0);
    for (std::size_t z = 0; z < s.w.size(); ++z) {
        if (s.w[z] == 0.0) continue;
        for (std::size_t i = 0; i < d.rn; ++i) {
            const double f = s.w[z] * s.p[z][i];
            if (f == 0.0) continue;
            double* line = c.data() + i * d.cn;
            const double* qz = s.q[z].data();
            for (std::size_t j = 0; j < d.cn; ++j) line[j] += f * qz[j];
        }
    }
}

double l1_distance(const FitWork& d, const std::vector<double>& c) {
    KahanSum s;
    for (std::size_t i = 0; i < d.t.size(); ++i) s.add(std::abs(d.t[i] - c[i]));
    return s.value();
}

double squared_loss(const FitWork& d, const std::vector<double>& c) {
    KahanSum s;
    for (std::size_t i = 0; i < d.t.size(); ++i) {
        const double e = d.t[i] - c[i];
        s.add(e * e);
    }
    return s.value();
}

struct RestartOutcome {
    FitState best;
    double distance = 2.0;
    std::vector<double> trace;
};

RestartOutcome run_restart(const FitWork& d, FitState s, const FitOptions& opts) {
    const std::size_t k = s.w.size();
    std::vector<double> c(d.t.size());
    rebuild_mixture(d, s, c);

    RestartOutcome out;
    out.best = s;
    out.distance = l1_distance(d, c);
    out.trace.push_back(squared_loss(d, c));

    std::vector<double> srow(d.rn), scol(d.cn);
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (out.distance <= 1e-12) break;

        for (std::size_t z = 0; z < k; ++z) {
            // Alice block: exact simplex-projected least squares for p_z.
            double qsq = 0.0;
            for (double x : s.q[z]) qsq += x * x;
            double dz = s.w[z] * qsq;
            if (dz > 1e-300) {
                for (std::size_t i = 0; i < d.rn; ++i) {
                    double g = 0.0;
                    const double* tl = d.t.data() + i * d.cn;
                    const double* cl = c.data() + i * d.cn;
                    const double* qz = s.q[z].data();
                    for (std::size_t j = 0; j < d.cn; ++j) g += (tl[j] - cl[j]) * qz[j];
                    srow[i] = g / dz + s.p[z][i];
                }
                std::vector<double> pnew = project_simplex(srow);
                for (std::size_t i = 0; i < d.rn; ++i) {
                    const double delta = s.w[z] * (pnew[i] - s.p[z][i]);
                    if (delta == 0.0) continue;
                    double* cl = c.data() + i * d.cn;
                    const double* qz = s.q[z].data();
                    for (std::size_t j = 0; j < d.cn; ++j) cl[j] += delta * qz[j];
                }
                s.p[z] = std::move(pnew);
            }

            // Bob block, mirrored.
            double psq = 0.0;
            for (double x : s.p[z]) psq += x * x;
            dz = s.w[z] * psq;
            if (dz > 1e-300) {
                std::fill(scol.begin(), scol.end(), 0.0);
                for (std::size_t i = 0; i < d.rn; ++i) {
                    const double pz = s.p[z][i];
                    if (pz == 0.0) continue;
                    const double* tl = d.t.data() + i * d.cn;
                    const double* cl = c.data() + i * d.cn;
                    for (std::size_t j = 0; j < d.cn; ++j) scol[j] += (tl[j] - cl[j]) * pz;
                }
                for (std::size_t j = 0; j < d.cn; ++j) scol[j] = scol[j] / dz + s.q[z][j];
                std::vector<double> qnew = project_simplex(scol);
                for (std::size_t i = 0; i < d.rn; ++i) {
                    const double f = s.w[z] * s.p[z][i];
                    if (f == 0.0) continue;
                    double* cl = c.data() + i * d.cn;
                    for (std::size_t j = 0; j < d.cn; ++j) cl[j] += f * (qnew[j] - s.q[z][j]);
                }
                s.q[z] = std::move(qnew);
            }
        }

        // Frank-Wolfe step on the weight simplex with exact line search:
        // the only coupling across components, handled by a single monotone
        // vertex step per sweep.
        std::size_t zstar = 0;
        double best_ip = -1e300;
        for (std::size_t z = 0; z < k; ++z) {
            double ip = 0.0;
            for (std::size_t i = 0; i < d.rn; ++i) {
                const double pz = s.p[z][i];
                if (pz == 0.0) continue;
                const double* tl = d.t.data() + i * d.cn;
                const double* cl = c.data() + i * d.cn;
                const double* qz = s.q[z].data();
                double g = 0.0;
                for (std::size_t j = 0; j < d.cn; ++j) g += (tl[j] - cl[j]) * qz[j];
                ip += pz * g;
            }
            if (ip > best_ip) {
                best_ip = ip;
                zstar = z;
            }
        }
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < d.rn; ++i) {
            const double pz = s.p[zstar][i];
            const double* tl = d.t.data() + i * d.cn;
            const double* cl = c.data() + i * d.cn;
            const double* qz = s.q[zstar].data();
            for (std::size_t j = 0; j < d.cn; ++j) {
                const double m = pz * qz[j];
                const double dd = m - cl[j];
                num += (tl[j] - cl[j]) * dd;
                den += dd * dd;
            }
        }
        if (num > 0.0 && den > 0.0) {
            const double gamma = std::min(1.0, num / den);
            for (double& x : s.w) x *= 1.0 - gamma;
            s.w[zstar] += gamma;
            for (std::size_t i = 0; i < d.rn; ++i) {
                const double pz = s.p[zstar][i];
                double* cl = c.data() + i * d.cn;
                const double* qz = s.q[zstar].data();
                for (std::size_t j = 0; j < d.cn; ++j)
                    cl[j] += gamma * (pz * qz[j] - cl[j]);
            }
        }

        rebuild_mixture(d, s, c);  // shed incremental-update drift once per sweep
        const double f_now = squared_loss(d, c);
        const double f_prev = out.trace.back();
        out.trace.push_back(f_now);

        const double cur = l1_distance(d, c);
        if (cur < out.distance) {
            out.distance = cur;
            out.best = s;
        }
        if (f_prev - f_now < opts.convergence) break;
    }
    return out;
}

FitState deterministic_init(const FitWork& d, std::size_t k) {
    std::vector<std::size_t> order(d.t.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d.t[a] > d.t[b]; });

    FitState s;
    s.w.assign(k, 0.0);
    s.p.assign(k, std::vector<double>(d.rn, 0.0));
    s.q.assign(k, std::vector<double>(d.cn, 0.0));
    const std::size_t used = std::min(k, d.t.size());
    double total = 0.0;
    for (std::size_t z = 0; z < used; ++z) total += d.t[order[z]];
    for (std::size_t z = 0; z < k; ++z) {
        const std::size_t cell = z < used ? order[z] : order[0];
        s.p[z][cell / d.cn] = 1.0;
        s.q[z][cell % d.cn] = 1.0;
        s.w[z] = (z < used && total > 0.0) ? d.t[cell] / total : 0.0;
    }
    if (total <= 0.0) s.w[0] = 1.0;
    return s;
}

FitState random_init(const FitWork& d, std::size_t k, std::uint64_t stream) {
    std::mt19937_64 gen(stream);
    FitState s;
    s.w = dirichlet_flat(gen, k);
    s.p.reserve(k);
    s.q.reserve(k);
    for (std::size_t z = 0; z < k; ++z) {
        s.p.push_back(dirichlet_flat(gen, d.rn));
        s.q.push_back(dirichlet_flat(gen, d.cn));
    }
    return s;
}

FitWork make_work(const JointDistribution& target) {
    FitWork d;
    d.rn = target.row_count();
    d.cn = target.col_count();
    d.t.resize(d.rn * d.cn);
    for (std::size_t i = 0; i < d.rn; ++i)
        for (std::size_t j = 0; j < d.cn; ++j) d.t[i * d.cn + j] = target.at(i, j);
    return d;
}

LhvModel state_to_model(const JointDistribution& target, const FitState& s) {
    LhvModel m;
    m.n = target.n();
    m.rows = target.rows();
    m.cols = target.cols();
    KahanSum wsum;
    for (double w : s.w) wsum.add(w);
    const double norm = wsum.value() > 0.0 ? wsum.value() : 1.0;
    m.components.reserve(s.w.size());
    for (std::size_t z = 0; z < s.w.size(); ++z)
        m.components.push_back({s.w[z] / norm, s.p[z], s.q[z]});
    return m;
}

FitResult select_best(const JointDistribution& target,
                      const std::vector<RestartOutcome>& outcomes) {
    std::size_t winner = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i)
        if (outcomes[i].distance < outcomes[winner].distance) winner = i;
    FitResult res;
    res.model = state_to_model(target, outcomes[winner].best);
    res.winning_restart = static_cast<int>(winner);
    res.surrogate_trace = outcomes[winner].trace;
    res.distance = variational_distance(target, evaluate(res.model));
    return res;
}

FitResult fit_impl(const JointDistribution& target, std::size_t k, std::uint64_t seed,
                   int restarts, const LhvModel* warm, const FitOptions& opts) {
    if (k < 1) throw std::invalid_argument("fit: component budget must be >= 1");
    if (restarts < 1) throw std::invalid_argument("fit: restarts must be >= 1");
    const FitWork d = make_work(target);

    std::vector<RestartOutcome> outcomes;
    outcomes.push_back(run_restart(d, deterministic_init(d, k), opts));

    std::optional<FitState> warm_state;
    if (warm != nullptr) {
        if (warm->rows != target.rows() || warm->cols != target.cols())
            throw std::invalid_argument("fit: warm model index sets do not match the target");
        if (warm->components.size() > k)
            throw std::invalid_argument("fit: warm model has more components than the budget");
        FitState s;
        s.w.assign(k, 0.0);
        s.p.assign(k, std::vector<double>(d.rn, 0.0));
        s.q.assign(k, std::vector<double>(d.cn, 0.0));
        for (std::size_t z = 0; z < warm->components.size(); ++z) {
            s.w[z] = warm->components[z].weight;
            s.p[z] = warm->components[z].alice;
            s.q[z] = warm->components[z].bob;
        }
        for (std::size_t z = warm->components.size(); z < k; ++z) {
            s.p[z][0] = 1.0;
            s.q[z][0] = 1.0;
        }
        warm_state = std::move(s);
        outcomes.push_back(run_restart(d, *warm_state, opts));
    }

    // An exact deterministic (or warm) candidate settles the result; random
    // restarts are skipped so large exact instances stay cheap. The decision
    // depends only on already-deterministic outcomes.
    double best_so_far = outcomes[0].distance;
    for (const auto& o : outcomes) best_so_far = std::min(best_so_far, o.distance);
    if (best_so_far > 1e-9) {
        std::vector<std::future<RestartOutcome>> jobs;
        for (int r = 1; r < restarts; ++r) {
            const std::uint64_t stream = splitmix64(seed + static_cast<std::uint64_t>(r));
            jobs.push_back(std::async(std::launch::async, [&d, k, stream, &opts] {
                return run_restart(d, random_init(d, k, stream), opts);
            }));
        }
        for (auto& j : jobs) outcomes.push_back(j.get());
    }
    return select_best(target, outcomes);
}

}  // namespace

void validate_model(const LhvModel& m) {
    if (m.n < 1 || m.n > 62) throw std::invalid_argument("model qubit count out of range");
    if (m.components.empty()) throw std::invalid_argument("model has no components");
    std::vector<double> w;
    for (const auto& comp : m.components) {
        w.push_back(comp.weight);
        if (comp.alice.size() != m.rows.size() || comp.bob.size() != m.cols.size())
            throw std::invalid_argument("component marginal length does not match index lists");
        if (!sums_to_one(comp.alice) || !sums_to_one(comp.bob))
            throw std::invalid_argument(
                "component marginals must be nonnegative and sum to 1 within 1e-9");
    }
    if (!sums_to_one(w))
        throw std::invalid_argument("weights must be nonnegative and sum to 1 within 1e-9");
}

JointDistribution evaluate(const LhvModel& m) {
    validate_model(m);
    std::vector<double> probs(m.rows.size() * m.cols.size(), 0.0);
    for (const auto& comp : m.components) {
        if (comp.weight == 0.0) continue;
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            const double f = comp.weight * comp.alice[i];
            if (f == 0.0) continue;
            double* line = probs.data() + i * m.cols.size();
            for (std::size_t j = 0; j < m.cols.size(); ++j) line[j] += f * comp.bob[j];
        }
    }
    return JointDistribution::block(m.n, m.rows, m.cols, std::move(probs));
}

FitResult fit(const JointDistribution& target, std::size_t k, std::uint64_t seed,
              int restarts, const FitOptions& opts) {
    return fit_impl(target, k, seed, restarts, nullptr, opts);
}

FitResult fit_warm(const JointDistribution& target, std::size_t k, std::uint64_t seed,
                   int restarts, const LhvModel& warm, const FitOptions& opts) {
    return fit_impl(target, k, seed, restarts, &warm, opts);
}

namespace {

struct MaskRect {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint64_t cover = 0;
};

bool cover_dfs(std::uint64_t uncovered, int remaining,
               const std::vector<MaskRect>& rects,
               const std::vector<std::vector<std::size_t>>& by_cell,
               std::vector<std::size_t>& chosen) {
    if (uncovered == 0) return true;
    if (remaining == 0) return false;
    const int cell = std::countr_zero(uncovered);
    for (std::size_t ri : by_cell[static_cast<std::size_t>(cell)]) {
        chosen.push_back(ri);
        if (cover_dfs(uncovered & ~rects[ri].cover, remaining - 1, rects, by_cell, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

RectangleCover minimal_rectangle_cover(const JointDistribution& target, double tolerance) {
    const std::uint64_t side = target.side();
    if (side > 8)
        throw std::invalid_argument(
            "minimal_rectangle_cover: exhaustive search supports side <= 8");
    const int n_side = static_cast<int>(side);

    std::vector<std::uint32_t> rowmask(side, 0);
    for (std::uint64_t x = 0; x < side; ++x)
        for (std::uint64_t y = 0; y < side; ++y)
            if (target.prob(x, y) > tolerance) rowmask[x] |= std::uint32_t{1} << y;

    std::uint64_t support = 0;
    for (std::uint64_t x = 0; x < side; ++x)
        for (std::uint64_t y = 0; y < side; ++y) {
            const bool xy = rowmask[x] >> y & 1;
            const bool yx = rowmask[y] >> x & 1;
            if (xy != yx)
                throw std::invalid_argument(
                    "minimal_rectangle_cover: support must be symmetric");
            if (xy) support |= std::uint64_t{1} << (x * side + y);
        }
    if (support == 0)
        throw std::invalid_argument("minimal_rectangle_cover: empty support at this tolerance");

    // Closed support rectangles via the Galois connection A -> B(A) -> A(B(A)).
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> closed;
    const std::uint32_t full = (std::uint32_t{1} << n_side) - 1;
    for (std::uint32_t amask = 1; amask <= full; ++amask) {
        std::uint32_t b = full;
        for (int x = 0; x < n_side && b; ++x)
            if (amask >> x & 1) b &= rowmask[x];
        if (b == 0) continue;
        std::uint32_t a = 0;
        for (int x = 0; x < n_side; ++x)
            if ((rowmask[x] & b) == b) a |= std::uint32_t{1} << x;
        auto key = std::make_pair(a, b);
        if (closed.count(key)) continue;
        std::uint64_t cover = 0;
        for (int x = 0; x < n_side; ++x)
            for (int y = 0; y < n_side; ++y) {
                const bool in_ab = (a >> x & 1) && (b >> y & 1);
                const bool in_ba = (b >> x & 1) && (a >> y & 1);
                if (in_ab || in_ba) cover |= std::uint64_t{1} << (x * n_side + y);
            }
        closed[key] = cover;
    }

    std::vector<MaskRect> rects;
    rects.reserve(closed.size());
    for (const auto& [key, cover] : closed) rects.push_back({key.first, key.second, cover});
    // Drop rectangles whose coverage another rectangle strictly contains.
    std::vector<MaskRect> kept;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < rects.size() && !dominated; ++j) {
            if (i == j) continue;
            const std::uint64_t ci = rects[i].cover, cj = rects[j].cover;
            if ((ci & cj) == ci && (ci != cj || j < i)) dominated = true;
        }
        if (!dominated) kept.push_back(rects[i]);
    }

    std::vector<std::vector<std::size_t>> by_cell(side * side);
    for (std::uint64_t cell = 0; cell < side * side; ++cell) {
        if (!(support >> cell & 1)) continue;
        for (std::size_t ri = 0; ri < kept.size(); ++ri)
            if (kept[ri].cover >> cell & 1) by_cell[cell].push_back(ri);
        std::sort(by_cell[cell].begin(), by_cell[cell].end(),
                  [&](std::size_t x, std::size_t y) {
                      return std::popcount(kept[x].cover) > std::popcount(kept[y].cover);
                  });
    }

    std::vector<std::size_t> chosen;
    for (int depth = 1; depth <= static_cast<int>(side * side); ++depth) {
        chosen.clear();
        if (cover_dfs(support, depth, kept, by_cell, chosen)) break;
    }

    RectangleCover out;
    for (std::size_t ri : chosen) {
        Rectangle r;
        for (int x = 0; x < n_side; ++x)
            if (kept[ri].a >> x & 1) r.a.push_back(static_cast<std::uint64_t>(x));
        for (int y = 0; y < n_side; ++y)
            if (kept[ri].b >> y & 1) r.b.push_back(static_cast<std::uint64_t>(y));
        out.rectangles.push_back(std::move(r));
    }
    return out;
}

namespace {

void compositions_rec(std::size_t pos, int left, std::vector<int>& cur,
                      std::vector<std::vector<double>>& out) {
    const std::size_t d = cur.size();
    if (pos == d - 1) {
        cur[pos] = left;
        std::vector<double> v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = cur[i] / 16.0;
        out.push_back(std::move(v));
        return;
    }
    for (int take = 0; take <= left; ++take) {
        cur[pos] = take;
        compositions_rec(pos + 1, left - take, cur, out);
    }
}

// All length-d vectors with entries in {0, 1/16, ..., 1} summing to 1,
// lexicographic order.
std::vector<std::vector<double>> grid_marginals(std::size_t d) {
    std::vector<std::vector<double>> out;
    std::vector<int> cur(d, 0);
    compositions_rec(0, 16, cur, out);
    return out;
}

struct AdditiveSearch {
    const FitWork& d;
    const std::vector<std::vector<double>>& gp;
    const std::vector<std::vector<double>>& gq;
    double tolerance;
    std::vector<int> parts;           // weight numerators, nonincreasing
    std::vector<std::size_t> choice;  // component index per slot
    std::vector<double> c;

    bool assign(std::size_t slot) {
        if (slot == parts.size()) {
            KahanSum s;
            for (std::size_t i = 0; i < d.t.size(); ++i) s.add(std::abs(d.t[i] - c[i]));
            return s.value() <= tolerance;
        }
        const std::size_t lo =
            (slot > 0 && parts[slot] == parts[slot - 1]) ? choice[slot - 1] : 0;
        const double w = parts[slot] / 16.0;
        for (std::size_t ci = lo; ci < gp.size() * gq.size(); ++ci) {
            const auto& p = gp[ci / gq.size()];
            const auto& q = gq[ci % gq.size()];
            for (std::size_t i = 0; i < d.rn; ++i) {
                const double f = w * p[i];
                if (f == 0.0) continue;
                for (std::size_t j = 0; j < d.cn; ++j) c[i * d.cn + j] += f * q[j];
            }
            choice[slot] = ci;
            if (assign(slot + 1)) return true;
            for (std::size_t i = 0; i < d.rn; ++i) {
                const double f = w * p[i];
                if (f == 0.0) continue;
                for (std::size_t j = 0; j < d.cn; ++j) c[i * d.cn + j] -= f * q[j];
            }
        }
        return false;
    }

    bool partitions(int left, int maxpart, std::size_t slot) {
        if (slot == parts.size()) {
            if (left != 0) return false;
            std::fill(c.begin(), c.end(), 0.0);
            return assign(0);
        }
        const int remaining_slots = static_cast<int>(parts.size() - slot);
        for (int part = std::min(maxpart, left - (remaining_slots - 1)); part >= 1; --part) {
            parts[slot] = part;
            if (partitions(left - part, part, slot + 1)) return true;
        }
        return false;
    }
};

int additive_min_components(const JointDistribution& target, double tolerance) {
    const FitWork d = make_work(target);
    if (d.t.size() > 16)
        throw std::invalid_argument(
            "exact_min_components: additive mode supports at most 16 target cells");

    const std::vector<std::vector<double>> gp = grid_marginals(d.rn);
    const std::vector<std::vector<double>> gq = grid_marginals(d.cn);
    const double per_slot = static_cast<double>(gp.size()) * static_cast<double>(gq.size());

    for (int k = 1; k <= 16; ++k) {
        // Partition count of 16 into k parts is at most 231; the assignment
        // space dominates. Reject before searching, not mid-way.
        double budget = 231.0;
        for (int i = 0; i < k; ++i) budget *= per_slot;
        if (budget > 2e8)
            throw std::invalid_argument(
                "exact_min_components: additive search budget exceeded at k = " +
                std::to_string(k) + "; instance too large for the 1/16 grid");
        AdditiveSearch search{d, gp, gq, tolerance,
                              std::vector<int>(static_cast<std::size_t>(k), 0),
                              std::vector<std::size_t>(static_cast<std::size_t>(k), 0),
                              std::vector<double>(d.t.size(), 0.0)};
        if (search.partitions(16, 16, 0)) return k;
    }
    throw std::invalid_argument(
        "exact_min_components: tolerance unreachable with 1/16-grid mixtures");
}

}  // namespace

int exact_min_components(const JointDistribution& target, CertificateMode mode,
                         double tolerance) {
    if (mode == CertificateMode::multiplicative)
        return static_cast<int>(minimal_rectangle_cover(target, tolerance).rectangles.size());
    return additive_min_components(target, tolerance);
}

std::vector<CurveRow> randomness_curve(const std::vector<int>& ns, double epsilon,
                                       const std::vector<std::size_t>& budgets,
                                       std::uint64_t seed, int restarts) {
    if (!(epsilon > 0.0 && epsilon < 2.0))
        throw std::invalid_argument("randomness_curve: epsilon must lie in (0, 2)");
    if (budgets.empty()) throw std::invalid_argument("randomness_curve: no budgets given");

    std::vector<std::size_t> ks = budgets;
    std::sort(ks.begin(), ks.end());

    std::vector<CurveRow> rows;
    for (int n : ns) {
        const JointDistribution target = build_pu(n);
        std::optional<LhvModel> prev;
        for (std::size_t k : ks) {
            FitResult fr = prev ? fit_warm(target, k, seed, restarts, *prev)
                                : fit(target, k, seed, restarts);
            rows.push_back({n, k, fr.distance, fr.distance <= 2.0 * epsilon});
            prev = std::move(fr.model);
        }
    }
    return rows;
}

}  // namespace qcw
