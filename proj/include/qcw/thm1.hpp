#pragma once

#include <vector>

#include "qcw/correlations.hpp"
#include "qcw/numerics.hpp"
#include "qcw/paradigm.hpp"

namespace qcw {

// Zero-diagonal construction on n qubits per side (N = 2^n outcomes): a Bell
// pair rotated by local unitaries whose first columns encode the rescaled
// progression c', so that P_r(x,y) = (c'_y - c'_x)^2.
struct Thm1Construction {
    int n;
    std::vector<double> c_values;  // c'_x, length N
    double a;                      // 1/sqrt(2N)
    double b;                      // sqrt(N)
    std::vector<cplx> u0, u1, v0, v1;
    UnitaryMatrix U, V;
    ParadigmInstance instance;
    JointDistribution p_r;
};

struct Thm1Report {
    double c_sum_abs = 0.0;          // |sum c'_x|, target 0 within 1e-10
    double pair_sum_dev = 0.0;       // |sum_{x<y}(c'_y-c'_x)^2 - 1/2|, within 1e-10
    double max_closed_form_dev = 0.0;  // max |P_r(x,y) - (c'_y-c'_x)^2|, within 1e-10
    double unitarity_u = 0.0;        // ||U'U - I||_max, within 1e-10
    double unitarity_v = 0.0;
    double diagonal_max = 0.0;       // must be exactly 0
    double offdiagonal_min = 0.0;    // must be strictly positive
    double mass_error = 0.0;         // |sum P_r - 1|, within 1e-9
    bool pass = false;
};

// Centered arithmetic progression over x = 0..2^n-1, rescaled so that
// sum c'_x = 0 and sum_{x<y} (c'_y - c'_x)^2 = 1/2. Values are distinct.
std::vector<double> make_c_values(int n, int max_n = 10);

// Full construction; P_r is produced by the Born engine, not the closed form.
// The default cap keeps the dense N x N output at most 1024 x 1024; callers
// may raise max_n explicitly at their own memory cost.
Thm1Construction build_thm1(int n, int max_n = 10);

Thm1Report verify_thm1(const Thm1Construction& con);

}  // namespace qcw
