#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcw/correlations.hpp"
#include "qcw/numerics.hpp"

namespace qcw {

// One Schmidt term: coefficient * |alice_column of U> |bob_column of V>.
struct SchmidtTerm {
    double coefficient = 0.0;
    std::size_t alice_column = 0;
    std::size_t bob_column = 0;
};

// A single unitary column stored sparsely: (row, amplitude) entries sorted by
// row, rows in [0, 2^n). Rows absent from `entries` carry amplitude zero.
struct SparseColumn {
    std::size_t index = 0;
    std::vector<std::pair<std::uint64_t, cplx>> entries;
};

// Schmidt-form description of the post-rotation state (U x V) phi0 on n
// qubits per side, holding only the unitary columns the terms reference.
// The normalized coefficients are coefficient/normalization.
struct ParadigmInstance {
    int n = 1;
    std::vector<SchmidtTerm> terms;
    double normalization = 1.0;
    std::vector<SparseColumn> alice_columns;
    std::vector<SparseColumn> bob_columns;
};

// Throws std::invalid_argument unless sum (coef/norm)^2 = 1 within 1e-9, the
// alice (resp. bob) column indices are distinct, every term resolves to a
// stored column, and all column entries are sorted, in-range and nonzero.
void validate_instance(const ParadigmInstance& inst);

// Measured joint distribution: P(x,y) = |sum_i (coef_i/norm) U[x,a_i] V[y,b_i]|^2,
// evaluated only on the union of the referenced columns' row supports.
JointDistribution born_distribution(const ParadigmInstance& inst);

// ceil(log2(number of Schmidt terms)); 0 for a single term.
int schmidt_qubit_count(const ParadigmInstance& inst);

}  // namespace qcw
