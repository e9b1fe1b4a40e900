#include "qcw/paradigm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qcw {

namespace {

void validate_columns(const std::vector<SparseColumn>& columns, std::uint64_t dim,
                      const char* side) {
    std::vector<std::size_t> seen;
    for (const auto& col : columns) {
        if (std::find(seen.begin(), seen.end(), col.index) != seen.end())
            throw std::invalid_argument(std::string(side) + " column index " +
                                        std::to_string(col.index) + " repeated");
        seen.push_back(col.index);
        if (col.index >= dim)
            throw std::invalid_argument(std::string(side) + " column index out of range");
        std::uint64_t prev = 0;
        bool first = true;
        for (const auto& [row, amp] : col.entries) {
            if (row >= dim)
                throw std::invalid_argument(std::string(side) + " column row out of range");
            if (!first && row <= prev)
                throw std::invalid_argument(std::string(side) + " column rows not ascending");
            if (amp == cplx{0.0, 0.0})
                throw std::invalid_argument(std::string(side) + " column stores a zero entry");
            prev = row;
            first = false;
        }
    }
}

const SparseColumn& find_column(const std::vector<SparseColumn>& columns, std::size_t index,
                                const char* side) {
    for (const auto& col : columns)
        if (col.index == index) return col;
    throw std::invalid_argument(std::string(side) + " column " + std::to_string(index) +
                                " referenced but not stored");
}

std::vector<std::uint64_t> row_union(const ParadigmInstance& inst, bool alice) {
    std::vector<std::uint64_t> rows;
    for (const auto& term : inst.terms) {
        const auto& col = alice
                              ? find_column(inst.alice_columns, term.alice_column, "alice")
                              : find_column(inst.bob_columns, term.bob_column, "bob");
        for (const auto& [row, amp] : col.entries) rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

}  // namespace

void validate_instance(const ParadigmInstance& inst) {
    if (inst.n < 1 || inst.n > 62) throw std::invalid_argument("qubit count out of range");
    if (inst.terms.empty()) throw std::invalid_argument("instance has no Schmidt terms");
    if (!(inst.normalization > 0.0))
        throw std::invalid_argument("normalization must be positive");
    const std::uint64_t dim = std::uint64_t{1} << inst.n;
    validate_columns(inst.alice_columns, dim, "alice");
    validate_columns(inst.bob_columns, dim, "bob");

    KahanSum coef_sq;
    for (const auto& term : inst.terms) {
        const double w = term.coefficient / inst.normalization;
        coef_sq.add(w * w);
        find_column(inst.alice_columns, term.alice_column, "alice");
        find_column(inst.bob_columns, term.bob_column, "bob");
    }
    if (std::abs(coef_sq.value() - 1.0) > 1e-9)
        throw std::invalid_argument("normalized Schmidt coefficients are not a unit vector");

    auto distinct = [](const std::vector<SchmidtTerm>& terms, bool alice) {
        std::vector<std::size_t> idx;
        for (const auto& t : terms) idx.push_back(alice ? t.alice_column : t.bob_column);
        std::sort(idx.begin(), idx.end());
        return std::adjacent_find(idx.begin(), idx.end()) == idx.end();
    };
    if (!distinct(inst.terms, true))
        throw std::invalid_argument("alice columns of the Schmidt terms are not distinct");
    if (!distinct(inst.terms, false))
        throw std::invalid_argument("bob columns of the Schmidt terms are not distinct");
}

JointDistribution born_distribution(const ParadigmInstance& inst) {
    validate_instance(inst);

    const std::vector<std::uint64_t> rows = row_union(inst, true);
    const std::vector<std::uint64_t> cols = row_union(inst, false);
    std::unordered_map<std::uint64_t, std::size_t> row_pos, col_pos;
    for (std::size_t i = 0; i < rows.size(); ++i) row_pos[rows[i]] = i;
    for (std::size_t i = 0; i < cols.size(); ++i) col_pos[cols[i]] = i;

    // Rank-1 accumulation of the amplitude matrix over the joint support:
    // one pass per term, skipping that term's zero rows.
    std::vector<cplx> amp(rows.size() * cols.size(), cplx{0.0, 0.0});
    std::vector<cplx> bob_dense(cols.size());
    for (const auto& term : inst.terms) {
        const auto& ucol = find_column(inst.alice_columns, term.alice_column, "alice");
        const auto& vcol = find_column(inst.bob_columns, term.bob_column, "bob");
        std::fill(bob_dense.begin(), bob_dense.end(), cplx{0.0, 0.0});
        for (const auto& [row, v] : vcol.entries) bob_dense[col_pos.at(row)] = v;
        const double w = term.coefficient / inst.normalization;
        for (const auto& [row, u] : ucol.entries) {
            const cplx ue = u;
            cplx* line = amp.data() + row_pos.at(row) * cols.size();
            // Scale by w after the complex product: structurally cancelling
            // cell amplitudes (conjugate-pair constructions) then stay exactly
            // zero, which pre-scaling u would spoil by uneven rounding.
            for (std::size_t c = 0; c < cols.size(); ++c) line[c] += w * (ue * bob_dense[c]);
        }
    }

    std::vector<double> probs(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) probs[i] = std::norm(amp[i]);
    return JointDistribution::block(inst.n, rows, cols, std::move(probs));
}

int schmidt_qubit_count(const ParadigmInstance& inst) {
    const std::size_t terms = inst.terms.size();
    if (terms <= 1) return 0;
    return std::bit_width(terms - 1);
}

}  // namespace qcw
