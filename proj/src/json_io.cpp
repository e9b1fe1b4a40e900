#include "qcw/json_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <unordered_map>

namespace qcw {

namespace {

using nlohmann::json;

std::string shortest(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
    return std::string(buf, ptr);
}

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing field \"") + key + '"');
    return *it;
}

}  // namespace

json distribution_to_json(const JointDistribution& d) {
    json j;
    j["n"] = d.n();
    if (d.is_dense()) {
        j["format"] = "dense";
        json cells = json::array();
        for (std::size_t r = 0; r < d.row_count(); ++r)
            for (std::size_t c = 0; c < d.col_count(); ++c) cells.push_back(d.at(r, c));
        j["cells"] = std::move(cells);
    } else {
        j["format"] = "sparse";
        j["rows"] = d.rows();
        j["cols"] = d.cols();
        json cells = json::array();
        for (std::size_t r = 0; r < d.row_count(); ++r)
            for (std::size_t c = 0; c < d.col_count(); ++c) {
                const double p = d.at(r, c);
                if (p != 0.0) cells.push_back({d.rows()[r], d.cols()[c], p});
            }
        j["cells"] = std::move(cells);
    }
    return j;
}

JointDistribution distribution_from_json(const json& j) {
    const int n = field(j, "n").get<int>();
    const std::string format = field(j, "format").get<std::string>();
    if (format == "dense") {
        std::vector<double> probs = field(j, "cells").get<std::vector<double>>();
        return JointDistribution::dense(n, std::move(probs));
    }
    if (format != "sparse") throw std::invalid_argument("unknown distribution format");
    std::vector<std::uint64_t> rows = field(j, "rows").get<std::vector<std::uint64_t>>();
    std::vector<std::uint64_t> cols = field(j, "cols").get<std::vector<std::uint64_t>>();
    std::vector<double> probs(rows.size() * cols.size(), 0.0);
    std::unordered_map<std::uint64_t, std::size_t> rpos, cpos;
    for (std::size_t i = 0; i < rows.size(); ++i) rpos[rows[i]] = i;
    for (std::size_t i = 0; i < cols.size(); ++i) cpos[cols[i]] = i;
    for (const auto& cell : field(j, "cells")) {
        if (!cell.is_array() || cell.size() != 3)
            throw std::invalid_argument("sparse cell must be [x, y, p]");
        const auto x = cell[0].get<std::uint64_t>();
        const auto y = cell[1].get<std::uint64_t>();
        const auto rit = rpos.find(x);
        const auto cit = cpos.find(y);
        if (rit == rpos.end() || cit == cpos.end())
            throw std::invalid_argument("sparse cell outside the declared block");
        probs[rit->second * cols.size() + cit->second] = cell[2].get<double>();
    }
    return JointDistribution::block(n, std::move(rows), std::move(cols), std::move(probs));
}

json instance_to_json(const ParadigmInstance& inst) {
    json j;
    j["n"] = inst.n;
    j["normalization"] = inst.normalization;
    json terms = json::array();
    for (const auto& t : inst.terms)
        terms.push_back({{"coefficient", t.coefficient},
                         {"alice_column", t.alice_column},
                         {"bob_column", t.bob_column}});
    j["terms"] = std::move(terms);
    auto columns = [](const std::vector<SparseColumn>& cols) {
        json out = json::array();
        for (const auto& col : cols) {
            json entries = json::array();
            for (const auto& [row, amp] : col.entries)
                entries.push_back({row, amp.real(), amp.imag()});
            out.push_back({{"index", col.index}, {"entries", std::move(entries)}});
        }
        return out;
    };
    j["alice_columns"] = columns(inst.alice_columns);
    j["bob_columns"] = columns(inst.bob_columns);
    return j;
}

ParadigmInstance instance_from_json(const json& j) {
    ParadigmInstance inst;
    inst.n = field(j, "n").get<int>();
    inst.normalization = field(j, "normalization").get<double>();
    for (const auto& t : field(j, "terms")) {
        SchmidtTerm term;
        term.coefficient = field(t, "coefficient").get<double>();
        term.alice_column = field(t, "alice_column").get<std::size_t>();
        term.bob_column = field(t, "bob_column").get<std::size_t>();
        inst.terms.push_back(term);
    }
    auto columns = [](const json& arr) {
        std::vector<SparseColumn> out;
        for (const auto& cj : arr) {
            SparseColumn col;
            col.index = field(cj, "index").get<std::size_t>();
            for (const auto& e : field(cj, "entries")) {
                if (!e.is_array() || e.size() != 3)
                    throw std::invalid_argument("column entry must be [row, re, im]");
                col.entries.emplace_back(e[0].get<std::uint64_t>(),
                                         cplx{e[1].get<double>(), e[2].get<double>()});
            }
            out.push_back(std::move(col));
        }
        return out;
    };
    inst.alice_columns = columns(field(j, "alice_columns"));
    inst.bob_columns = columns(field(j, "bob_columns"));
    return inst;
}

json model_to_json(const LhvModel& m) {
    json j;
    j["n"] = m.n;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    json comps = json::array();
    for (const auto& c : m.components)
        comps.push_back({{"weight", c.weight}, {"alice", c.alice}, {"bob", c.bob}});
    j["components"] = std::move(comps);
    return j;
}

LhvModel model_from_json(const json& j) {
    LhvModel m;
    m.n = field(j, "n").get<int>();
    m.rows = field(j, "rows").get<std::vector<std::uint64_t>>();
    m.cols = field(j, "cols").get<std::vector<std::uint64_t>>();
    for (const auto& c : field(j, "components")) {
        LhvComponent comp;
        comp.weight = field(c, "weight").get<double>();
        comp.alice = field(c, "alice").get<std::vector<double>>();
        comp.bob = field(c, "bob").get<std::vector<double>>();
        m.components.push_back(std::move(comp));
    }
    return m;
}

json thm1_report_to_json(const Thm1Report& r) {
    return json{{"c_sum_abs", r.c_sum_abs},
                {"pair_sum_dev", r.pair_sum_dev},
                {"max_closed_form_dev", r.max_closed_form_dev},
                {"unitarity_u", r.unitarity_u},
                {"unitarity_v", r.unitarity_v},
                {"diagonal_max", r.diagonal_max},
                {"offdiagonal_min", r.offdiagonal_min},
                {"mass_error", r.mass_error},
                {"pass", r.pass}};
}

json thm2_report_to_json(const Thm2Report& r) {
    return json{{"n1", r.n1},
                {"n2", r.n2},
                {"support_size", r.support_size},
                {"support_value_dev", r.support_value_dev},
                {"spectral_mass_dev", r.spectral_mass_dev},
                {"k", r.k},
                {"k_minimal", r.k_minimal},
                {"q", r.q},
                {"rank_mu", r.rank_mu},
                {"q_within_rank", r.q_within_rank},
                {"n_prime", r.n_prime},
                {"n_prime_lower", r.n_prime_lower},
                {"tail_mass", r.tail_mass},
                {"frobenius_gap_sq", r.frobenius_gap_sq},
                {"distance", r.distance},
                {"epsilon", r.epsilon},
                {"classical_threshold", r.classical_threshold},
                {"pass", r.pass}};
}

json samples_to_json(const std::vector<std::pair<BitString, BitString>>& samples, int n) {
    json pairs = json::array();
    for (const auto& [x, y] : samples) pairs.push_back({x.value, y.value});
    return json{{"n", n}, {"pairs", std::move(pairs)}};
}

std::vector<std::pair<BitString, BitString>> samples_from_json(const json& j) {
    const int n = field(j, "n").get<int>();
    std::vector<std::pair<BitString, BitString>> out;
    for (const auto& p : field(j, "pairs")) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("sample pair must be [x, y]");
        out.emplace_back(BitString(n, p[0].get<std::uint64_t>()),
                         BitString(n, p[1].get<std::uint64_t>()));
    }
    return out;
}

std::string curve_to_csv(const std::vector<CurveRow>& rows, const json& config) {
    std::string out = "# config: " + config.dump() + "\n";
    out += "n,k,distance,pass\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.k);
        out += ',';
        out += shortest(r.distance);
        out += ',';
        out += r.pass ? '1' : '0';
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

json read_json_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    return json::parse(f);
}

}  // namespace qcw
