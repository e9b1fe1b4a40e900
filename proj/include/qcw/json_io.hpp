#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcw/bitstrings.hpp"
#include "qcw/correlations.hpp"
#include "qcw/lhv.hpp"
#include "qcw/paradigm.hpp"
#include "qcw/thm1.hpp"
#include "qcw/thm2.hpp"

namespace qcw {

// All serializers produce objects with alphabetically ordered keys and
// shortest-round-trip floats, so identical inputs give identical bytes.

// {"n": int, "format": "dense"|"sparse", "cells": ...}; dense cells are the
// full row-major probability array, sparse cells are [x, y, p] triples over
// the block with the block index lists alongside.
nlohmann::json distribution_to_json(const JointDistribution& d);
JointDistribution distribution_from_json(const nlohmann::json& j);

// Schmidt terms plus the referenced unitary columns only; full unitaries are
// never serialized. Column entries are [row, re, im] triples.
nlohmann::json instance_to_json(const ParadigmInstance& inst);
ParadigmInstance instance_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const LhvModel& m);
LhvModel model_from_json(const nlohmann::json& j);

nlohmann::json thm1_report_to_json(const Thm1Report& r);
nlohmann::json thm2_report_to_json(const Thm2Report& r);

// {"n": int, "pairs": [[x, y], ...]} with outcomes as integers.
nlohmann::json samples_to_json(const std::vector<std::pair<BitString, BitString>>& samples,
                               int n);
std::vector<std::pair<BitString, BitString>> samples_from_json(const nlohmann::json& j);

// "# config: {...}" comment line, then "n,k,distance,pass" rows; pass is 1/0.
std::string curve_to_csv(const std::vector<CurveRow>& rows, const nlohmann::json& config);

// dump(2) plus trailing newline; creates parent directories.
void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qcw
