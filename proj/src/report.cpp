// Copyright 2026 The kdq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "kdq/report.hpp"

#include <cmath>
#include <sstream>

namespace kdq::report {

namespace {

Json index_json(const IndexSet& s) { return Json(s); }

Json real_json(const RealVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Json phases_json(const std::map<int, double>& m) {
    Json out = Json::array();
    for (const auto& [idx, phase] : m) out.push_back(Json::array({idx, phase}));
    return out;
}

const char* kind_name(ClusterKind k) {
    switch (k) {
        case ClusterKind::A: return "A";
        case ClusterKind::B: return "B";
        case ClusterKind::C: return "C";
    }
    return "?";
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

Complex parse_complex(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidInput("complex entries must be [re, im] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector parse_complex_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(i) = parse_complex(j[i]);
    return v;
}

int parse_dim(const Json& root) {
    if (!root.is_object() || !root.contains("d") || !root["d"].is_number_integer()) {
        throw InvalidInput("missing integer field \"d\"");
    }
    const auto d = root["d"].get<long long>();
    if (d < 1 || d > 4096) throw InvalidInput("\"d\" out of range");
    return static_cast<int>(d);
}

}  // namespace

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const ComplexVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

Json matrix_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(j, k)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const KDTable& t) {
    return {{"d", t.d},
            {"q", matrix_json(t.q)},
            {"row_marginals", real_json(t.row_marginals())},
            {"col_marginals", real_json(t.col_marginals())}};
}

Json to_json(const ClassicalityReport& r) {
    Json cells = Json::array();
    for (const auto& [j, k] : r.offending_cells) cells.push_back(Json::array({j, k}));
    return {{"classical", r.classical},
            {"min_real", r.min_real},
            {"max_abs_imag", r.max_abs_imag},
            {"offending_cells", std::move(cells)},
            {"support_a", index_json(r.support.s_a)},
            {"support_b", index_json(r.support.s_b)},
            {"n_a", r.support.n_a()},
            {"n_b", r.support.n_b()}};
}

Json to_json(const BlockDecomposition& b) {
    Json blocks = Json::array();
    for (const Block& blk : b.blocks) {
        blocks.push_back({{"rows", index_json(blk.rows)}, {"cols", index_json(blk.cols)}});
    }
    return {{"s", b.s()},
            {"blocks", std::move(blocks)},
            {"row_perm", index_json(b.row_perm)},
            {"col_perm", index_json(b.col_perm)}};
}

Json to_json(const Theorem3Report& r) {
    return {{"rank_ok", r.rank_ok},   {"rank_c", r.rank_c},
            {"rank_r", r.rank_r},     {"bound_support", r.bound_support},
            {"bound_s", r.bound_s},   {"all_ok", r.all_ok()}};
}

Json to_json(const ClusterDecomposition& c, bool dimension_law) {
    Json clusters = Json::array();
    for (const Cluster& cl : c.clusters) {
        clusters.push_back({{"members", index_json(cl.members)},
                            {"kind", kind_name(cl.kind)},
                            {"rank", cl.rank}});
    }
    return {{"clusters", std::move(clusters)},
            {"norms", c.norms},
            {"dimension_law", dimension_law}};
}

Json to_json(const WitnessReport& w) {
    Json verdicts = Json::array();
    for (const WitnessVerdict& v : w.verdicts) {
        verdicts.push_back(
            {{"name", v.name}, {"fired", v.fired}, {"implies", to_string(v.implies)}});
    }
    return {{"d", w.d},
            {"n_zeros", w.n_zeros},
            {"s_full", w.s_full},
            {"z_r", w.z_r},
            {"z_c", w.z_c},
            {"n_a", w.n_a},
            {"n_b", w.n_b},
            {"verdicts", std::move(verdicts)},
            {"nonclassical_certified", w.nonclassical_certified}};
}

Json to_json(const OracleCatalog& c) {
    Json feasible = Json::array();
    for (const FeasibleEntry& e : c.feasible) {
        feasible.push_back({{"support_a", index_json(e.support.s_a)},
                            {"support_b", index_json(e.support.s_b)},
                            {"state", vector_json(e.representative.coeffs())},
                            {"null_space_dim", e.null_space_dim}});
    }
    return {{"d", c.d},
            {"unitary_id", c.unitary_id},
            {"count", c.feasible.size()},
            {"feasible", std::move(feasible)}};
}

Json to_json(const SoundnessReport& r) {
    Json out = {{"skipped", r.skipped},
                {"notice", r.notice},
                {"summands", r.summands},
                {"trials_run", r.trials_run},
                {"fired", r.fired},
                {"nonclassical", r.nonclassical},
                {"violation", nullptr}};
    if (r.violation) {
        out["violation"] = {{"summand", r.violation->summand},
                            {"trial", r.violation->trial},
                            {"state", vector_json(r.violation->state.coeffs())}};
    }
    return out;
}

Json to_json(const FeasibilityResult& f, const SupportPair& sp) {
    Json out = {{"feasible", f.feasible},
                {"support_a", index_json(sp.s_a)},
                {"support_b", index_json(sp.s_b)},
                {"null_space_dim", f.null_space_dim},
                {"tolerance_warning", f.tolerance_warning},
                {"alpha", nullptr},
                {"beta", nullptr},
                {"a", nullptr},
                {"b", nullptr},
                {"state", nullptr},
                {"refutation", nullptr}};
    if (f.phases) {
        out["alpha"] = phases_json(f.phases->alpha);
        out["beta"] = phases_json(f.phases->beta);
    }
    if (f.amplitudes) {
        out["a"] = real_json(f.amplitudes->a_vec);
        out["b"] = real_json(f.amplitudes->b_vec);
    }
    if (f.state) out["state"] = vector_json(f.state->coeffs());
    if (f.refutation) {
        const Refutation& r = *f.refutation;
        Json ref = {{"kind", to_string(r.kind)},
                    {"detail", r.detail},
                    {"index", r.index},
                    {"side", r.side == Side::A ? "A" : "B"},
                    {"cycle", nullptr}};
        if (r.cycle) {
            ref["cycle"] = {{"rows", index_json(r.cycle->rows)},
                            {"cols", index_json(r.cycle->cols)},
                            {"defect", r.cycle->defect}};
        }
        out["refutation"] = std::move(ref);
    }
    return out;
}

Json to_json(const DftClassicalState& s, bool verified) {
    const IndexSet s_a = [&] {
        IndexSet out;
        for (int jp = 0; jp < s.params.d1; ++jp) out.push_back(s.params.j0 + jp * s.params.d2);
        return out;
    }();
    IndexSet s_b;
    for (int kp = 0; kp < s.params.d2; ++kp) s_b.push_back(s.params.k0 + kp * s.params.d1);
    return {{"d", s.params.d},
            {"d1", s.params.d1},
            {"d2", s.params.d2},
            {"j0", s.params.j0},
            {"k0", s.params.k0},
            {"coeffs", vector_json(s.state.coeffs())},
            {"support_a", s_a},
            {"support_b", std::move(s_b)},
            {"verified", verified}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ComplexMatrix parse_matrix(const std::string& text) {
    const Json root = parse_text(text);
    const int d = parse_dim(root);
    if (!root.contains("entries") || !root["entries"].is_array() ||
        root["entries"].size() != static_cast<std::size_t>(d)) {
        throw InvalidInput("\"entries\" must hold d rows");
    }
    ComplexMatrix m(d, d);
    for (int j = 0; j < d; ++j) {
        const ComplexVector row = parse_complex_list(root["entries"][j], "matrix row");
        if (row.size() != d) throw InvalidInput("matrix row length differs from d");
        m.row(j) = row.transpose();
    }
    if (!all_finite(m)) throw InvalidInput("matrix has non-finite entries");
    return m;
}

PureState parse_state(const std::string& text) {
    const Json root = parse_text(text);
    const int d = parse_dim(root);
    if (!root.contains("coeffs")) throw InvalidInput("missing field \"coeffs\"");
    const ComplexVector c = parse_complex_list(root["coeffs"], "\"coeffs\"");
    if (c.size() != d) throw InvalidInput("\"coeffs\" length differs from d");
    if (!all_finite(c)) throw InvalidInput("state has non-finite entries");
    if (std::abs(c.norm() - 1.0) > 1e-8) {
        throw InvalidInput("state is not normalized (|norm - 1| > 1e-8)");
    }
    return PureState::normalized(c);
}

std::vector<ComplexVector> parse_vectors(const std::string& text) {
    const Json root = parse_text(text);
    if (!root.is_object() || !root.contains("vectors") || !root["vectors"].is_array()) {
        throw InvalidInput("missing array field \"vectors\"");
    }
    std::vector<ComplexVector> out;
    for (const Json& v : root["vectors"]) out.push_back(parse_complex_list(v, "vector"));
    return out;
}

IndexSet parse_index_list(const std::string& text) {
    IndexSet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("bad index list \"" + text + "\"");
        }
        if (used != item.size()) throw InvalidInput("bad index list \"" + text + "\"");
        out.push_back(value);
    }
    if (out.empty()) throw InvalidInput("empty index list");
    return out;
}

}  // namespace kdq::report
