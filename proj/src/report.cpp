#include "ats/report.hpp"

namespace ats {

namespace {

Json json_of_multiset(const std::map<int, int>& ms) {
    Json out = Json::object();
    for (auto& [label, count] : ms) out["S_" + std::to_string(label)] = count;
    return out;
}

const char* tri_str(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "inconclusive";
    }
}

Json with_header(const char* kind) {
    Json j = Json::object();
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

}  // namespace

Json json_of(const IntMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_of(const RatMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_of(const TreeInstance& inst) {
    Json j = Json::object();
    j["n"] = inst.n;
    Json edges = Json::array();
    for (auto& [a, b] : inst.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = std::move(edges);
    j["S"] = std::vector<int>(inst.special.begin(), inst.special.end());
    return j;
}

Json json_of(const CandidateRep& rep) {
    Json j = Json::object();
    j["r"] = rep.r;
    j["cartanB"] = json_of(rep.cartanB);
    Json m = Json::array();
    for (const auto& row : rep.m) {
        Json jrow = Json::array();
        for (const auto& mat : row) jrow.push_back(json_of(mat));
        m.push_back(std::move(jrow));
    }
    j["m"] = std::move(m);
    return j;
}

Json json_of(const CheckReport& rp) {
    Json j = Json::object();
    j["composition_ok"] = rp.composition_ok;
    j["transitive_ok"] = rp.transitive_ok;
    j["faithful"] = rp.faithful;
    j["quasi_idem_ok"] = rp.quasi_idem_ok;
    j["row_col_symmetry_ok"] = rp.row_col_symmetry_ok;
    j["diag_dichotomy_ok"] = rp.diag_dichotomy_ok;
    j["x_independent"] = rp.x_independent;
    j["x_singletons"] = rp.x_singletons;
    j["x_disjoint"] = rp.x_disjoint;
    j["rank_matches"] = rp.rank_matches;
    j["cartan_matches"] = rp.cartan_matches;
    j["is_cell_tensor"] = rp.is_cell_tensor;
    j["object_map"] = rp.object_map;
    j["violated"] = rp.violated_structural_checks();
    return j;
}

Json report_algebra(const Algebra& a) {
    Json j = with_header("algebra");
    TreeInstance raw{a.inst.n, a.inst.edges, a.inst.special};
    j["instance"] = json_of(raw);
    j["dim"] = a.dim();
    Json basis = Json::array();
    for (const auto& b : a.basis) {
        Json e = Json::object();
        e["label"] = b.label();
        e["src"] = b.src;
        e["tgt"] = b.tgt;
        e["len"] = b.path_len();
        basis.push_back(std::move(e));
    }
    j["basis"] = std::move(basis);
    Json ks = Json::array();
    for (int i = 1; i <= a.inst.n; ++i) ks.push_back(k_scalar(a, i));
    j["k"] = std::move(ks);
    return j;
}

Json report_cartan(const Algebra& a) {
    Json j = with_header("cartan");
    j["n"] = a.inst.n;
    j["cartan"] = json_of(cartan_matrix(a));
    return j;
}

namespace {

Json json_of_module_summary(const Algebra& a, const Module& m) {
    Json j = Json::object();
    j["dim"] = m.dim();
    auto dv = m.dim_vector();
    j["dim_vector"] = std::vector<int>(dv.begin() + 1, dv.end());
    LoewyReport lr = loewy_report(m);
    Json layers = Json::array();
    for (const auto& layer : lr.layers) layers.push_back(json_of_multiset(layer));
    j["loewy_layers"] = std::move(layers);
    j["loewy_length"] = lr.loewy_length;
    j["top"] = json_of_multiset(lr.top);
    j["socle"] = json_of_multiset(lr.socle);
    j["relations_annihilate"] = relations_annihilate(a, m);
    return j;
}

}  // namespace

Json report_projectives(const Algebra& a) {
    Json j = with_header("projectives");
    int n = a.inst.n;
    Json projs = Json::object(), injs = Json::object();
    for (int i = 1; i <= n; ++i) {
        projs["P_" + std::to_string(i)] = json_of_module_summary(a, projective_module(a, i));
        injs["I_" + std::to_string(i)] = json_of_module_summary(a, injective_module(a, i));
    }
    j["projectives"] = std::move(projs);
    j["injectives"] = std::move(injs);
    j["self_injective"] = tri_str(is_self_injective(a));
    IntMat td(n, n);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) td.at(r - 1, c - 1) = tensor_dim(a, r, c);
    j["tensor_dims"] = json_of(td);
    return j;
}

namespace {

Json json_of_cells(const std::vector<std::vector<MorLabel>>& cells) {
    Json out = Json::array();
    for (const auto& cls : cells) {
        Json c = Json::array();
        for (const auto& l : cls) c.push_back(l.str());
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

Json report_cells(const Algebra& a) {
    Json j = with_header("cells");
    CellStructure cs = cells(a);
    j["left"] = json_of_cells(cs.left_cells);
    j["right"] = json_of_cells(cs.right_cells);
    j["two_sided"] = json_of_cells(cs.two_sided_cells);
    return j;
}

Json report_cellmatrices(const Algebra& a) {
    Json j = with_header("cellmatrices");
    int n = a.inst.n;
    auto mats = cell_rep_matrices(a);
    Json table = Json::object();
    Json traces = Json::object();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            std::string key = "F_" + std::to_string(i + 1) + std::to_string(k + 1);
            table[key] = json_of(mats[i][k]);
            if (i == k) traces[key] = mats[i][k].trace();
        }
    j["matrices"] = std::move(table);
    j["diagonal_traces"] = std::move(traces);
    return j;
}

Json report_flor(const RatMat& m, const FlorForm& form) {
    Json j = with_header("flor");
    j["size"] = m.rows;
    j["lambda"] = rat_str(form.lambda);
    // 1-based index reporting to match vertex conventions elsewhere.
    auto shift = [](const std::vector<int>& v) {
        std::vector<int> out;
        for (int x : v) out.push_back(x + 1);
        return out;
    };
    j["first_block"] = shift(form.first_block);
    j["core"] = shift(form.core);
    j["last_block"] = shift(form.last_block);
    Json classes = Json::array();
    for (const auto& cls : form.core_classes) classes.push_back(shift(cls));
    j["core_classes"] = std::move(classes);
    j["AJ"] = json_of(form.AJ);
    j["J"] = json_of(form.J);
    j["JB"] = json_of(form.JB);
    j["verified"] = verify_flor(m, form);
    return j;
}

namespace {

Json json_bounds(const SearchBounds& b, int n) {
    Json j = Json::object();
    j["r_max"] = b.r_max > 0 ? b.r_max : n + 1;
    j["entry_cap"] = b.entry_cap;
    j["budget"] = b.budget;
    return j;
}

Json json_annotated(const std::vector<AnnotatedRep>& reps) {
    Json out = Json::array();
    for (const auto& ar : reps) {
        Json j = Json::object();
        j["rep"] = json_of(ar.rep);
        j["checks"] = json_of(ar.checks);
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

Json report_search(const Algebra& a, const SearchBounds& bounds,
                   const std::vector<CandidateRep>& reps, bool require_faithful,
                   bool require_dichotomy) {
    Json j = with_header("search");
    j["instance"] = json_of(TreeInstance{a.inst.n, a.inst.edges, a.inst.special});
    j["bounds"] = json_bounds(bounds, a.inst.n);
    j["require_faithful"] = require_faithful;
    j["require_dichotomy"] = require_dichotomy;
    j["count"] = reps.size();
    Json solutions = Json::array();
    for (const auto& rep : reps) {
        Json s = Json::object();
        s["rep"] = json_of(rep);
        s["checks"] = json_of(check_candidate(a, rep));
        solutions.push_back(std::move(s));
    }
    j["solutions"] = std::move(solutions);
    return j;
}

Json report_classify(const Algebra& a, const SearchBounds& bounds, const Verdict& v) {
    Json j = with_header("classify");
    j["instance"] = json_of(TreeInstance{a.inst.n, a.inst.edges, a.inst.special});
    j["bounds"] = json_bounds(bounds, a.inst.n);
    j["confirmed"] = v.confirmed;
    j["covered_by_prior_work"] = v.covered_by_prior_work;
    j["faithful_with_dichotomy"] = json_annotated(v.faithful_with_dichotomy);
    j["unfaithful"] = json_annotated(v.unfaithful);
    j["extra_without_dichotomy"] = json_annotated(v.extra_without_dichotomy);
    j["extra_total"] = v.extra_total;
    j["extras_truncated"] = v.extras_truncated;
    j["all_extras_violate"] = v.all_extras_violate;
    return j;
}

}  // namespace ats
