#include "mdec/report.hpp"

#include "mdec/sparse.hpp"

namespace mdec {

ClassReport classify(const Graph& g) {
    return {is_chordal(g), is_split(g), is_distance_hereditary(g), is_cograph(g)};
}

SparseReport sparse_report(const Graph& g, Vertex max_n) {
    SparseReport r;
    r.density_ok = density_ok(g);
    if (g.vertex_count() <= max_n) {
        r.method = "exhaustive";
        r.bad_subgraph = find_bad_subgraph(g, max_n);
        r.sparse = !r.bad_subgraph.has_value();
        return r;
    }
    r.note = "exhaustive search skipped above " + std::to_string(max_n) + " vertices";
    if (!r.density_ok) {
        r.method = "density-only";
        std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
        for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
        r.bad_subgraph = std::move(all);
        r.sparse = false;
        return r;
    }
    if (is_chordal(g).chordal) {
        r.method = "class-characterization";
        r.sparse = is_sparse_chordal(g);
        if (!*r.sparse) {
            // Every chordal refutation names a bad vertex set.
            Verdict v = decide_chordal(g);
            if (v.refutation) r.bad_subgraph = v.refutation->vertices;
        }
        return r;
    }
    if (g.vertex_count() >= 3 && is_biconnected(g) && is_distance_hereditary(g).distance_hereditary) {
        r.method = "class-characterization";
        r.sparse = is_sparse_2conn_dh(g);
        return r;
    }
    r.method = "density-only";
    return r;
}

namespace {

Json vertex_list(const std::vector<Vertex>& vs) { return Json(vs); }

Json elimination_json(const std::vector<PruneStep>& seq) {
    Json out = Json::array();
    for (const PruneStep& s : seq)
        out.push_back({{"vertex", s.vertex}, {"kind", std::string(to_string(s.kind))}, {"partner", s.partner}});
    return out;
}

}  // namespace

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const ClassReport& r) {
    Json out;
    Json chordal{{"value", r.chordal.chordal}};
    if (r.chordal.chordal) chordal["elimination_order"] = vertex_list(r.chordal.elimination_order);
    else chordal["chordless_cycle"] = vertex_list(r.chordal.chordless_cycle);
    out["chordal"] = std::move(chordal);

    Json split{{"value", r.split.split}};
    if (r.split.split) {
        split["clique"] = vertex_list(r.split.clique);
        split["independent"] = vertex_list(r.split.independent);
    }
    out["split"] = std::move(split);

    Json dh{{"value", r.distance_hereditary.distance_hereditary}};
    if (r.distance_hereditary.distance_hereditary) {
        dh["elimination"] = elimination_json(r.distance_hereditary.elimination);
    } else if (r.distance_hereditary.obstruction) {
        dh["obstruction"] = {{"name", r.distance_hereditary.obstruction->name},
                             {"vertices", vertex_list(r.distance_hereditary.obstruction->vertices)}};
    }
    out["distance_hereditary"] = std::move(dh);

    Json co{{"value", r.cograph.cograph}};
    if (r.cograph.cograph) co["elimination"] = elimination_json(r.cograph.elimination);
    else co["induced_p4"] = vertex_list(r.cograph.induced_p4);
    out["cograph"] = std::move(co);
    return out;
}

Json to_json(const SparseReport& r) {
    Json out;
    out["density_ok"] = r.density_ok;
    out["bad_subgraph"] = r.bad_subgraph ? vertex_list(*r.bad_subgraph) : Json(nullptr);
    out["method"] = r.method;
    out["sparse"] = r.sparse ? Json(*r.sparse) : Json(nullptr);
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

Json to_json(const Verdict& v) {
    Json out;
    out["decyclable"] = v.decision == Decision::unknown ? Json(nullptr) : Json(v.decyclable());
    out["status"] = std::string(to_string(v.decision));
    out["method"] = std::string(to_string(v.method));
    if (v.witness) {
        Json w = Json::array();
        for (const Edge& e : v.witness->edges()) w.push_back(to_json(e));
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    if (v.refutation) {
        const Refutation& r = *v.refutation;
        Json ref{{"kind", std::string(to_string(r.kind))}, {"vertices", vertex_list(r.vertices)}, {"blocks", r.blocks}};
        if (!r.blocks.empty()) ref["block_kind"] = std::string(to_string(r.block_kind));
        out["refutation"] = std::move(ref);
    } else {
        out["refutation"] = nullptr;
    }
    out["search_nodes"] = v.search_nodes;
    return out;
}

Json roles_json(const ReductionResult& r) {
    Json out;
    out["s"] = r.s;
    out["t"] = r.t;
    out["contracted"] = r.contracted;
    out["e"] = to_json(r.e);
    Json vs = Json::array();
    for (Vertex v = 0; v < r.g.vertex_count(); ++v)
        vs.push_back({{"id", v},
                      {"gadget", r.gadget_of[v]},
                      {"h_vertex", r.h_vertex[r.gadget_of[v]]},
                      {"role", r.role[v]}});
    out["vertices"] = std::move(vs);
    Json ports = Json::array();
    for (const auto& [he, ge] : r.port_edges) ports.push_back({{"h_edge", to_json(he)}, {"g_edge", to_json(ge)}});
    out["port_edges"] = std::move(ports);
    Json chain = Json::array();
    for (const Edge& e : r.chain_edges) chain.push_back(to_json(e));
    out["chain_edges"] = std::move(chain);
    return out;
}

}  // namespace mdec
