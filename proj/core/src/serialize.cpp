#include "caytop/serialize.hpp"

#include <sstream>

namespace caytop {

nlohmann::json int_json(const Int& v) {
    if (fits_int64(v)) return to_int64(v);
    return v.str();
}

namespace {

nlohmann::json int_array(const std::vector<Int>& vals) {
    nlohmann::json a = nlohmann::json::array();
    for (const Int& v : vals) a.push_back(int_json(v));
    return a;
}

nlohmann::json histogram_json(const std::map<int, std::uint64_t>& h) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : h) j[std::to_string(k)] = v;
    return j;
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

} // namespace

void to_json(nlohmann::json& j, const AbelianInvariants& inv) {
    j = {{"free_rank", inv.free_rank},
         {"torsion", int_array(inv.torsion)},
         {"pretty", inv.to_string()}};
}

void to_json(nlohmann::json& j, const Coloring& c) {
    j = {{"num_colors", c.num_colors}, {"colors", c.color}};
}

void to_json(nlohmann::json& j, const Chi4Certificate& cert) {
    j = {{"connected", cert.connected},
         {"non_bipartite", cert.non_bipartite},
         {"h1_torsion", opt_json(cert.h1_torsion)},
         {"pi1_torsion", opt_json(cert.pi1_torsion)},
         {"implied_lower_bound", opt_json(cert.implied_lower_bound)}};
}

void to_json(nlohmann::json& j, const Complex2& c) {
    j = {{"num_vertices", c.vertices.size()},
         {"num_edges", c.edges.size()},
         {"num_triangles", c.triangles.size()}};
}

void to_json(nlohmann::json& j, const PayanResult& r) {
    j = {{"m", r.m},
         {"subsets", r.subsets},
         {"chi_histogram", histogram_json(r.chi_histogram)},
         {"violating_masks", r.violating_masks},
         {"ok", r.ok()}};
}

void to_json(nlohmann::json& j, const Exp4Result& r) {
    j = {{"max_order", r.max_order},
         {"groups", r.groups},
         {"instances", r.instances},
         {"non_bipartite", r.non_bipartite},
         {"chi_histogram", histogram_json(r.chi_histogram)},
         {"chi3_violations", r.chi3_violations},
         {"pi1_free_violations", r.pi1_free_violations},
         {"containment_violations", r.containment_violations},
         {"ok", r.ok()}};
}

void to_json(nlohmann::json& j, const Lemma21Case& c) {
    j = {{"group", c.group},
         {"basic_set", c.basic_set},
         {"connected_set", c.connected_set},
         {"basic_chi", c.basic_chi},
         {"connected_chi", c.connected_chi},
         {"connected_graph", c.connected_graph},
         {"ok", c.ok()}};
}

void to_json(nlohmann::json& j, const Lemma21Result& r) {
    j = {{"cases", r.cases}, {"ok", r.ok()}};
}

void to_json(nlohmann::json& j, const Section54Case& c) {
    j = {{"n", c.n},
         {"pi1", c.pi1},
         {"pi1_ok", c.pi1_ok()},
         {"chi", c.chi},
         {"chi_ok", c.chi_ok()},
         {"shift_ok", c.shift_ok},
         {"ok", c.ok()}};
}

void to_json(nlohmann::json& j, const Section54Result& r) {
    j = {{"cases", r.cases}, {"ok", r.ok()}};
}

void to_json(nlohmann::json& j, const CertificateSweepResult& r) {
    j = {{"max_order", r.max_order},
         {"groups", r.groups},
         {"instances", r.instances},
         {"certified", r.certified},
         {"violations", r.violations},
         {"ok", r.ok()}};
}

void to_json(nlohmann::json& j, const SearchResult& r) {
    j = {{"m", r.m},
         {"target", r.target},
         {"mask_space", r.mask_space},
         {"resumed_from", r.resumed_from},
         {"scanned_to", r.scanned_to},
         {"canonical_examined", r.canonical_examined},
         {"undecided", r.undecided},
         {"hits", r.hits},
         {"complete", r.complete}};
}

nlohmann::json graph_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"num_vertices", g.num_vertices()}, {"num_edges", g.num_edges()}, {"edges", edges}};
}

nlohmann::json cayley_json(const CayleyGraph& x) {
    nlohmann::json j = graph_json(x.graph());
    j["group"] = x.group().to_string();
    nlohmann::json set = nlohmann::json::array();
    for (const GroupElement& e : x.gens().elements()) set.push_back(element_to_string(e));
    j["set"] = set;
    j["scope"] = x.scope() == CayleyScope::whole_group ? "whole_group" : "generated_subgroup";
    nlohmann::json verts = nlohmann::json::array();
    for (const GroupElement& e : x.vertices()) verts.push_back(element_to_string(e));
    j["vertices"] = verts;
    return j;
}

std::string dimacs_coloring(const Coloring& c) {
    std::ostringstream out;
    for (std::size_t v = 0; v < c.color.size(); ++v)
        out << "v " << v + 1 << ' ' << c.color[v] << '\n';
    return out.str();
}

nlohmann::json make_report(const std::string& command, nlohmann::json results) {
    nlohmann::json j;
    j["command"] = command;
    j["version"] = tool_version;
    j["results"] = std::move(results);
    j["timings"] = nullptr;
    return j;
}

} // namespace caytop
