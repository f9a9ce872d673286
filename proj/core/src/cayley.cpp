#include "caytop/cayley.hpp"

#include <algorithm>
#include <stdexcept>

namespace caytop {

SymmetricSet SymmetricSet::symmetrize(const FgAbelianGroup& g, const std::vector<GroupElement>& elems) {
    SymmetricSet s;
    s.group_ = g;
    auto push = [&](GroupElement e) {
        if (s.index_.emplace(e, s.elems_.size()).second) s.elems_.push_back(std::move(e));
    };
    for (const GroupElement& raw : elems) {
        GroupElement e = g.reduce(raw);
        if (g.is_identity(e)) continue;
        GroupElement n = g.neg(e);
        push(e);
        push(std::move(n));
    }
    s.inverse_.resize(s.elems_.size());
    for (std::size_t i = 0; i < s.elems_.size(); ++i)
        s.inverse_[i] = s.index_.at(g.neg(s.elems_[i]));
    return s;
}

SymmetricSet SymmetricSet::from_elements(const FgAbelianGroup& g, const std::vector<GroupElement>& elems) {
    SymmetricSet s;
    s.group_ = g;
    for (const GroupElement& raw : elems) {
        GroupElement e = g.reduce(raw);
        if (g.is_identity(e))
            throw std::invalid_argument("identity element not allowed in a symmetric set");
        if (!s.index_.emplace(e, s.elems_.size()).second)
            throw std::invalid_argument("duplicate element " + element_to_string(e));
        s.elems_.push_back(std::move(e));
    }
    s.inverse_.resize(s.elems_.size());
    for (std::size_t i = 0; i < s.elems_.size(); ++i) {
        auto it = s.index_.find(g.neg(s.elems_[i]));
        if (it == s.index_.end())
            throw std::invalid_argument("set is not symmetric: missing -" +
                                        element_to_string(s.elems_[i]));
        s.inverse_[i] = it->second;
    }
    return s;
}

std::optional<std::size_t> SymmetricSet::find(const GroupElement& e) const {
    auto it = index_.find(group_.reduce(e));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SymmetricSet::index_of(const GroupElement& e) const {
    auto i = find(e);
    if (!i) throw std::invalid_argument(element_to_string(e) + " is not in the symmetric set");
    return *i;
}

std::optional<int> CayleyGraph::find_vertex(const GroupElement& e) const {
    auto it = index_.find(group_.reduce(e));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int CayleyGraph::vertex_index(const GroupElement& e) const {
    auto i = find_vertex(e);
    if (!i) throw std::invalid_argument(element_to_string(e) + " is not a vertex");
    return *i;
}

std::size_t CayleyGraph::step_generator(int from, int to) const {
    auto j = gens_.find(group_.sub(vertex(to), vertex(from)));
    if (!j) throw internal_error("step between non-adjacent vertices");
    return *j;
}

CayleyGraph build_cayley(const FgAbelianGroup& g, const SymmetricSet& s, CayleyScope scope) {
    if (s.group() != g) {
        // A default-constructed (empty) set is usable with any group.
        if (!s.empty() || s.group().num_factors() != 0)
            throw std::invalid_argument("symmetric set belongs to a different group");
    }

    CayleyGraph x;
    x.group_ = g;
    x.gens_ = s.group() == g ? s : SymmetricSet::symmetrize(g, {});
    x.scope_ = scope;

    if (scope == CayleyScope::whole_group) {
        if (!g.is_finite())
            throw std::domain_error("whole-group scope requires a finite group");
        x.verts_ = g.enumerate_elements();
    } else {
        for (const GroupElement& e : s.elements())
            if (g.order_of(e) == 0)
                throw std::domain_error("generated-subgroup scope requires torsion generators");
        x.verts_ = closure_elements(g, s.elements());
    }
    for (std::size_t i = 0; i < x.verts_.size(); ++i)
        x.index_.emplace(x.verts_[i], static_cast<int>(i));

    x.graph_ = Graph(x.verts_.size());
    for (std::size_t i = 0; i < x.verts_.size(); ++i)
        for (const GroupElement& step : s.elements()) {
            int j = x.index_.at(g.add(x.verts_[i], step));
            if (static_cast<int>(i) < j) x.graph_.add_edge(static_cast<int>(i), j);
        }
    if (x.graph_.num_edges() * 2 != x.verts_.size() * s.size())
        throw internal_error("Cayley graph is not |S|-regular");
    return x;
}

Graph identity_component(const CayleyGraph& x) {
    if (x.scope() == CayleyScope::generated_subgroup) return x.graph();
    int id = x.vertex_index(x.group().zero());
    for (const auto& comp : components(x.graph()))
        if (std::binary_search(comp.begin(), comp.end(), id))
            return induced_subgraph(x.graph(), comp);
    throw internal_error("identity vertex missing from every component");
}

} // namespace caytop
