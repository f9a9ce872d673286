#pragma once

#include <map>
#include <optional>
#include <vector>

#include "caytop/graph.hpp"
#include "caytop/group.hpp"

namespace caytop {

// Ordered, duplicate-free, negation-closed set of non-identity group
// elements. Order is first-seen insertion order with the negative appended
// right after its element, which keeps generator indexing deterministic.
class SymmetricSet {
  public:
    SymmetricSet() = default; // empty set over the trivial group

    // Closes the input under negation; identity elements are dropped silently.
    static SymmetricSet symmetrize(const FgAbelianGroup& g, const std::vector<GroupElement>& elems);

    // Input must already be symmetric, identity-free and duplicate-free.
    static SymmetricSet from_elements(const FgAbelianGroup& g, const std::vector<GroupElement>& elems);

    const FgAbelianGroup& group() const { return group_; }
    const std::vector<GroupElement>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    std::optional<std::size_t> find(const GroupElement& e) const;
    std::size_t index_of(const GroupElement& e) const; // throws if absent
    std::size_t inverse_index(std::size_t i) const { return inverse_.at(i); }
    bool self_inverse(std::size_t i) const { return inverse_.at(i) == i; }

  private:
    FgAbelianGroup group_;
    std::vector<GroupElement> elems_;
    std::vector<std::size_t> inverse_;
    std::map<GroupElement, std::size_t> index_;
};

enum class CayleyScope {
    whole_group,        // vertex set = all of G (G must be finite)
    generated_subgroup, // vertex set = <S>, i.e. the identity component
};

// Cayley graph of an abelian group: v ~ w iff w - v lies in S. |S|-regular
// and loop-free. Vertex order: enumerate_elements order for whole-group
// scope, breadth-first closure order for generated-subgroup scope.
class CayleyGraph {
  public:
    const FgAbelianGroup& group() const { return group_; }
    const SymmetricSet& gens() const { return gens_; }
    const Graph& graph() const { return graph_; }
    CayleyScope scope() const { return scope_; }

    const std::vector<GroupElement>& vertices() const { return verts_; }
    const GroupElement& vertex(int i) const { return verts_.at(i); }
    std::optional<int> find_vertex(const GroupElement& e) const;
    int vertex_index(const GroupElement& e) const; // throws if absent

    // Index in gens() of the generator labeling the step from -> to.
    std::size_t step_generator(int from, int to) const;

  private:
    friend CayleyGraph build_cayley(const FgAbelianGroup&, const SymmetricSet&, CayleyScope);
    FgAbelianGroup group_;
    SymmetricSet gens_;
    CayleyScope scope_ = CayleyScope::whole_group;
    std::vector<GroupElement> verts_;
    std::map<GroupElement, int> index_;
    Graph graph_;
};

CayleyGraph build_cayley(const FgAbelianGroup& g, const SymmetricSet& s, CayleyScope scope);

// Induced subgraph on the connected component of the identity (the whole
// graph when the scope is generated_subgroup).
Graph identity_component(const CayleyGraph& x);

} // namespace caytop
