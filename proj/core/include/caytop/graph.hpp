#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace caytop {

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    std::size_t degree(int v) const { return adj_.at(v).size(); }
    bool adjacent(int u, int v) const;

    // Inserts the edge if absent; loops are rejected.
    void add_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic

  private:
    std::vector<std::vector<int>> adj_; // each list sorted ascending
    std::size_t num_edges_ = 0;
};

bool is_connected(const Graph& g);

// Connected components; vertices within a component ascending, components
// ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

// Proper 2-coloring per component if one exists (graph is bipartite).
bool is_bipartite(const Graph& g);

// Induced subgraph; vertex i of the result is verts[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// Cartesian (box) product: (u,v) ~ (u',v') iff equal in one coordinate and
// adjacent in the other. Vertex (u,v) gets index u * |V(y)| + v.
Graph box_product(const Graph& x, const Graph& y);

// DIMACS .col text: "p edge n m" then one 1-indexed "e u v" line per edge.
std::string to_dimacs(const Graph& g);

} // namespace caytop
