#include "caytop/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace caytop {

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    auto& nu = adj_.at(u);
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_.at(v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++num_edges_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (int v : adj_[u])
            if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(static_cast<int>(s));
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.num_vertices() <= 1 || components(g).size() == 1;
}

bool is_bipartite(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> idx(g.num_vertices(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    Graph sub(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int w : g.neighbors(verts[i]))
            if (idx[w] > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), idx[w]);
    return sub;
}

Graph box_product(const Graph& x, const Graph& y) {
    const std::size_t nx = x.num_vertices(), ny = y.num_vertices();
    Graph p(nx * ny);
    for (std::size_t u = 0; u < nx; ++u) {
        for (std::size_t v = 0; v < ny; ++v) {
            int base = static_cast<int>(u * ny + v);
            for (int w : y.neighbors(static_cast<int>(v)))
                if (w > static_cast<int>(v)) p.add_edge(base, static_cast<int>(u * ny + w));
            for (int w : x.neighbors(static_cast<int>(u)))
                if (w > static_cast<int>(u)) p.add_edge(base, static_cast<int>(w * ny + v));
        }
    }
    return p;
}

std::string to_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.num_vertices()) + " " +
                      std::to_string(g.num_edges()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

} // namespace caytop
