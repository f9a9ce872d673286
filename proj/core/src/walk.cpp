#include "caytop/walk.hpp"

#include <queue>
#include <stdexcept>

namespace caytop {

Walk::Walk(const Graph& g, std::vector<int> verts) : g_(&g), verts_(std::move(verts)) {
    if (verts_.empty()) throw std::invalid_argument("a walk needs at least one vertex");
    for (int v : verts_)
        if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices())
            throw std::invalid_argument("walk vertex out of range");
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
        if (!g.adjacent(verts_[i], verts_[i + 1]))
            throw std::invalid_argument("walk steps over a non-edge");
}

Walk apply_move(const Walk& w, const HomotopyMove& m) {
    const Graph& g = w.graph();
    std::vector<int> v = w.vertices();
    std::size_t len = w.length();
    switch (m.kind) {
    case MoveKind::substitute:
        if (m.index == 0 || m.index >= len)
            throw std::invalid_argument("substitution index must be interior");
        if (!g.adjacent(v[m.index - 1], m.vertex) || !g.adjacent(m.vertex, v[m.index + 1]))
            throw std::invalid_argument("substituted vertex is not a common neighbor");
        v[m.index] = m.vertex;
        break;
    case MoveKind::insertion:
        if (m.index > len) throw std::invalid_argument("insertion index out of range");
        if (!g.adjacent(v[m.index], m.vertex))
            throw std::invalid_argument("inserted vertex is not a neighbor");
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(m.index) + 1,
                 {m.vertex, v[m.index]});
        break;
    case MoveKind::deletion:
        if (m.index == 0 || m.index >= len)
            throw std::invalid_argument("deletion index must be interior");
        if (v[m.index - 1] != v[m.index + 1])
            throw std::invalid_argument("deletion needs an immediate backtrack");
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(m.index),
                v.begin() + static_cast<std::ptrdiff_t>(m.index) + 2);
        break;
    }
    return Walk(g, std::move(v));
}

Walk concat(const Walk& a, const Walk& b) {
    if (&a.graph() != &b.graph())
        throw std::invalid_argument("cannot concatenate walks in different graphs");
    if (a.vertices().back() != b.vertices().front())
        throw std::invalid_argument("walks do not share a junction vertex");
    std::vector<int> v = a.vertices();
    v.insert(v.end(), b.vertices().begin() + 1, b.vertices().end());
    return Walk(a.graph(), std::move(v));
}

Walk reversed(const Walk& w) {
    std::vector<int> v(w.vertices().rbegin(), w.vertices().rend());
    return Walk(w.graph(), std::move(v));
}

std::vector<HomotopyMove> legal_moves(const Walk& w) {
    const Graph& g = w.graph();
    const std::vector<int>& v = w.vertices();
    std::size_t len = w.length();
    std::vector<HomotopyMove> moves;
    for (std::size_t i = 1; i < len; ++i)
        for (int c : g.neighbors(v[i - 1]))
            if (g.adjacent(c, v[i + 1]))
                moves.push_back({MoveKind::substitute, i, c});
    for (std::size_t i = 0; i <= len; ++i)
        for (int c : g.neighbors(v[i]))
            moves.push_back({MoveKind::insertion, i, c});
    for (std::size_t i = 1; i < len; ++i)
        if (v[i - 1] == v[i + 1]) moves.push_back({MoveKind::deletion, i, -1});
    return moves;
}

HomotopyMove random_move(const Walk& w, std::mt19937_64& eng) {
    std::vector<HomotopyMove> moves = legal_moves(w);
    if (moves.empty()) throw std::domain_error("walk admits no homotopy move");
    return moves[static_cast<std::size_t>(eng() % moves.size())];
}

long long winding_number(const Walk& w, const Coloring& c) {
    if (!w.is_closed()) throw std::invalid_argument("winding number needs a closed walk");
    if (c.num_colors != 3 || !is_proper(w.graph(), c))
        throw std::invalid_argument("winding number needs a proper 3-coloring");
    long long a = 0, b = 0;
    const std::vector<int>& v = w.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        int d = ((c.color[v[i + 1]] - c.color[v[i]]) % 3 + 3) % 3;
        if (d == 1)
            ++a;
        else if (d == 2)
            ++b;
        else
            throw internal_error("proper coloring produced a flat step");
    }
    if ((a - b) % 3 != 0) throw internal_error("closed walk with drift not divisible by 3");
    return (a - b) / 3;
}

std::optional<Walk> odd_closed_walk(const Graph& g) {
    int n = static_cast<int>(g.num_vertices());
    std::vector<int> depth(n, -1), parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (depth[root] != -1) continue;
        std::queue<int> q;
        depth[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (depth[v] == -1) {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if ((depth[v] & 1) == (depth[u] & 1)) {
                    // Same-parity edge closes an odd walk through the tree.
                    std::vector<int> up_u, up_v;
                    for (int x = u; x != -1; x = parent[x]) up_u.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) up_v.push_back(x);
                    std::vector<int> verts = up_u; // u .. root
                    verts.insert(verts.end(), up_v.rbegin() + 1, up_v.rend());
                    verts.push_back(u);
                    return Walk(g, std::move(verts));
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<Int> walk_to_relation(const Walk& w, const CayleyGraph& x) {
    if (!w.is_closed()) throw std::invalid_argument("relations come from closed walks");
    const std::vector<int>& v = w.vertices();
    std::vector<Int> tally(x.gens().size());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        auto j = x.gens().find(x.group().sub(x.vertex(v[i + 1]), x.vertex(v[i])));
        if (!j) throw std::invalid_argument("walk step is not labeled by a generator");
        ++tally[*j];
    }
    return tally;
}

} // namespace caytop
