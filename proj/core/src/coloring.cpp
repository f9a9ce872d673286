#include "caytop/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace caytop {

Coloring Coloring::with_num_colors(int k) const {
    if (k < num_colors) throw std::invalid_argument("cannot shrink a palette");
    return Coloring{k, color};
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.color.size() != g.num_vertices()) return false;
    int n = static_cast<int>(g.num_vertices());
    for (int v = 0; v < n; ++v) {
        if (c.color[v] < 0 || c.color[v] >= c.num_colors) return false;
        for (int w : g.neighbors(v))
            if (c.color[w] == c.color[v]) return false;
    }
    return true;
}

namespace {

// One k-colorability search. Vertex choice: maximum saturation, then maximum
// degree, then smallest index (cf. DSATUR). Colors are introduced in order,
// so the candidate palette at a vertex is 0..min(used, k-1).
struct KColorSearch {
    const Graph& g;
    const int k;
    const int n;
    const Deadline deadline;
    std::vector<int> color;             // -1 = unassigned
    std::vector<std::vector<int>> ncnt; // ncnt[v][c] = colored neighbors of v with color c
    std::vector<int> sat;               // distinct colors among neighbors
    int colored = 0;
    int used = 0;
    unsigned long long nodes = 0;
    bool out_of_time = false;

    KColorSearch(const Graph& graph, int kk, Deadline dl)
        : g(graph), k(kk), n(static_cast<int>(graph.num_vertices())), deadline(dl),
          color(n, -1), ncnt(n, std::vector<int>(kk, 0)), sat(n, 0) {}

    int select() const {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            if (best == -1 || sat[v] > sat[best] ||
                (sat[v] == sat[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        color[v] = c;
        for (int w : g.neighbors(v))
            if (ncnt[w][c]++ == 0) ++sat[w];
    }

    void unassign(int v, int c) {
        color[v] = -1;
        for (int w : g.neighbors(v))
            if (--ncnt[w][c] == 0) --sat[w];
    }

    bool dfs() {
        if (colored == n) return true;
        // checked on entry (nodes == 0) so a spent budget interrupts even
        // tiny searches, then every 4096 nodes
        if (deadline && (nodes++ & 4095) == 0 &&
            std::chrono::steady_clock::now() > *deadline) {
            out_of_time = true;
            return false;
        }
        int v = select();
        int cmax = std::min(used, k - 1);
        for (int c = 0; c <= cmax; ++c) {
            if (ncnt[v][c] > 0) continue;
            int prev_used = used;
            if (c == used) ++used;
            assign(v, c);
            ++colored;
            if (dfs()) return true;
            --colored;
            unassign(v, c);
            used = prev_used;
            if (out_of_time) return false;
        }
        return false;
    }
};

} // namespace

ColorDecision decide_k_colorable(const Graph& g, int k, Deadline deadline) {
    if (k < 0) throw std::invalid_argument("negative number of colors");
    if (g.num_vertices() == 0) return {SolveStatus::found, Coloring{k, {}}};
    if (k == 0) return {SolveStatus::exhausted, std::nullopt};
    KColorSearch s(g, k, deadline);
    if (s.dfs()) return {SolveStatus::found, Coloring{k, s.color}};
    if (s.out_of_time) return {SolveStatus::budget_exhausted, std::nullopt};
    return {SolveStatus::exhausted, std::nullopt};
}

bool k_colorable(const Graph& g, int k) {
    return decide_k_colorable(g, k).status == SolveStatus::found;
}

std::vector<int> greedy_clique(const Graph& g) {
    int n = static_cast<int>(g.num_vertices());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

namespace {

std::optional<int> chromatic_of_connected(const Graph& h, Deadline deadline) {
    if (h.num_edges() == 0) return h.num_vertices() == 0 ? 0 : 1;
    if (is_bipartite(h)) return 2;
    int k = std::max<int>(3, static_cast<int>(greedy_clique(h).size()));
    for (;; ++k) {
        ColorDecision d = decide_k_colorable(h, k, deadline);
        if (d.status == SolveStatus::found) return k;
        if (d.status == SolveStatus::budget_exhausted) return std::nullopt;
    }
}

} // namespace

std::optional<int> chromatic_number(const Graph& g, Deadline deadline) {
    if (g.num_vertices() == 0) return 0;
    if (g.num_edges() == 0) return 1;
    if (is_bipartite(g)) return 2;
    int best = 0;
    for (const auto& comp : components(g)) {
        auto chi = chromatic_of_connected(induced_subgraph(g, comp), deadline);
        if (!chi) return std::nullopt;
        best = std::max(best, *chi);
    }
    return best;
}

int chromatic_number_exact(const Graph& g) {
    auto chi = chromatic_number(g, std::nullopt);
    if (!chi) throw internal_error("unbounded search reported a budget failure");
    return *chi;
}

std::optional<int> chromatic_number(const CayleyGraph& x, Deadline deadline) {
    return chromatic_number(identity_component(x), deadline);
}

namespace {

Int odd_part(Int n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

[[noreturn]] void no_triple_chromatic_set(const FgAbelianGroup& g) {
    throw std::domain_error("no symmetric set over " + g.to_string() +
                            " has chromatic number 3: the group exponent divides 4");
}

} // namespace

SymmetricSet construct_3chromatic_gens(const FgAbelianGroup& g) {
    Int e = g.exponent();
    if (e == 1 || e == 2 || e == 4) no_triple_chromatic_set(g);
    const auto& factors = g.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Int& n = factors[i];
        if (n == 0) {
            GroupElement x = g.basis_element(i);
            return SymmetricSet::symmetrize(g, {x, g.scalar_mul(2, x)});
        }
        if (n == 2 || n == 4) continue;
        if (n % 8 == 0) {
            GroupElement x = g.scalar_mul(n / 8, g.basis_element(i)); // order 8
            return SymmetricSet::symmetrize(g, {x, g.scalar_mul(4, x)});
        }
        Int d = odd_part(n); // >= 3 here
        GroupElement x = g.scalar_mul(n / d, g.basis_element(i));     // odd order d
        return SymmetricSet::symmetrize(g, {x});
    }
    throw internal_error("exponent check admitted a group with no usable factor");
}

SymmetricSet construct_connected_3chromatic_gens(const FgAbelianGroup& g) {
    Int e = g.exponent();
    if (e == 1 || e == 2 || e == 4) no_triple_chromatic_set(g);

    // Split each factor into prime-power pieces (free factors stay whole);
    // the pieces' generators together generate G.
    struct Piece {
        Int q; // 0 for an infinite piece, else a prime power
        GroupElement gen;
    };
    std::vector<Piece> pieces;
    const auto& factors = g.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Int& n = factors[i];
        if (n == 0) {
            pieces.push_back({0, g.basis_element(i)});
            continue;
        }
        Int m = n;
        for (Int p = 2; m > 1; ++p) {
            if (m % p != 0) continue;
            Int q = 1;
            while (m % p == 0) {
                m /= p;
                q *= p;
            }
            pieces.push_back({q, g.scalar_mul(n / q, g.basis_element(i))});
        }
    }

    // The first piece of infinite, odd (>= 3), or two-power (>= 8) order
    // anchors the 3-chromatic pattern; every other piece contributes only the
    // connectivity generators ±gen.
    std::vector<GroupElement> gens;
    bool anchored = false;
    for (const Piece& pc : pieces) {
        bool qualifies = pc.q == 0 || pc.q % 2 == 1 || pc.q % 8 == 0;
        if (!anchored && qualifies) {
            anchored = true;
            gens.push_back(pc.gen);
            if (pc.q == 0)
                gens.push_back(g.scalar_mul(2, pc.gen));
            else if (pc.q % 2 == 0)
                gens.push_back(g.scalar_mul(pc.q / 2, pc.gen));
        } else {
            gens.push_back(pc.gen);
        }
    }
    if (!anchored) throw internal_error("exponent check admitted a group with no anchor piece");
    return SymmetricSet::symmetrize(g, gens);
}

Coloring fig2_coloring(int k) {
    if (k < 3) throw std::invalid_argument("fig2_coloring needs k >= 3");
    if (k > 28) throw std::invalid_argument("fig2_coloring cap is k <= 28");
    long long n = 1LL << k, q = n / 4, h = n / 2;
    const int red = 0, blue = 1, green = 2;
    Coloring c{3, std::vector<int>(static_cast<std::size_t>(n), -1)};
    for (long long g = 1; g <= n; ++g) {
        int col;
        if (g <= q)
            col = (g % 2 == 1) ? red : blue;
        else if (g <= h)
            col = ((g - q) % 2 == 1) ? green : red;
        else
            col = ((g - h) % 2 == 1) ? blue : green;
        c.color[static_cast<std::size_t>(g % n)] = col;
    }
    return c;
}

Coloring box_coloring(const Graph& x, const Coloring& cx, const Graph& y, const Coloring& cy) {
    if (cx.num_colors != cy.num_colors)
        throw std::invalid_argument("box_coloring needs equal palette sizes");
    if (cx.color.size() != x.num_vertices() || cy.color.size() != y.num_vertices())
        throw std::invalid_argument("coloring does not match its graph");
    int k = cx.num_colors;
    Coloring c{k, std::vector<int>(x.num_vertices() * y.num_vertices())};
    for (std::size_t u = 0; u < x.num_vertices(); ++u)
        for (std::size_t v = 0; v < y.num_vertices(); ++v)
            c.color[u * y.num_vertices() + v] = (cx.color[u] + cy.color[v]) % k;
    return c;
}

} // namespace caytop
