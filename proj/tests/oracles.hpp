// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive: flat enumeration, cofactor-free
// Bareiss determinants, breadth-first closures. Slow but obviously correct.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "caytop/cayley.hpp"
#include "caytop/graph.hpp"
#include "caytop/group.hpp"
#include "caytop/lattice.hpp"

namespace oracles {

using caytop::FgAbelianGroup;
using caytop::Graph;
using caytop::GroupElement;
using caytop::Int;
using caytop::IntMatrix;

// Try every assignment of k colors to the vertices.
inline bool brute_force_k_colorable(const Graph& g, int k) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> color(n, 0);
    for (;;) {
        bool proper = true;
        for (std::size_t u = 0; u < n && proper; ++u)
            for (int v : g.neighbors(static_cast<int>(u)))
                if (static_cast<std::size_t>(v) > u && color[u] == color[v]) {
                    proper = false;
                    break;
                }
        if (proper) return true;
        std::size_t i = 0;
        while (i < n && ++color[i] == k) color[i++] = 0;
        if (i == n) return false;
    }
}

inline int brute_force_chromatic(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1;; ++k)
        if (brute_force_k_colorable(g, k)) return k;
}

// Fraction-free Gaussian elimination; exact over the integers.
inline Int bareiss_det(IntMatrix a) {
    if (a.rows != a.cols) return 0;
    const std::size_t n = a.rows;
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

// Closure of a set of elements under addition, by repeated expansion.
inline std::set<GroupElement> naive_closure(const FgAbelianGroup& g,
                                            const std::vector<GroupElement>& gens) {
    std::set<GroupElement> seen{g.zero()};
    std::vector<GroupElement> frontier{g.zero()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const GroupElement& a : frontier)
            for (const GroupElement& s : gens) {
                GroupElement b = g.add(a, s);
                if (seen.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return seen;
}

// Exponent-vector column for a word in the symmetric set.
inline std::vector<Int> tally_column(std::size_t set_size, const std::vector<std::size_t>& word) {
    std::vector<Int> col(set_size, 0);
    for (std::size_t i : word) col[i] += 1;
    return col;
}

// All length-2 and length-4 null words over S, tallied as exponent columns:
// the homotopy subgroup generators, found by exhaustive |S|^2 + |S|^4 scan.
inline IntMatrix brute_homotopy_columns(const FgAbelianGroup& g,
                                        const std::vector<GroupElement>& s) {
    const std::size_t m = s.size();
    std::set<std::vector<Int>> cols;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (g.is_identity(g.add(s[i], s[j]))) cols.insert(tally_column(m, {i, j}));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    if (g.is_identity(g.add(g.add(s[i], s[j]), g.add(s[k], s[l]))))
                        cols.insert(tally_column(m, {i, j, k, l}));
    IntMatrix out(m, cols.size());
    std::size_t j = 0;
    for (const std::vector<Int>& c : cols) {
        for (std::size_t i = 0; i < m; ++i) out.at(i, j) = c[i];
        ++j;
    }
    return out;
}

// Column lattices are equal iff their unique column Hermite forms agree.
inline bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return caytop::hnf_columns(a) == caytop::hnf_columns(b);
}

// Erdos-Renyi graph on n vertices, each edge kept with probability num/den.
inline Graph random_graph(std::size_t n, unsigned num, unsigned den, std::mt19937_64& eng) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (eng() % den < num) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

// Every symmetric subset of a small group, as element lists (identity absent).
inline std::vector<std::vector<GroupElement>> all_symmetric_subsets(const FgAbelianGroup& g) {
    std::vector<GroupElement> elems = g.enumerate_elements();
    // pick one representative per {a, -a} orbit
    std::vector<std::vector<GroupElement>> orbits;
    std::set<GroupElement> used;
    for (const GroupElement& a : elems) {
        if (g.is_identity(a) || used.count(a)) continue;
        GroupElement b = g.neg(a);
        used.insert(a);
        used.insert(b);
        if (b == a) orbits.push_back({a});
        else orbits.push_back({a, b});
    }
    std::vector<std::vector<GroupElement>> subsets;
    const std::size_t m = orbits.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<GroupElement> s;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) s.insert(s.end(), orbits[i].begin(), orbits[i].end());
        subsets.push_back(std::move(s));
    }
    return subsets;
}

} // namespace oracles
