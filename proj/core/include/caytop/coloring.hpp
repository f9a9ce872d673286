#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "caytop/cayley.hpp"
#include "caytop/graph.hpp"

namespace caytop {

// Vertex coloring with palette {0, ..., num_colors-1}.
struct Coloring {
    int num_colors = 0;
    std::vector<int> color;

    // Same assignment over a wider palette (k >= num_colors).
    Coloring with_num_colors(int k) const;
};

bool is_proper(const Graph& g, const Coloring& c);

enum class SolveStatus {
    found,            // a proper coloring was produced
    exhausted,        // search space exhausted, no coloring exists
    budget_exhausted, // deadline hit before a definite answer
};

struct ColorDecision {
    SolveStatus status = SolveStatus::exhausted;
    std::optional<Coloring> coloring; // set iff status == found
};

// std::nullopt = no time limit.
using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline Deadline deadline_after_ms(std::optional<long long> ms) {
    if (!ms) return std::nullopt;
    return std::chrono::steady_clock::now() + std::chrono::milliseconds(*ms);
}

// Exact decision by backtracking: DSATUR vertex selection with color-symmetry
// breaking (a vertex may use at most one color beyond those already in use).
ColorDecision decide_k_colorable(const Graph& g, int k, Deadline deadline = std::nullopt);
bool k_colorable(const Graph& g, int k);

// Exact chromatic number, component by component; nullopt once the deadline
// interrupts any component.
std::optional<int> chromatic_number(const Graph& g, Deadline deadline = std::nullopt);
int chromatic_number_exact(const Graph& g);

// Chromatic number of the component of the identity. Every component of a
// Cayley graph is a translate of this one, so the value is also the chromatic
// number of the whole (finite) graph.
std::optional<int> chromatic_number(const CayleyGraph& x, Deadline deadline = std::nullopt);

// Deterministic greedy clique, used as a lower bound seed for the solver.
std::vector<int> greedy_clique(const Graph& g);

// A symmetric set S with chi(Cay(G, S)) = 3; throws std::domain_error when no
// such set exists, i.e. when the exponent of G divides 4. The set generates a
// subgroup pinned to a single cyclic factor, so the graph may be disconnected.
SymmetricSet construct_3chromatic_gens(const FgAbelianGroup& g);

// Like construct_3chromatic_gens, but S additionally generates all of G, so
// the whole-group Cayley graph is connected.
SymmetricSet construct_connected_3chromatic_gens(const FgAbelianGroup& g);

// Explicit proper 3-coloring of Cay(Z/2^k, {±1, 2^(k-1)}) for k >= 3; vertex
// i is the element i. Three arcs: 1..2^(k-2) alternates red/blue, then
// green/red up to 2^(k-1), then blue/green up to 2^k = 0.
Coloring fig2_coloring(int k);

// Proper coloring of box_product(x, y) from proper colorings with the same
// palette size: c(u,v) = (cx(u) + cy(v)) mod k.
Coloring box_coloring(const Graph& x, const Coloring& cx, const Graph& y, const Coloring& cy);

} // namespace caytop
