#pragma once

#include <optional>
#include <random>
#include <vector>

#include "caytop/cayley.hpp"
#include "caytop/coloring.hpp"
#include "caytop/graph.hpp"
#include "caytop/ints.hpp"

namespace caytop {

// Walk in a graph: consecutive vertices are adjacent. A single vertex is a
// closed walk of length 0. The graph must outlive the walk.
class Walk {
  public:
    Walk(const Graph& g, std::vector<int> verts);

    const Graph& graph() const { return *g_; }
    const std::vector<int>& vertices() const { return verts_; }
    int vertex(std::size_t i) const { return verts_.at(i); }
    std::size_t length() const { return verts_.size() - 1; }
    bool is_closed() const { return verts_.front() == verts_.back(); }

  private:
    const Graph* g_;
    std::vector<int> verts_;
};

enum class MoveKind {
    substitute, // replace interior vertex i by another common neighbor
    insertion,  // replace v_i by v_i, w, v_i for a neighbor w of v_i
    deletion,   // drop v_i, v_{i+1} when v_{i-1} == v_{i+1}
};

struct HomotopyMove {
    MoveKind kind = MoveKind::substitute;
    std::size_t index = 0;
    int vertex = -1; // replacement / inserted vertex; ignored for deletions

    bool operator==(const HomotopyMove&) const = default;
};

// Applies one move, validating it; throws std::invalid_argument when the move
// is not legal for this walk. Endpoints are never touched, so closed walks
// stay closed with the same basepoint.
Walk apply_move(const Walk& w, const HomotopyMove& m);

// Joins two walks sharing a junction vertex (a ends where b starts).
Walk concat(const Walk& a, const Walk& b);

Walk reversed(const Walk& w);

// All legal moves in a fixed order: substitutions (index ascending, vertex
// ascending), then insertions, then deletions.
std::vector<HomotopyMove> legal_moves(const Walk& w);

// Uniform-ish pick via eng() % count, which keeps results identical across
// platforms; throws std::domain_error when no move is legal.
HomotopyMove random_move(const Walk& w, std::mt19937_64& eng);

// Winding number of a closed walk with respect to a proper 3-coloring:
// (a - b) / 3, where a counts steps raising the color by 1 mod 3 and b those
// raising it by 2. Invariant under the moves above.
long long winding_number(const Walk& w, const Coloring& c);

// Some odd closed walk (breadth-first search parity conflict), or nullopt for
// bipartite graphs. Deterministic.
std::optional<Walk> odd_closed_walk(const Graph& g);

// Tally of generator uses along a closed walk in a Cayley graph, one count
// per element of x.gens() in order. Opposite steps do not cancel: the tally
// entries always sum to the walk length.
std::vector<Int> walk_to_relation(const Walk& w, const CayleyGraph& x);

} // namespace caytop
