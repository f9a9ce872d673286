#pragma once

#include <array>
#include <optional>
#include <vector>

#include "caytop/cayley.hpp"
#include "caytop/graph.hpp"
#include "caytop/lattice.hpp"

namespace caytop {

// 2-skeleton of a simplicial complex on a subset of graph vertices. Vertices
// ascending; edges and triangles in lexicographic order, entries sorted.
struct Complex2 {
    std::vector<int> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
};

// 2-skeleton of the neighborhood complex: faces are the sets of up to three
// vertices lying in a common neighborhood N(v). Isolated vertices of g do not
// appear.
Complex2 neighborhood_complex_2skeleton(const Graph& g);

// Boundary of edges over vertices: column {u, v} has -1 at u and +1 at v.
IntMatrix boundary1(const Complex2& c);

// Boundary of triangles over edges: column {a, b, c} has +1 at {b,c},
// -1 at {a,c}, +1 at {a,b}.
IntMatrix boundary2(const Complex2& c);

// First simplicial homology ker(boundary1) / im(boundary2) over Z.
AbelianInvariants h1_invariants(const Complex2& c);
AbelianInvariants h1_invariants(const Graph& g); // of the neighborhood complex

// Whether H1 is finite (free rank zero). Uses the cycle-space dimension and a
// modular rank bound to avoid the exact computation in the common cases.
bool h1_is_torsion(const Complex2& c);

// Lower-bound certificate for the chromatic number: a connected non-bipartite
// graph whose neighborhood complex has finite H1 (equivalently, for a Cayley
// graph, whose discrete fundamental group is finite) is not 3-colorable.
struct Chi4Certificate {
    bool connected = false;
    bool non_bipartite = false;
    std::optional<bool> h1_torsion;         // neighborhood-complex route
    std::optional<bool> pi1_torsion;        // Cayley-graph route
    std::optional<int> implied_lower_bound; // 4 when the certificate applies
};

Chi4Certificate chi4_certificate(const Graph& g);

// Certificate for the identity component, using the (cheaper) discrete
// fundamental group route; the neighborhood-complex route is filled in only
// when `with_h1` is set.
Chi4Certificate chi4_certificate(const CayleyGraph& x, bool with_h1 = false);

} // namespace caytop
