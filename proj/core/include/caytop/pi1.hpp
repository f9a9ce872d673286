#pragma once

#include <vector>

#include "caytop/cayley.hpp"
#include "caytop/lattice.hpp"

namespace caytop {

// Lattice R[S] of relation tallies: column basis (Hermite form) of
// { x in Z^S : sum_i x_i s_i = 0 in G }. Each closed walk tallies to a point
// of R[S]; conversely every point is realized by some closed walk in <S>.
// These computations never build a graph, so infinite groups are fine.
IntMatrix relation_lattice(const SymmetricSet& s);
IntMatrix relation_lattice(const CayleyGraph& x);

// Even sublattice R_even[S]: relation tallies of even total length.
IntMatrix even_relation_lattice(const SymmetricSet& s);
IntMatrix even_relation_lattice(const CayleyGraph& x);

// Generators of the homotopy subgroup H[S] <= R_even[S]: e_i + e_j for every
// inverse pair s_j = -s_i (so 2 e_i when s_i is self-inverse), and
// e_i + e_j - e_k - e_l whenever s_i + s_j = s_k + s_l. Tallies of closed
// walks that are homotopic differ exactly by H[S].
IntMatrix homotopy_subgroup_gens(const SymmetricSet& s);
IntMatrix homotopy_subgroup_gens(const CayleyGraph& x);

// Invariants of R[S] / H[S]: the discrete fundamental group of Cay(<S>, S),
// abelian and independent of the basepoint.
AbelianInvariants pi1_invariants(const SymmetricSet& s);
AbelianInvariants pi1_invariants(const CayleyGraph& x);

struct EvenPi1Result {
    AbelianInvariants invariants{};    // R_even[S] / H[S]
    bool generates_group = false;      // <S> = G
    bool non_bipartite = false;        // R[S] != R_even[S], i.e. odd closed walks exist
    bool interpretation_valid = false; // both flags; then the quotient matches
                                       // the first homology of the neighborhood complex
};

EvenPi1Result pi1_even_invariants(const SymmetricSet& s);
EvenPi1Result pi1_even_invariants(const CayleyGraph& x);

bool generates_group(const FgAbelianGroup& g, const std::vector<GroupElement>& gens);

} // namespace caytop
