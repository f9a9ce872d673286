#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "caytop/group.hpp"

namespace caytop {

// One group per isomorphism class of finite abelian groups of order up to
// max_order, presented by invariant factors d_1 | d_2 | ... (the trivial
// group included). Ordered by group order, then lexicographically.
std::vector<FgAbelianGroup> abelian_groups_up_to_order(long long max_order);

// The subset whose exponent divides 4 (products of Z/2 and Z/4 factors).
std::vector<FgAbelianGroup> exp4_groups_up_to_order(long long max_order);

// Negation orbits of the non-identity elements of a finite group. Symmetric
// subsets correspond to orbit unions, hence to bitmasks: bit i < self_inverse
// count selects that element, following bits select a {e, -e} pair.
struct SymmetricOrbitBasis {
    std::vector<GroupElement> self_inverse;
    std::vector<std::pair<GroupElement, GroupElement>> pairs;

    std::size_t orbit_count() const { return self_inverse.size() + pairs.size(); }
    std::uint64_t mask_count() const { return std::uint64_t{1} << orbit_count(); }
};

// Throws std::domain_error when the group has more than 63 orbits (masks
// would not fit 64 bits).
SymmetricOrbitBasis symmetric_orbit_basis(const FgAbelianGroup& g);

// Representatives of the orbits selected by `mask`, ready for symmetrize().
std::vector<GroupElement> subset_from_mask(const SymmetricOrbitBasis& basis, std::uint64_t mask);

} // namespace caytop
