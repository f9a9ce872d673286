#include "caytop/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace caytop {

namespace {

void chains_into(long long remaining, long long last, std::vector<Int>& cur,
                 std::vector<FgAbelianGroup>& out) {
    if (remaining == 1) {
        out.emplace_back(cur);
        return;
    }
    for (long long d = std::max(2LL, last); d <= remaining; ++d) {
        if (remaining % d != 0 || d % last != 0) continue;
        cur.push_back(d);
        chains_into(remaining / d, d, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<FgAbelianGroup> abelian_groups_up_to_order(long long max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
    std::vector<FgAbelianGroup> out;
    std::vector<Int> cur;
    for (long long n = 1; n <= max_order; ++n) chains_into(n, 1, cur, out);
    return out;
}

std::vector<FgAbelianGroup> exp4_groups_up_to_order(long long max_order) {
    std::vector<FgAbelianGroup> out;
    for (FgAbelianGroup& g : abelian_groups_up_to_order(max_order)) {
        Int e = g.exponent();
        if (e == 1 || e == 2 || e == 4) out.push_back(std::move(g));
    }
    return out;
}

SymmetricOrbitBasis symmetric_orbit_basis(const FgAbelianGroup& g) {
    if (!g.is_finite()) throw std::domain_error("orbit basis needs a finite group");
    SymmetricOrbitBasis basis;
    std::set<GroupElement> claimed;
    for (const GroupElement& e : g.enumerate_elements()) {
        if (g.is_identity(e) || claimed.count(e)) continue;
        GroupElement m = g.neg(e);
        if (m == e) {
            basis.self_inverse.push_back(e);
        } else {
            claimed.insert(m);
            basis.pairs.emplace_back(e, std::move(m));
        }
    }
    if (basis.orbit_count() > 63)
        throw std::domain_error("too many orbits for 64-bit subset masks");
    return basis;
}

std::vector<GroupElement> subset_from_mask(const SymmetricOrbitBasis& basis, std::uint64_t mask) {
    if (basis.orbit_count() < 64 && mask >> basis.orbit_count())
        throw std::invalid_argument("mask selects nonexistent orbits");
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < basis.self_inverse.size(); ++i)
        if (mask >> i & 1) out.push_back(basis.self_inverse[i]);
    for (std::size_t i = 0; i < basis.pairs.size(); ++i)
        if (mask >> (basis.self_inverse.size() + i) & 1) {
            out.push_back(basis.pairs[i].first);
            out.push_back(basis.pairs[i].second);
        }
    return out;
}

} // namespace caytop
