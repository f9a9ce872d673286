#include "caytop/pi1.hpp"

#include <map>
#include <set>
#include <utility>

namespace caytop {

namespace {

// Generators as a coordinate matrix: one column per element of S.
IntMatrix coord_matrix(const SymmetricSet& s) {
    const auto& elems = s.elements();
    IntMatrix a(s.group().num_factors(), elems.size());
    for (std::size_t j = 0; j < elems.size(); ++j)
        for (std::size_t i = 0; i < a.rows; ++i)
            a.at(i, j) = elems[j][i];
    return a;
}

} // namespace

IntMatrix relation_lattice(const SymmetricSet& s) {
    return kernel_mod(coord_matrix(s), s.group().factors());
}

IntMatrix even_relation_lattice(const SymmetricSet& s) {
    IntMatrix a = coord_matrix(s);
    IntMatrix b(a.rows + 1, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            b.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < a.cols; ++j)
        b.at(a.rows, j) = 1; // total step count, constrained mod 2
    std::vector<Int> moduli = s.group().factors();
    moduli.push_back(2);
    return kernel_mod(b, moduli);
}

IntMatrix homotopy_subgroup_gens(const SymmetricSet& s) {
    const FgAbelianGroup& g = s.group();
    std::size_t m = s.size();

    std::vector<std::vector<Int>> cols;
    std::set<std::vector<Int>> seen;
    auto push = [&](std::vector<Int> c) {
        if (seen.insert(c).second) cols.push_back(std::move(c));
    };

    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = s.inverse_index(i);
        if (i > j) continue;
        std::vector<Int> c(m);
        c[i] += 1;
        c[j] += 1;
        push(std::move(c));
    }

    std::map<GroupElement, std::vector<std::pair<std::size_t, std::size_t>>> by_sum;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            by_sum[g.add(s.elements()[i], s.elements()[j])].push_back({i, j});
    for (const auto& [sum, pairs] : by_sum)
        for (std::size_t p = 0; p < pairs.size(); ++p)
            for (std::size_t q = p + 1; q < pairs.size(); ++q) {
                std::vector<Int> c(m);
                c[pairs[p].first] += 1;
                c[pairs[p].second] += 1;
                c[pairs[q].first] -= 1;
                c[pairs[q].second] -= 1;
                push(std::move(c));
            }

    IntMatrix h(m, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m; ++i)
            h.at(i, j) = cols[j][i];
    return h;
}

AbelianInvariants pi1_invariants(const SymmetricSet& s) {
    return quotient_invariants(relation_lattice(s), homotopy_subgroup_gens(s));
}

EvenPi1Result pi1_even_invariants(const SymmetricSet& s) {
    EvenPi1Result r;
    IntMatrix even = even_relation_lattice(s);
    r.invariants = quotient_invariants(even, homotopy_subgroup_gens(s));
    r.generates_group = generates_group(s.group(), s.elements());
    r.non_bipartite = !(relation_lattice(s) == even);
    r.interpretation_valid = r.generates_group && r.non_bipartite;
    return r;
}

IntMatrix relation_lattice(const CayleyGraph& x) { return relation_lattice(x.gens()); }
IntMatrix even_relation_lattice(const CayleyGraph& x) { return even_relation_lattice(x.gens()); }
IntMatrix homotopy_subgroup_gens(const CayleyGraph& x) { return homotopy_subgroup_gens(x.gens()); }
AbelianInvariants pi1_invariants(const CayleyGraph& x) { return pi1_invariants(x.gens()); }
EvenPi1Result pi1_even_invariants(const CayleyGraph& x) { return pi1_even_invariants(x.gens()); }

bool generates_group(const FgAbelianGroup& g, const std::vector<GroupElement>& gens) {
    std::size_t r = g.num_factors();
    if (r == 0) return true;
    const auto& factors = g.factors();
    std::size_t extra = 0;
    for (const Int& n : factors)
        if (n != 0) ++extra;
    IntMatrix a(r, gens.size() + extra);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        GroupElement e = g.reduce(gens[j]);
        for (std::size_t i = 0; i < r; ++i) a.at(i, j) = e[i];
    }
    std::size_t j = gens.size();
    for (std::size_t i = 0; i < r; ++i)
        if (factors[i] != 0) a.at(i, j++) = factors[i];
    std::vector<Int> d = smith_diagonal(a);
    std::size_t rank = 0;
    for (const Int& v : d)
        if (v != 0) ++rank;
    if (rank != r) return false;
    for (const Int& v : d)
        if (v != 0 && v != 1) return false;
    return true;
}

} // namespace caytop
