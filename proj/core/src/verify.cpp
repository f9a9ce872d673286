#include "caytop/verify.hpp"

#include "caytop/cayley.hpp"
#include "caytop/coloring.hpp"
#include "caytop/enumerate.hpp"
#include "caytop/ncomplex.hpp"
#include "caytop/parallel.hpp"
#include "caytop/pi1.hpp"

namespace caytop {

namespace {

int chi_or_throw(const Graph& g, Deadline dl) {
    auto chi = chromatic_number(g, dl);
    if (!chi) throw budget_exhausted_error("chromatic solve interrupted by the budget");
    return *chi;
}

// Flattened (group, symmetric subset) instances for exhaustive sweeps.
struct SweepInstance {
    std::size_t group = 0;
    std::uint64_t mask = 0;
};

std::vector<SweepInstance> sweep_instances(const std::vector<FgAbelianGroup>& groups,
                                           std::vector<SymmetricOrbitBasis>& bases) {
    std::vector<SweepInstance> insts;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        bases.push_back(symmetric_orbit_basis(groups[gi]));
        for (std::uint64_t mask = 0; mask < bases.back().mask_count(); ++mask)
            insts.push_back({gi, mask});
    }
    return insts;
}

} // namespace

PayanResult verify_payan(int m, const VerifyOptions& opt) {
    if (m < 0 || m > 4) throw std::invalid_argument("verify_payan supports 0 <= m <= 4");
    FgAbelianGroup g{std::vector<Int>(static_cast<std::size_t>(m), 2)};
    SymmetricOrbitBasis basis = symmetric_orbit_basis(g);
    std::uint64_t masks = basis.mask_count();
    Deadline dl = deadline_after_ms(opt.budget_ms);

    std::vector<int> chi(masks);
    parallel_for(0, masks, opt.jobs, [&](std::size_t i) {
        auto s = SymmetricSet::symmetrize(g, subset_from_mask(basis, i));
        chi[i] = chi_or_throw(identity_component(build_cayley(g, s, CayleyScope::whole_group)), dl);
    });

    PayanResult r;
    r.m = m;
    r.subsets = masks;
    for (std::uint64_t i = 0; i < masks; ++i) {
        ++r.chi_histogram[chi[i]];
        if (chi[i] == 3) r.violating_masks.push_back(i);
    }
    return r;
}

Exp4Result verify_exponent_dividing_4(long long max_order, const VerifyOptions& opt) {
    Exp4Result r;
    r.max_order = max_order;
    std::vector<FgAbelianGroup> groups = exp4_groups_up_to_order(max_order);
    std::vector<SymmetricOrbitBasis> bases;
    std::vector<SweepInstance> insts = sweep_instances(groups, bases);
    r.groups = groups.size();
    r.instances = insts.size();
    Deadline dl = deadline_after_ms(opt.budget_ms);

    struct Out {
        int chi = 0;
        bool non_bipartite = false;
        bool pi1_free = false;
        bool containment_bad = false;
    };
    std::vector<Out> outs(insts.size());
    parallel_for(0, insts.size(), opt.jobs, [&](std::size_t i) {
        const FgAbelianGroup& g = groups[insts[i].group];
        auto s = SymmetricSet::symmetrize(g, subset_from_mask(bases[insts[i].group], insts[i].mask));
        CayleyGraph x = build_cayley(g, s, CayleyScope::whole_group);
        Graph comp = identity_component(x);
        Out o;
        o.chi = chi_or_throw(comp, dl);
        o.non_bipartite = !is_bipartite(comp);
        if (o.non_bipartite) o.pi1_free = !is_torsion(pi1_invariants(x));
        IntMatrix rel = relation_lattice(x);
        LatticeMembership h(homotopy_subgroup_gens(x));
        for (std::size_t c = 0; c < rel.cols && !o.containment_bad; ++c)
            if (!h.contains(scale(4, rel.column(c)))) o.containment_bad = true;
        outs[i] = o;
    });

    for (const Out& o : outs) {
        ++r.chi_histogram[o.chi];
        if (o.chi == 3) ++r.chi3_violations;
        if (o.non_bipartite) ++r.non_bipartite;
        if (o.pi1_free) ++r.pi1_free_violations;
        if (o.containment_bad) ++r.containment_violations;
    }
    return r;
}

std::vector<std::string> default_lemma21_specs() {
    return {"Z/3", "Z/5", "Z/8", "Z/9", "Z/16", "Z/8 x Z/3", "Z/3 x Z/4", "Z/8 x Z/2"};
}

Lemma21Result verify_lemma21(const std::vector<std::string>& group_specs,
                             const VerifyOptions& opt) {
    Deadline dl = deadline_after_ms(opt.budget_ms);
    Lemma21Result r;
    r.cases.resize(group_specs.size());
    parallel_for(0, group_specs.size(), opt.jobs, [&](std::size_t i) {
        FgAbelianGroup g = FgAbelianGroup::parse(group_specs[i]);
        if (!g.is_finite())
            throw std::invalid_argument("chromatic verification needs a finite group");
        Lemma21Case c;
        c.group = g.to_string();

        SymmetricSet basic = construct_3chromatic_gens(g);
        for (const GroupElement& e : basic.elements()) c.basic_set.push_back(element_to_string(e));
        c.basic_chi = chi_or_throw(identity_component(build_cayley(g, basic, CayleyScope::whole_group)), dl);

        SymmetricSet conn = construct_connected_3chromatic_gens(g);
        for (const GroupElement& e : conn.elements())
            c.connected_set.push_back(element_to_string(e));
        CayleyGraph x = build_cayley(g, conn, CayleyScope::whole_group);
        c.connected_graph = is_connected(x.graph());
        c.connected_chi = chi_or_throw(x.graph(), dl);
        r.cases[i] = std::move(c);
    });
    return r;
}

Section54Result example_section54(long long from, long long to, const VerifyOptions& opt) {
    if (from < 9) throw std::invalid_argument("the circulant family needs n >= 9");
    if (to < from) throw std::invalid_argument("empty range");
    Deadline dl = deadline_after_ms(opt.budget_ms);
    Section54Result r;
    r.cases.resize(static_cast<std::size_t>(to - from + 1));
    parallel_for(0, r.cases.size(), opt.jobs, [&](std::size_t i) {
        long long n = from + static_cast<long long>(i);
        FgAbelianGroup g{{Int(n)}};
        GroupElement one = g.basis_element(0);
        auto s = SymmetricSet::symmetrize(g, {one, g.scalar_mul(2, one)});
        CayleyGraph x = build_cayley(g, s, CayleyScope::whole_group);
        Section54Case c;
        c.n = n;
        c.pi1 = pi1_invariants(x);
        c.chi = chi_or_throw(x.graph(), dl);
        c.shift_ok = true;
        if (c.chi == 3) {
            // vertex i is the element i, so the period-3 condition is direct
            ColorDecision d = decide_k_colorable(x.graph(), 3, dl);
            if (d.status == SolveStatus::budget_exhausted)
                throw budget_exhausted_error("3-coloring interrupted by the budget");
            if (d.status != SolveStatus::found)
                throw internal_error("chromatic number 3 but no 3-coloring found");
            for (long long v = 0; v < n; ++v)
                if (d.coloring->color[static_cast<std::size_t>(v)] !=
                    d.coloring->color[static_cast<std::size_t>((v + 3) % n)])
                    c.shift_ok = false;
        }
        r.cases[i] = std::move(c);
    });
    return r;
}

CertificateSweepResult certificate_soundness_sweep(long long max_order, const VerifyOptions& opt) {
    CertificateSweepResult r;
    r.max_order = max_order;
    std::vector<FgAbelianGroup> groups = abelian_groups_up_to_order(max_order);
    std::vector<SymmetricOrbitBasis> bases;
    std::vector<SweepInstance> insts = sweep_instances(groups, bases);
    r.groups = groups.size();
    r.instances = insts.size();
    Deadline dl = deadline_after_ms(opt.budget_ms);

    struct Out {
        bool certified = false;
        bool violation = false;
    };
    std::vector<Out> outs(insts.size());
    parallel_for(0, insts.size(), opt.jobs, [&](std::size_t i) {
        const FgAbelianGroup& g = groups[insts[i].group];
        auto s = SymmetricSet::symmetrize(g, subset_from_mask(bases[insts[i].group], insts[i].mask));
        CayleyGraph x = build_cayley(g, s, CayleyScope::whole_group);
        Chi4Certificate cert = chi4_certificate(x);
        Out o;
        o.certified = cert.implied_lower_bound == 4;
        if (o.certified) {
            ColorDecision d = decide_k_colorable(identity_component(x), 3, dl);
            if (d.status == SolveStatus::budget_exhausted)
                throw budget_exhausted_error("certificate check interrupted by the budget");
            o.violation = d.status == SolveStatus::found;
        }
        outs[i] = o;
    });

    for (const Out& o : outs) {
        if (o.certified) ++r.certified;
        if (o.violation) ++r.violations;
    }
    return r;
}

} // namespace caytop
