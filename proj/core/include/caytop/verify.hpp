#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "caytop/group.hpp"
#include "caytop/lattice.hpp"

namespace caytop {

// Raised when a wall-clock budget interrupts a verification before it can
// return a definite answer.
struct budget_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifyOptions {
    unsigned jobs = 1;
    std::optional<long long> budget_ms; // wall budget for the whole run
};

// Sweep of every symmetric subset of (Z/2)^m: no Cayley graph over an
// elementary abelian 2-group has chromatic number 3.
struct PayanResult {
    int m = 0;
    std::uint64_t subsets = 0;
    std::map<int, std::uint64_t> chi_histogram;
    std::vector<std::uint64_t> violating_masks; // subsets with chi == 3

    bool ok() const { return violating_masks.empty(); }
};

PayanResult verify_payan(int m, const VerifyOptions& opt = {});

// Sweep of every (group, symmetric subset) pair over the groups of exponent
// dividing 4 and order at most max_order: chromatic number is never 3, the
// discrete fundamental group of each non-bipartite instance is finite, and
// 4 * R[S] always lies inside H[S].
struct Exp4Result {
    long long max_order = 0;
    std::uint64_t groups = 0;
    std::uint64_t instances = 0;
    std::uint64_t non_bipartite = 0;
    std::map<int, std::uint64_t> chi_histogram;
    std::uint64_t chi3_violations = 0;
    std::uint64_t pi1_free_violations = 0;
    std::uint64_t containment_violations = 0;

    bool ok() const {
        return chi3_violations == 0 && pi1_free_violations == 0 && containment_violations == 0;
    }
};

Exp4Result verify_exponent_dividing_4(long long max_order, const VerifyOptions& opt = {});

// Both generating-set constructions on a list of group presentations: the
// basic one yields chromatic number exactly 3, the connected one yields
// chromatic number exactly 3 together with a connected graph.
struct Lemma21Case {
    std::string group;
    std::vector<std::string> basic_set;
    std::vector<std::string> connected_set;
    int basic_chi = 0;
    int connected_chi = 0;
    bool connected_graph = false;

    bool ok() const { return basic_chi == 3 && connected_chi == 3 && connected_graph; }
};

struct Lemma21Result {
    std::vector<Lemma21Case> cases;

    bool ok() const {
        for (const auto& c : cases)
            if (!c.ok()) return false;
        return true;
    }
};

std::vector<std::string> default_lemma21_specs();
Lemma21Result verify_lemma21(const std::vector<std::string>& group_specs,
                             const VerifyOptions& opt = {});

// The distance-1-or-2 circulants Cay(Z/n, {±1, ±2}) for n in [from, to],
// from >= 9: the discrete fundamental group is free of rank 2, the chromatic
// number is 3 exactly when 3 | n, and any proper 3-coloring found repeats
// colors with period 3.
struct Section54Case {
    long long n = 0;
    AbelianInvariants pi1{};
    int chi = 0;
    bool shift_ok = false; // c(x+3) == c(x) in the 3-coloring found; true when chi != 3

    bool pi1_ok() const { return pi1.free_rank == 2 && pi1.torsion.empty(); }
    bool chi_ok() const { return chi == (n % 3 == 0 ? 3 : 4); }
    bool ok() const { return pi1_ok() && chi_ok() && shift_ok; }
};

struct Section54Result {
    std::vector<Section54Case> cases;

    bool ok() const {
        for (const auto& c : cases)
            if (!c.ok()) return false;
        return true;
    }
};

Section54Result example_section54(long long from, long long to, const VerifyOptions& opt = {});

// Sweep of every (group, symmetric subset) pair over all abelian groups of
// order at most max_order: whenever the chromatic lower-bound certificate
// fires, the exact solver confirms that no 3-coloring exists.
struct CertificateSweepResult {
    long long max_order = 0;
    std::uint64_t groups = 0;
    std::uint64_t instances = 0;
    std::uint64_t certified = 0;
    std::uint64_t violations = 0; // certified yet 3-colorable

    bool ok() const { return violations == 0; }
};

CertificateSweepResult certificate_soundness_sweep(long long max_order,
                                                   const VerifyOptions& opt = {});

} // namespace caytop
