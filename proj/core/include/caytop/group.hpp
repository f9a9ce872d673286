#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "caytop/ints.hpp"
#include "caytop/lattice.hpp"

namespace caytop {

// Element of a finitely generated abelian group: one coordinate per presented
// cyclic factor. Torsion coordinates are kept reduced into [0, n_i).
using GroupElement = std::vector<Int>;

// Finitely generated abelian group presented as a direct product of cyclic
// factors, in the order written. Factor modulus 0 denotes an infinite cyclic
// factor Z; every finite factor has modulus >= 2. The empty product is the
// trivial group. Instances are immutable.
class FgAbelianGroup {
  public:
    FgAbelianGroup() = default;
    explicit FgAbelianGroup(std::vector<Int> factors);

    // Grammar: term ("x" term)*, term = "Z" | "Z^r" | "Z/n" | "(Z/n)^k",
    // with n >= 2, r >= 1, k >= 1; whitespace is ignored.
    static FgAbelianGroup parse(const std::string& spec);

    const std::vector<Int>& factors() const { return factors_; }
    std::size_t num_factors() const { return factors_.size(); }
    std::size_t free_rank() const;
    std::vector<Int> torsion_moduli() const;
    bool is_finite() const { return free_rank() == 0; }
    Int order() const;    // 0 when infinite
    Int exponent() const; // least m >= 1 with m*a = 0 for all a; 0 if unbounded
    std::string to_string() const;

    GroupElement zero() const { return GroupElement(factors_.size()); }
    GroupElement basis_element(std::size_t i) const;
    GroupElement reduce(GroupElement a) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scalar_mul(const Int& k, const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const;
    Int order_of(const GroupElement& a) const; // 0 = infinite order

    // All elements in lexicographic coordinate order; throws std::domain_error
    // for infinite groups.
    std::vector<GroupElement> enumerate_elements() const;

    GroupElement parse_element(const std::string& text) const;

    bool operator==(const FgAbelianGroup&) const = default;

  private:
    void check_dim(const GroupElement& a) const;
    std::vector<Int> factors_;
};

// "(3,1)" style rendering, uniform for any rank.
std::string element_to_string(const GroupElement& a);

// Cyclic decomposition of the subgroup generated by `gens`, together with one
// generator per abstract factor so that coordinates embed back into g.
struct SubgroupDecomposition {
    FgAbelianGroup subgroup;                      // free factors first, then the torsion chain
    std::vector<GroupElement> factor_generators;  // in ambient coordinates

    GroupElement embed(const FgAbelianGroup& ambient, const GroupElement& coords) const;
};

SubgroupDecomposition subgroup_generated(const FgAbelianGroup& g, const std::vector<GroupElement>& gens);

// Elements of <gens>, breadth-first from the identity (deterministic order);
// throws std::domain_error when some generator has infinite order.
std::vector<GroupElement> closure_elements(const FgAbelianGroup& g, const std::vector<GroupElement>& gens);

} // namespace caytop
