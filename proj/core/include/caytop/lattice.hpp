#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "caytop/ints.hpp"

namespace caytop {

// Dense integer matrix, row-major. Empty shapes (0 rows and/or 0 columns) are
// legal everywhere; they show up naturally as lattices in Z^0 or with no
// generators.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& d);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> data);

    Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    std::vector<Int> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Int>& v);
    IntMatrix column_slice(std::size_t first, std::size_t last) const;

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
std::vector<Int> apply_matrix(const IntMatrix& a, const std::vector<Int>& x);
std::vector<Int> scale(const Int& k, const std::vector<Int>& x);

// Smith decomposition d = u * a * v with u, v unimodular and d diagonal,
// d(0,0) | d(1,1) | ... , all diagonal entries >= 0, zeros trailing.
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    std::size_t rank() const;
    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(IntMatrix a);

// Diagonal of the Smith form without transform bookkeeping (cheaper).
std::vector<Int> smith_diagonal(IntMatrix a);

std::size_t matrix_rank(IntMatrix a);

// Inverse of a unimodular integer matrix; throws std::invalid_argument if the
// input is not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& u);

// Unique column-style Hermite form of the column lattice: pivot rows strictly
// increase, pivots are positive, entries left of a pivot in its row lie in
// [0, pivot). Zero columns are dropped, so the result is a basis.
IntMatrix hnf_columns(IntMatrix gens);

// Basis (as columns) of the integer kernel { x : a x = 0 }. The kernel of an
// integer matrix is automatically saturated. Output is Hermite-reduced.
IntMatrix kernel_basis(const IntMatrix& a);

// Basis of { x : (a x)_i == 0 mod row_moduli_i }, where modulus 0 marks an
// exact (free) row. Computed by adjoining a column n_i * e_i per torsion row,
// taking the integer kernel of the augmented matrix, and projecting back.
IntMatrix kernel_mod(const IntMatrix& a, const std::vector<Int>& row_moduli);

// Integer solution x of (columns of m) * x = target, if one exists.
std::optional<std::vector<Int>> solve_columns(const IntMatrix& m, const std::vector<Int>& target);

// Repeated membership tests against a fixed generator matrix. The generators
// are Hermite-reduced once at construction.
class LatticeMembership {
  public:
    explicit LatticeMembership(const IntMatrix& gens);
    bool contains(const std::vector<Int>& v) const;

  private:
    SmithForm f_;
    std::size_t ambient_ = 0;
};

bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& v);

// Isomorphism invariants of a finitely generated abelian group: free rank and
// the torsion divisibility chain d1 | d2 | ... with every di > 1. Two groups
// are isomorphic iff these agree.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianInvariants&) const = default;
    std::string to_string() const;
};

inline bool is_torsion(const AbelianInvariants& inv) { return inv.free_rank == 0; }

// Invariants of span(r_basis) / span(h_gens). The columns of r_basis must be
// independent and every column of h_gens must lie in their span; a containment
// violation signals a logic error upstream and throws internal_error.
AbelianInvariants quotient_invariants(const IntMatrix& r_basis, const IntMatrix& h_gens);

// Invariants of Z^free_rank x prod Z/moduli_i, i.e. the canonical form of a
// presented direct product (modulus 0 counts toward the free rank).
AbelianInvariants canonical_invariants(const std::vector<Int>& moduli, std::size_t free_rank);

} // namespace caytop
