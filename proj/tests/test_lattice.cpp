#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "caytop/lattice.hpp"
#include "oracles.hpp"

using namespace caytop;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, int lo, int hi, std::mt19937_64& eng) {
    IntMatrix a(r, c);
    std::uniform_int_distribution<int> d(lo, hi);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a.at(i, j) = d(eng);
    return a;
}

bool is_unimodular(const IntMatrix& u) {
    Int det = oracles::bareiss_det(u);
    return det == 1 || det == -1;
}

void check_smith(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    REQUIRE(f.d.rows == a.rows);
    REQUIRE(f.d.cols == a.cols);
    CHECK(is_unimodular(f.u));
    CHECK(is_unimodular(f.v));
    CHECK(multiply(multiply(f.u, a), f.v) == f.d);
    std::vector<Int> diag = f.diagonal();
    for (std::size_t i = 0; i < f.d.rows; ++i)
        for (std::size_t j = 0; j < f.d.cols; ++j)
            if (i != j) CHECK(f.d.at(i, j) == 0);
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] == 0) CHECK(diag[i + 1] == 0);
        else CHECK(diag[i + 1] % diag[i] == 0);
    }
    CHECK(smith_diagonal(a) == diag);
    std::size_t nonzero = 0;
    for (const Int& d : diag)
        if (d != 0) ++nonzero;
    CHECK(matrix_rank(a) == nonzero);
}

} // namespace

TEST_CASE("smith normal form of a fixed 2x2 matrix") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithForm f = smith_normal_form(a);
    CHECK(f.diagonal() == std::vector<Int>{2, 4});
    CHECK(multiply(multiply(f.u, a), f.v) == f.d);
    CHECK(is_unimodular(f.u));
    CHECK(is_unimodular(f.v));
    CHECK(f.rank() == 2);
}

TEST_CASE("smith normal form on fixed shapes") {
    check_smith(IntMatrix(0, 0));
    check_smith(IntMatrix(3, 0));
    check_smith(IntMatrix(0, 3));
    check_smith(IntMatrix(2, 4)); // all zero
    check_smith(IntMatrix::identity(3));
    check_smith(IntMatrix::from_rows({{1, -1, 4}}));
    check_smith(IntMatrix::from_rows({{6}, {10}, {15}}));
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 eng(0x5eed0001);
    for (int t = 0; t < 80; ++t) {
        std::size_t r = 1 + eng() % 5, c = 1 + eng() % 5;
        check_smith(random_matrix(r, c, -9, 9, eng));
    }
}

TEST_CASE("inverse of a unimodular matrix") {
    std::mt19937_64 eng(0x5eed0002);
    for (int t = 0; t < 20; ++t) {
        IntMatrix a = random_matrix(4, 4, -6, 6, eng);
        SmithForm f = smith_normal_form(a);
        IntMatrix inv = inverse_unimodular(f.u);
        CHECK(multiply(inv, f.u) == IntMatrix::identity(4));
        CHECK(multiply(f.u, inv) == IntMatrix::identity(4));
    }
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("hermite form is a canonical basis of the column lattice") {
    IntMatrix a = IntMatrix::from_rows({{2, 1}, {0, 1}});
    IntMatrix h = hnf_columns(a);
    CHECK(h == hnf_columns(h)); // idempotent
    CHECK(oracles::lattice_equal(a, h));

    std::mt19937_64 eng(0x5eed0003);
    for (int t = 0; t < 40; ++t) {
        IntMatrix b = random_matrix(3, 4, -9, 9, eng);
        // post-multiplying by a unimodular matrix keeps the lattice
        IntMatrix w = smith_normal_form(random_matrix(4, 4, -4, 4, eng)).v;
        CHECK(hnf_columns(b) == hnf_columns(multiply(b, w)));
    }

    CHECK(hnf_columns(IntMatrix(3, 2)).cols == 0); // zero columns dropped
}

TEST_CASE("kernel basis") {
    std::mt19937_64 eng(0x5eed0004);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + eng() % 3, c = 1 + eng() % 5;
        IntMatrix a = random_matrix(r, c, -9, 9, eng);
        IntMatrix k = kernel_basis(a);
        CHECK(k.rows == c);
        CHECK(k.cols == c - matrix_rank(a));
        IntMatrix prod = multiply(a, k);
        CHECK(prod.is_zero());
    }
    CHECK(kernel_basis(IntMatrix::identity(3)).cols == 0);
}

TEST_CASE("kernel_mod of the circulant relation matrix") {
    // { x in Z^3 : x0 - x1 + 4 x2 == 0 mod 8 }
    IntMatrix a = IntMatrix::from_rows({{1, -1, 4}});
    IntMatrix got = kernel_mod(a, {Int(8)});
    IntMatrix expected = transpose(IntMatrix::from_rows({{1, 1, 0}, {4, 0, -1}, {8, 0, 0}}));
    CHECK(oracles::lattice_equal(got, expected));

    // every residue in a box agrees with membership
    LatticeMembership member(got);
    for (int x = -8; x <= 8; ++x)
        for (int y = -8; y <= 8; ++y)
            for (int z = -8; z <= 8; ++z) {
                bool cong = ((x - y + 4 * z) % 8 + 8) % 8 == 0;
                CHECK(member.contains({Int(x), Int(y), Int(z)}) == cong);
            }
}

TEST_CASE("kernel_mod matches brute-force residues") {
    std::mt19937_64 eng(0x5eed0005);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + eng() % 2, c = 1 + eng() % 3;
        IntMatrix a = random_matrix(r, c, -4, 4, eng);
        std::vector<Int> moduli(r);
        for (Int& n : moduli) {
            long long pick = static_cast<long long>(eng() % 4);
            n = pick == 0 ? 0 : pick + 1; // 0 (exact) or 2..4
        }
        LatticeMembership member(kernel_mod(a, moduli));
        std::vector<long long> x(c, -5);
        for (;;) {
            std::vector<Int> xi(x.begin(), x.end());
            bool cong = true;
            for (std::size_t i = 0; i < r && cong; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < c; ++j) acc += a.at(i, j) * xi[j];
                cong = moduli[i] == 0 ? acc == 0 : pos_mod(acc, moduli[i]) == 0;
            }
            CHECK(member.contains(xi) == cong);
            std::size_t i = 0;
            while (i < c && ++x[i] > 5) x[i++] = -5;
            if (i == c) break;
        }
    }
}

TEST_CASE("solve_columns") {
    std::mt19937_64 eng(0x5eed0006);
    for (int t = 0; t < 40; ++t) {
        IntMatrix m = random_matrix(3, 4, -9, 9, eng);
        std::vector<Int> x(4);
        for (Int& v : x) v = static_cast<long long>(eng() % 11) - 5;
        std::vector<Int> target = apply_matrix(m, x);
        auto sol = solve_columns(m, target);
        REQUIRE(sol.has_value());
        CHECK(apply_matrix(m, *sol) == target);
    }
    // 2Z has no solution for odd targets
    IntMatrix two = IntMatrix::from_rows({{2}});
    CHECK_FALSE(solve_columns(two, {Int(3)}).has_value());
    CHECK(solve_columns(two, {Int(-6)}).has_value());
    CHECK_THROWS_AS(solve_columns(two, {Int(1), Int(2)}), std::invalid_argument);
}

TEST_CASE("lattice membership") {
    IntMatrix gens = IntMatrix::from_rows({{2, 0}, {0, 2}});
    CHECK(lattice_contains(gens, {Int(4), Int(-6)}));
    CHECK_FALSE(lattice_contains(gens, {Int(1), Int(0)}));
    LatticeMembership m(gens);
    CHECK(m.contains({Int(0), Int(0)}));
    CHECK_THROWS_AS(m.contains({Int(1)}), std::invalid_argument);

    std::mt19937_64 eng(0x5eed0007);
    for (int t = 0; t < 20; ++t) {
        IntMatrix g = random_matrix(3, 3, -5, 5, eng);
        LatticeMembership mem(g);
        std::vector<Int> coeffs(3);
        for (Int& v : coeffs) v = static_cast<long long>(eng() % 9) - 4;
        CHECK(mem.contains(apply_matrix(g, coeffs)));
    }
}

TEST_CASE("quotient invariants") {
    IntMatrix i3 = IntMatrix::identity(3);
    IntMatrix two_i3 = IntMatrix::diagonal({2, 2, 2});
    AbelianInvariants q = quotient_invariants(i3, two_i3);
    CHECK(q.free_rank == 0);
    CHECK(q.torsion == std::vector<Int>{2, 2, 2});

    // full-rank sublattice of index 2 inside a non-trivial basis
    IntMatrix r = transpose(IntMatrix::from_rows({{1, 1, 1}, {0, 2, 0}, {0, 0, 2}}));
    AbelianInvariants k4 = quotient_invariants(r, two_i3);
    CHECK(k4.free_rank == 0);
    CHECK(k4.torsion == std::vector<Int>{2});

    // quotient by the lattice itself is trivial
    AbelianInvariants triv = quotient_invariants(r, r);
    CHECK(triv.free_rank == 0);
    CHECK(triv.torsion.empty());
    CHECK(triv.to_string() == "0");

    // free part survives
    IntMatrix z2 = IntMatrix::identity(2);
    IntMatrix h(2, 1);
    h.at(0, 0) = 1;
    AbelianInvariants f = quotient_invariants(z2, h);
    CHECK(f.free_rank == 1);
    CHECK(f.torsion.empty());
    CHECK(f.to_string() == "Z");

    // dependent columns are not a basis
    IntMatrix dep = transpose(IntMatrix::from_rows({{1, 0}, {2, 0}}));
    CHECK_THROWS_AS(quotient_invariants(dep, IntMatrix(2, 0)), std::invalid_argument);

    // subgroup outside the span is a caller bug
    IntMatrix rx(2, 1);
    rx.at(0, 0) = 1;
    IntMatrix hy(2, 1);
    hy.at(1, 0) = 1;
    CHECK_THROWS_AS(quotient_invariants(rx, hy), internal_error);
}

TEST_CASE("canonical invariants") {
    AbelianInvariants a = canonical_invariants({4, 2, 6}, 1);
    CHECK(a.free_rank == 1);
    CHECK(a.torsion == std::vector<Int>{2, 2, 12});
    CHECK(a.to_string() == "Z x Z/2 x Z/2 x Z/12");
    CHECK_FALSE(is_torsion(a));

    AbelianInvariants b = canonical_invariants({}, 0);
    CHECK(b.to_string() == "0");
    CHECK(is_torsion(b));

    AbelianInvariants c = canonical_invariants({3, 5}, 0);
    CHECK(c.torsion == std::vector<Int>{15});

    // modulus 0 counts toward the free rank, modulus 1 vanishes
    AbelianInvariants d = canonical_invariants({0, 1, 2}, 1);
    CHECK(d.free_rank == 2);
    CHECK(d.torsion == std::vector<Int>{2});
    CHECK(canonical_invariants({}, 2).to_string() == "Z^2");
}

TEST_CASE("determinant oracle sanity") {
    CHECK(oracles::bareiss_det(IntMatrix::identity(4)) == 1);
    CHECK(oracles::bareiss_det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(oracles::bareiss_det(IntMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(oracles::bareiss_det(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
}
