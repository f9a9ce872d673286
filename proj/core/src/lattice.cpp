#include "caytop/lattice.hpp"

#include <algorithm>
#include <utility>

namespace caytop {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> data) {
    IntMatrix m(data.size(), data.size() ? data.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : data) {
        if (row.size() != m.cols) throw std::invalid_argument("ragged row list");
        std::size_t j = 0;
        for (long long e : row) m.at(i, j++) = e;
        ++i;
    }
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < rows; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::column_slice(std::size_t first, std::size_t last) const {
    IntMatrix m(rows, last - first);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = first; j < last; ++j) m.at(i, j - first) = at(i, j);
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& e : entries)
        if (e != 0) return false;
    return true;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in multiply");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

std::vector<Int> apply_matrix(const IntMatrix& a, const std::vector<Int>& x) {
    if (x.size() != a.cols) throw std::invalid_argument("vector length mismatch in apply");
    std::vector<Int> y(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0 && x[j] != 0) y[i] += a.at(i, j) * x[j];
    return y;
}

std::vector<Int> scale(const Int& k, const std::vector<Int>& x) {
    std::vector<Int> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = k * x[i];
    return y;
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row dst += q * row src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < m.cols; ++j)
        if (m.at(src, j) != 0) m.at(dst, j) += q * m.at(src, j);
}

// col dst += q * col src
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < m.rows; ++i)
        if (m.at(i, src) != 0) m.at(i, dst) += q * m.at(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

// Diagonalization engine. Row operations are mirrored on *u, column
// operations on *v; either may be null. Pivot selection: smallest nonzero
// absolute value, ties broken by lowest (row, col), which makes the whole
// computation deterministic.
void snf_engine(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
    const std::size_t m = d.rows, n = d.cols;
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (d.at(i, j) == 0) continue;
                    Int e = abs(d.at(i, j));
                    if (!found || e < best) {
                        best = e;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) return; // remaining block is zero -> trailing zero diagonal
            if (pi != t) {
                swap_rows(d, t, pi);
                if (u) swap_rows(*u, t, pi);
            }
            if (pj != t) {
                swap_cols(d, t, pj);
                if (v) swap_cols(*v, t, pj);
            }

            bool dirty = false;
            const Int p = d.at(t, t);
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / p;
                if (q != 0) {
                    add_row(d, i, t, -q);
                    if (u) add_row(*u, i, t, -q);
                }
                if (d.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / p;
                if (q != 0) {
                    add_col(d, j, t, -q);
                    if (v) add_col(*v, j, t, -q);
                }
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue; // smaller pivot now available, restart step

            // Pivot divides its cleared row and column; force it to divide the
            // whole remaining block so the diagonal forms a divisibility chain.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (d.at(i, j) % p != 0) {
                        add_row(d, t, i, 1);
                        if (u) add_row(*u, t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            if (u) negate_row(*u, t);
        }
    }
}

void negate_col(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, c) = -m.at(i, c);
}

} // namespace

SmithForm smith_normal_form(IntMatrix a) {
    SmithForm f{IntMatrix::identity(a.rows), std::move(a), IntMatrix()};
    f.v = IntMatrix::identity(f.d.cols);
    snf_engine(f.d, &f.u, &f.v);
    return f;
}

std::vector<Int> smith_diagonal(IntMatrix a) {
    snf_engine(a, nullptr, nullptr);
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(a.rows, a.cols); ++i) out.push_back(a.at(i, i));
    return out;
}

std::size_t matrix_rank(IntMatrix a) {
    return hnf_columns(std::move(a)).cols;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
    if (u.rows != u.cols) throw std::invalid_argument("matrix is not square");
    SmithForm f = smith_normal_form(u);
    if (f.d != IntMatrix::identity(u.rows))
        throw std::invalid_argument("matrix is not unimodular");
    // d = f.u * u * f.v = I, so u^-1 = f.v * f.u.
    return multiply(f.v, f.u);
}

IntMatrix hnf_columns(IntMatrix b) {
    const std::size_t m = b.rows, n = b.cols;
    std::size_t r = 0; // next pivot column slot
    for (std::size_t i = 0; i < m && r < n; ++i) {
        bool have_pivot = false;
        for (;;) {
            std::size_t jbest = n;
            Int best;
            for (std::size_t j = r; j < n; ++j) {
                if (b.at(i, j) == 0) continue;
                Int e = abs(b.at(i, j));
                if (jbest == n || e < best) {
                    best = e;
                    jbest = j;
                }
            }
            if (jbest == n) break; // row i is zero on the active block
            have_pivot = true;
            if (jbest != r) swap_cols(b, r, jbest);
            bool again = false;
            for (std::size_t j = r + 1; j < n; ++j) {
                if (b.at(i, j) == 0) continue;
                Int q = b.at(i, j) / b.at(i, r);
                if (q != 0) add_col(b, j, r, -q);
                if (b.at(i, j) != 0) again = true;
            }
            if (!again) break;
        }
        if (!have_pivot) continue;
        if (b.at(i, r) < 0) negate_col(b, r);
        for (std::size_t j = 0; j < r; ++j) {
            // normalize earlier pivot columns: entry in this pivot row into [0, pivot)
            Int q = floor_div(b.at(i, j), b.at(i, r));
            if (q != 0) add_col(b, j, r, -q);
        }
        ++r;
    }
    return b.column_slice(0, r);
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithForm f = smith_normal_form(a);
    std::size_t r = f.rank();
    return hnf_columns(f.v.column_slice(r, a.cols));
}

IntMatrix kernel_mod(const IntMatrix& a, const std::vector<Int>& row_moduli) {
    if (row_moduli.size() != a.rows)
        throw std::invalid_argument("one modulus per row required");
    for (const Int& n : row_moduli)
        if (n != 0 && n < 2) throw std::invalid_argument("modulus must be 0 (free) or >= 2");

    std::size_t extra = 0;
    for (const Int& n : row_moduli)
        if (n != 0) ++extra;

    IntMatrix aug(a.rows, a.cols + extra);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    std::size_t k = a.cols;
    for (std::size_t i = 0; i < a.rows; ++i)
        if (row_moduli[i] != 0) aug.at(i, k++) = row_moduli[i];

    IntMatrix ker = kernel_basis(aug);
    IntMatrix proj(a.cols, ker.cols);
    for (std::size_t i = 0; i < a.cols; ++i)
        for (std::size_t j = 0; j < ker.cols; ++j) proj.at(i, j) = ker.at(i, j);
    return hnf_columns(proj);
}

namespace {

// Solve d * y = w given the Smith pieces; w has length d.rows.
std::optional<std::vector<Int>> solve_diagonal(const IntMatrix& d, const std::vector<Int>& w) {
    std::vector<Int> y(d.cols);
    const std::size_t k = std::min(d.rows, d.cols);
    for (std::size_t i = 0; i < d.rows; ++i) {
        if (i < k && d.at(i, i) != 0) {
            if (w[i] % d.at(i, i) != 0) return std::nullopt;
            y[i] = w[i] / d.at(i, i);
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return y;
}

} // namespace

std::optional<std::vector<Int>> solve_columns(const IntMatrix& m, const std::vector<Int>& target) {
    if (target.size() != m.rows) throw std::invalid_argument("target length mismatch");
    SmithForm f = smith_normal_form(m);
    auto y = solve_diagonal(f.d, apply_matrix(f.u, target));
    if (!y) return std::nullopt;
    return apply_matrix(f.v, *y);
}

LatticeMembership::LatticeMembership(const IntMatrix& gens)
    : f_(smith_normal_form(hnf_columns(gens))), ambient_(gens.rows) {}

bool LatticeMembership::contains(const std::vector<Int>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
    return solve_diagonal(f_.d, apply_matrix(f_.u, v)).has_value();
}

bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& v) {
    return LatticeMembership(gens).contains(v);
}

std::string AbelianInvariants::to_string() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const Int& d : torsion) {
        if (!out.empty()) out += " x ";
        out += "Z/" + d.str();
    }
    return out;
}

AbelianInvariants quotient_invariants(const IntMatrix& r_basis, const IntMatrix& h_gens) {
    if (r_basis.cols == 0) {
        if (!h_gens.is_zero())
            throw internal_error("quotient_invariants: generator outside the trivial lattice");
        return {};
    }
    if (h_gens.cols > 0 && h_gens.rows != r_basis.rows)
        throw std::invalid_argument("ambient dimension mismatch");

    SmithForm f = smith_normal_form(r_basis);
    if (f.rank() != r_basis.cols)
        throw std::invalid_argument("r_basis columns are not independent");

    // Express each generator in r_basis coordinates: solve r_basis * c = h.
    IntMatrix w = h_gens.cols > 0 ? multiply(f.u, h_gens) : IntMatrix(r_basis.rows, 0);
    IntMatrix cprime(r_basis.cols, h_gens.cols);
    for (std::size_t j = 0; j < w.cols; ++j) {
        auto y = solve_diagonal(f.d, w.column(j));
        if (!y) throw internal_error("quotient_invariants: generator outside the lattice span");
        cprime.set_column(j, *y);
    }
    IntMatrix coeff = multiply(f.v, cprime);

    std::vector<Int> diag = smith_diagonal(std::move(coeff));
    std::size_t rank_h = 0;
    AbelianInvariants inv;
    for (const Int& d : diag) {
        if (d != 0) ++rank_h;
        if (d > 1) inv.torsion.push_back(d);
    }
    inv.free_rank = r_basis.cols - rank_h;
    return inv;
}

AbelianInvariants canonical_invariants(const std::vector<Int>& moduli, std::size_t free_rank) {
    std::vector<Int> nonzero;
    for (const Int& n : moduli) {
        if (n == 0) {
            ++free_rank;
            continue;
        }
        if (n < 0) throw std::invalid_argument("negative modulus");
        nonzero.push_back(n);
    }
    AbelianInvariants inv;
    inv.free_rank = free_rank;
    for (const Int& d : smith_diagonal(IntMatrix::diagonal(nonzero)))
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

} // namespace caytop
