#include "caytop/ncomplex.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "caytop/pi1.hpp"

namespace caytop {

Complex2 neighborhood_complex_2skeleton(const Graph& g) {
    std::set<int> vs;
    std::set<std::array<int, 2>> es;
    std::set<std::array<int, 3>> ts;
    int n = static_cast<int>(g.num_vertices());
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v); // ascending
        for (std::size_t a = 0; a < nb.size(); ++a) {
            vs.insert(nb[a]);
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                es.insert({nb[a], nb[b]});
                for (std::size_t c = b + 1; c < nb.size(); ++c)
                    ts.insert({nb[a], nb[b], nb[c]});
            }
        }
    }
    Complex2 out;
    out.vertices.assign(vs.begin(), vs.end());
    out.edges.assign(es.begin(), es.end());
    out.triangles.assign(ts.begin(), ts.end());
    return out;
}

namespace {

std::size_t vertex_row(const Complex2& c, int v) {
    auto it = std::lower_bound(c.vertices.begin(), c.vertices.end(), v);
    if (it == c.vertices.end() || *it != v) throw internal_error("face vertex missing");
    return static_cast<std::size_t>(it - c.vertices.begin());
}

std::size_t edge_row(const Complex2& c, int u, int v) {
    std::array<int, 2> key{u, v};
    auto it = std::lower_bound(c.edges.begin(), c.edges.end(), key);
    if (it == c.edges.end() || *it != key) throw internal_error("triangle edge missing");
    return static_cast<std::size_t>(it - c.edges.begin());
}

} // namespace

IntMatrix boundary1(const Complex2& c) {
    IntMatrix m(c.vertices.size(), c.edges.size());
    for (std::size_t j = 0; j < c.edges.size(); ++j) {
        m.at(vertex_row(c, c.edges[j][0]), j) = -1;
        m.at(vertex_row(c, c.edges[j][1]), j) = 1;
    }
    return m;
}

IntMatrix boundary2(const Complex2& c) {
    IntMatrix m(c.edges.size(), c.triangles.size());
    for (std::size_t j = 0; j < c.triangles.size(); ++j) {
        const auto& [a, b, cc] = c.triangles[j];
        m.at(edge_row(c, b, cc), j) = 1;
        m.at(edge_row(c, a, cc), j) = -1;
        m.at(edge_row(c, a, b), j) = 1;
    }
    return m;
}

AbelianInvariants h1_invariants(const Complex2& c) {
    return quotient_invariants(kernel_basis(boundary1(c)), boundary2(c));
}

AbelianInvariants h1_invariants(const Graph& g) {
    return h1_invariants(neighborhood_complex_2skeleton(g));
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (b %= p; e != 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

// Row-echelon rank over F_p; p must be prime and below 2^31.
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> m(a.rows, std::vector<std::uint64_t>(a.cols));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            Int v = a.at(i, j) % Int(p);
            if (v < 0) v += Int(p);
            m[i][j] = v.convert_to<std::uint64_t>();
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
        std::size_t piv = rank;
        while (piv < a.rows && m[piv][col] == 0) ++piv;
        if (piv == a.rows) continue;
        std::swap(m[piv], m[rank]);
        std::uint64_t inv = pow_mod(m[rank][col], p - 2, p);
        for (std::size_t i = rank + 1; i < a.rows; ++i) {
            if (m[i][col] == 0) continue;
            std::uint64_t f = m[i][col] * inv % p;
            for (std::size_t j = col; j < a.cols; ++j)
                m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace

bool h1_is_torsion(const Complex2& c) {
    Graph sk(c.vertices.size());
    for (const auto& e : c.edges)
        sk.add_edge(static_cast<int>(vertex_row(c, e[0])), static_cast<int>(vertex_row(c, e[1])));
    long long nullity = static_cast<long long>(c.edges.size()) -
                        static_cast<long long>(c.vertices.size()) +
                        static_cast<long long>(components(sk).size());
    if (nullity == 0) return true; // the cycle lattice itself is trivial
    IntMatrix b2 = boundary2(c);
    // A full-nullity rank already over F_p certifies full rank over Z (some
    // maximal minor is nonzero mod p), hence finite quotient.
    if (rank_mod_p(b2, 2147483629ULL) == static_cast<std::size_t>(nullity)) return true;
    return matrix_rank(b2) == static_cast<std::size_t>(nullity);
}

namespace {

void imply_bound(Chi4Certificate& cert) {
    if (cert.connected && cert.non_bipartite &&
        (cert.h1_torsion.value_or(false) || cert.pi1_torsion.value_or(false)))
        cert.implied_lower_bound = 4;
}

} // namespace

Chi4Certificate chi4_certificate(const Graph& g) {
    Chi4Certificate cert;
    cert.connected = is_connected(g);
    cert.non_bipartite = !is_bipartite(g);
    cert.h1_torsion = h1_is_torsion(neighborhood_complex_2skeleton(g));
    imply_bound(cert);
    return cert;
}

Chi4Certificate chi4_certificate(const CayleyGraph& x, bool with_h1) {
    Graph comp = identity_component(x);
    Chi4Certificate cert;
    cert.connected = true; // stated for the identity component
    cert.non_bipartite = !is_bipartite(comp);
    cert.pi1_torsion = is_torsion(pi1_invariants(x));
    if (with_h1) cert.h1_torsion = h1_is_torsion(neighborhood_complex_2skeleton(comp));
    imply_bound(cert);
    return cert;
}

} // namespace caytop
