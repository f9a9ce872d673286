#include "caytop/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace caytop {

FgAbelianGroup::FgAbelianGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
    for (const Int& n : factors_)
        if (n != 0 && n < 2)
            throw std::invalid_argument("cyclic factor modulus must be 0 (infinite) or >= 2");
}

namespace {

Int parse_number(const std::string& s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string("missing ") + what);
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument(std::string("bad ") + what + ": " + s);
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument(std::string("bad ") + what + ": " + s);
    return Int(s);
}

std::size_t parse_exponent(const std::string& s) {
    Int e = parse_number(s, "exponent");
    if (e < 1) throw std::invalid_argument("exponent must be >= 1, got " + e.str());
    if (e > 4096) throw std::invalid_argument("exponent too large: " + e.str());
    return e.convert_to<std::size_t>();
}

Int parse_modulus(const std::string& s) {
    Int n = parse_number(s, "modulus");
    if (n < 2) throw std::invalid_argument("modulus must be >= 2, got " + n.str());
    return n;
}

void parse_term(const std::string& term, std::vector<Int>& out) {
    if (term.empty()) throw std::invalid_argument("empty factor in group spec");
    if (term == "Z") {
        out.push_back(0);
        return;
    }
    if (term.rfind("Z^", 0) == 0) {
        std::size_t r = parse_exponent(term.substr(2));
        out.insert(out.end(), r, Int(0));
        return;
    }
    if (term.rfind("Z/", 0) == 0) {
        out.push_back(parse_modulus(term.substr(2)));
        return;
    }
    if (term.size() > 1 && term[0] == '(') {
        std::size_t close = term.find(')');
        if (close == std::string::npos || close + 1 >= term.size() || term[close + 1] != '^')
            throw std::invalid_argument("bad group term: " + term);
        std::string inner = term.substr(1, close - 1);
        if (inner.rfind("Z/", 0) != 0) throw std::invalid_argument("bad group term: " + term);
        Int n = parse_modulus(inner.substr(2));
        std::size_t k = parse_exponent(term.substr(close + 2));
        out.insert(out.end(), k, n);
        return;
    }
    throw std::invalid_argument("bad group term: " + term);
}

} // namespace

FgAbelianGroup FgAbelianGroup::parse(const std::string& spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty group spec");

    std::vector<Int> factors;
    std::size_t start = 0;
    while (true) {
        std::size_t x = s.find('x', start);
        parse_term(s.substr(start, x - start), factors);
        if (x == std::string::npos) break;
        start = x + 1;
    }
    return FgAbelianGroup(std::move(factors));
}

std::size_t FgAbelianGroup::free_rank() const {
    return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Int(0)));
}

std::vector<Int> FgAbelianGroup::torsion_moduli() const {
    std::vector<Int> out;
    for (const Int& n : factors_)
        if (n != 0) out.push_back(n);
    return out;
}

Int FgAbelianGroup::order() const {
    if (!is_finite()) return 0;
    Int o = 1;
    for (const Int& n : factors_) o *= n;
    return o;
}

Int FgAbelianGroup::exponent() const {
    if (!is_finite()) return 0;
    Int e = 1;
    for (const Int& n : factors_) e = lcm(e, n);
    return e;
}

std::string FgAbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::string out;
    for (const Int& n : factors_) {
        if (!out.empty()) out += " x ";
        out += n == 0 ? "Z" : "Z/" + n.str();
    }
    return out;
}

GroupElement FgAbelianGroup::basis_element(std::size_t i) const {
    GroupElement e = zero();
    e.at(i) = 1;
    return reduce(std::move(e));
}

void FgAbelianGroup::check_dim(const GroupElement& a) const {
    if (a.size() != factors_.size())
        throw std::invalid_argument("element has " + std::to_string(a.size()) +
                                    " coordinates, group has " + std::to_string(factors_.size()));
}

GroupElement FgAbelianGroup::reduce(GroupElement a) const {
    check_dim(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (factors_[i] != 0) a[i] = pos_mod(a[i], factors_[i]);
    return a;
}

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_dim(a);
    check_dim(b);
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return reduce(std::move(c));
}

GroupElement FgAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

GroupElement FgAbelianGroup::neg(const GroupElement& a) const {
    check_dim(a);
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return reduce(std::move(c));
}

GroupElement FgAbelianGroup::scalar_mul(const Int& k, const GroupElement& a) const {
    check_dim(a);
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
    return reduce(std::move(c));
}

bool FgAbelianGroup::is_identity(const GroupElement& a) const {
    for (const Int& x : reduce(a))
        if (x != 0) return false;
    return true;
}

Int FgAbelianGroup::order_of(const GroupElement& a) const {
    GroupElement r = reduce(a);
    Int m = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (factors_[i] == 0) {
            if (r[i] != 0) return 0;
            continue;
        }
        if (r[i] != 0) m = lcm(m, factors_[i] / gcd(r[i], factors_[i]));
    }
    return m;
}

std::vector<GroupElement> FgAbelianGroup::enumerate_elements() const {
    if (!is_finite()) throw std::domain_error("cannot enumerate an infinite group");
    std::vector<GroupElement> out;
    GroupElement cur = zero();
    for (;;) {
        out.push_back(cur);
        // odometer increment, last coordinate fastest => lexicographic order
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (++cur[i] < factors_[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (cur.size() == 0) return out; // trivial group: single element
    }
}

GroupElement FgAbelianGroup::parse_element(const std::string& text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);

    GroupElement e;
    std::size_t start = 0;
    if (!s.empty()) {
        while (true) {
            std::size_t comma = s.find(',', start);
            e.push_back(parse_number(s.substr(start, comma - start), "coordinate"));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return reduce(std::move(e));
}

std::string element_to_string(const GroupElement& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += a[i].str();
    }
    return out + ")";
}

GroupElement SubgroupDecomposition::embed(const FgAbelianGroup& ambient, const GroupElement& coords) const {
    if (coords.size() != subgroup.num_factors())
        throw std::invalid_argument("coordinate count does not match the subgroup presentation");
    GroupElement out = ambient.zero();
    for (std::size_t i = 0; i < coords.size(); ++i)
        out = ambient.add(out, ambient.scalar_mul(coords[i], factor_generators[i]));
    return out;
}

SubgroupDecomposition subgroup_generated(const FgAbelianGroup& g, const std::vector<GroupElement>& gens) {
    const std::size_t k = gens.size();
    IntMatrix a(g.num_factors(), k);
    for (std::size_t j = 0; j < k; ++j) a.set_column(j, g.reduce(gens[j]));

    // <gens> = Z^k / K where K is the lattice of exponent vectors mapping to 0.
    IntMatrix kernel = kernel_mod(a, g.factors());
    SmithForm f = smith_normal_form(kernel);
    const std::size_t r = kernel.cols; // kernel basis has full column rank
    IntMatrix uinv = inverse_unimodular(f.u);

    // In coordinates y = f.u * x the kernel becomes diag(d_1..d_r), so the
    // quotient is (+) Z/d_i x Z^(k-r); factor i is generated by column i of
    // f.u^-1 pushed through the generator map.
    auto push = [&](std::size_t col) {
        GroupElement e = g.zero();
        for (std::size_t j = 0; j < k; ++j)
            e = g.add(e, g.scalar_mul(uinv.at(j, col), gens[j]));
        return e;
    };

    SubgroupDecomposition out;
    std::vector<Int> factors;
    for (std::size_t i = r; i < k; ++i) { // free part first
        factors.push_back(0);
        out.factor_generators.push_back(push(i));
    }
    for (std::size_t i = 0; i < r; ++i) {
        const Int& d = f.d.at(i, i);
        if (d == 0) throw internal_error("kernel basis column maps to a zero invariant");
        if (d == 1) continue; // trivial factor
        factors.push_back(d);
        out.factor_generators.push_back(push(i));
    }
    out.subgroup = FgAbelianGroup(std::move(factors));
    return out;
}

std::vector<GroupElement> closure_elements(const FgAbelianGroup& g, const std::vector<GroupElement>& gens) {
    for (const GroupElement& s : gens)
        if (g.order_of(s) == 0) throw std::domain_error("generated subgroup is infinite");

    std::vector<GroupElement> order;
    std::map<GroupElement, int> seen;
    order.push_back(g.zero());
    seen.emplace(order[0], 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        GroupElement v = order[head]; // copy: order re-allocates while we append
        for (const GroupElement& s : gens) {
            GroupElement w = g.add(v, g.reduce(s));
            if (seen.emplace(w, static_cast<int>(order.size())).second) order.push_back(std::move(w));
        }
    }
    return order;
}

} // namespace caytop
