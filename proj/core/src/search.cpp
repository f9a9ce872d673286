#include "caytop/search.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "caytop/cayley.hpp"
#include "caytop/coloring.hpp"
#include "caytop/parallel.hpp"

namespace caytop {

namespace {

// For each coordinate permutation, the induced remap of element codes.
std::vector<std::vector<std::uint64_t>> code_maps(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint64_t>> maps;
    do {
        std::vector<std::uint64_t> map(std::uint64_t{1} << m);
        for (std::uint64_t code = 1; code < map.size(); ++code) {
            std::uint64_t img = 0;
            for (int b = 0; b < m; ++b)
                if (code >> b & 1) img |= std::uint64_t{1} << perm[static_cast<std::size_t>(b)];
            map[code] = img;
        }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

std::uint64_t remap_mask(std::uint64_t mask, const std::vector<std::uint64_t>& map, int bits) {
    std::uint64_t out = 0;
    for (int e = 1; e <= bits; ++e)
        if (mask >> (e - 1) & 1) out |= std::uint64_t{1} << (map[static_cast<std::size_t>(e)] - 1);
    return out;
}

std::uint64_t canonical_sig(std::uint64_t mask,
                            const std::vector<std::vector<std::uint64_t>>& maps, int bits) {
    std::uint64_t best = mask;
    for (const auto& map : maps) best = std::min(best, remap_mask(mask, map, bits));
    return best;
}

struct LedgerState {
    std::vector<LedgerEntry> entries;
    std::uint64_t resume_from = 0;
};

[[noreturn]] void corrupt(std::size_t lineno, const std::string& what) {
    throw internal_error("corrupt search ledger, line " + std::to_string(lineno) + ": " + what);
}

LedgerState load_ledger(const std::string& path, int m) {
    LedgerState st;
    std::ifstream in(path);
    if (!in) return st; // missing file starts a fresh search
    std::uint64_t mask_space = std::uint64_t{1} << ((1 << m) - 1);
    std::string line;
    std::size_t lineno = 0;
    bool have_prev = false;
    std::uint64_t prev_sig = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) corrupt(lineno, "not a JSON object");
        try {
            if (j.contains("cursor")) {
                if (j.at("m").get<int>() != m) corrupt(lineno, "cursor for a different m");
                std::uint64_t c = j.at("cursor").get<std::uint64_t>();
                st.resume_from = std::max(st.resume_from, c + 1);
                continue;
            }
            LedgerEntry e;
            e.sig = j.at("sig").get<std::uint64_t>();
            e.m = j.at("m").get<int>();
            if (e.m != m) corrupt(lineno, "entry for a different m");
            if (e.sig >= mask_space) corrupt(lineno, "sig outside the mask space");
            if (!j.at("chi").is_null()) e.chi = j.at("chi").get<int>();
            if (j.contains("budget_ms") && !j.at("budget_ms").is_null())
                e.budget_ms = j.at("budget_ms").get<long long>();
            if (have_prev && e.sig <= prev_sig) corrupt(lineno, "sigs not strictly increasing");
            prev_sig = e.sig;
            have_prev = true;
            st.resume_from = std::max(st.resume_from, e.sig + 1);
            st.entries.push_back(std::move(e));
        } catch (const nlohmann::json::exception& ex) {
            corrupt(lineno, ex.what());
        }
    }
    return st;
}

nlohmann::json entry_json(const LedgerEntry& e) {
    nlohmann::json j;
    j["sig"] = e.sig;
    j["m"] = e.m;
    j["chi"] = e.chi ? nlohmann::json(*e.chi) : nlohmann::json(nullptr);
    j["budget_ms"] = e.budget_ms ? nlohmann::json(*e.budget_ms) : nlohmann::json(nullptr);
    return j;
}

} // namespace

SearchResult search_binary(int m, int target_chi, const SearchOptions& opt) {
    if (m < 1 || m > 6) throw std::invalid_argument("search supports 1 <= m <= 6");
    int bits = (1 << m) - 1;

    SearchResult res;
    res.m = m;
    res.target = target_chi;
    res.mask_space = std::uint64_t{1} << bits;

    auto maps = code_maps(m);
    FgAbelianGroup g{std::vector<Int>(static_cast<std::size_t>(m), 2)};
    auto subset_for = [&](std::uint64_t mask) {
        std::vector<GroupElement> elems;
        for (int e = 1; e <= bits; ++e) {
            if (!(mask >> (e - 1) & 1)) continue;
            GroupElement el(static_cast<std::size_t>(m));
            for (int b = 0; b < m; ++b) el[static_cast<std::size_t>(b)] = (e >> b) & 1;
            elems.push_back(std::move(el));
        }
        return elems;
    };
    auto chi_of = [&](std::uint64_t mask, Deadline dl) {
        auto s = SymmetricSet::symmetrize(g, subset_for(mask));
        return chromatic_number(identity_component(build_cayley(g, s, CayleyScope::whole_group)),
                                dl);
    };

    LedgerState st = opt.ledger_path.empty() ? LedgerState{} : load_ledger(opt.ledger_path, m);
    res.resumed_from = st.resume_from;
    std::vector<LedgerEntry> all = std::move(st.entries);

    std::ofstream out;
    if (!opt.ledger_path.empty()) {
        out.open(opt.ledger_path, std::ios::app);
        if (!out) throw std::runtime_error("cannot open ledger for appending: " + opt.ledger_path);
    }

    std::uint64_t pos = std::min(res.resumed_from, res.mask_space);
    std::uint64_t remaining = res.mask_space - pos;
    std::uint64_t take = opt.max_masks ? std::min(*opt.max_masks, remaining) : remaining;
    std::uint64_t stop = pos + take;
    std::uint64_t batch_size = std::max<std::uint64_t>(1, opt.batch);

    while (pos < stop) {
        std::vector<std::uint64_t> batch;
        while (pos < stop && batch.size() < batch_size) {
            if (canonical_sig(pos, maps, bits) == pos) batch.push_back(pos);
            ++pos;
        }
        std::vector<std::optional<int>> chi(batch.size());
        parallel_for(0, batch.size(), opt.jobs, [&](std::size_t i) {
            chi[i] = chi_of(batch[i], deadline_after_ms(opt.budget_ms));
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            LedgerEntry e{batch[i], m, chi[i], opt.budget_ms};
            if (out) out << entry_json(e).dump() << '\n';
            all.push_back(std::move(e));
        }
        if (out) {
            nlohmann::json cur;
            cur["cursor"] = pos - 1;
            cur["m"] = m;
            out << cur.dump() << '\n' << std::flush;
        }
        res.canonical_examined += batch.size();
    }
    res.scanned_to = pos;

    for (const LedgerEntry& e : all) {
        if (!e.chi)
            ++res.undecided;
        else if (*e.chi == target_chi)
            res.hits.push_back(e.sig);
    }
    for (std::uint64_t sig : res.hits) {
        auto confirmed = chi_of(sig, std::nullopt);
        if (!confirmed || *confirmed != target_chi)
            throw internal_error("ledger hit failed re-verification");
    }
    res.complete = res.scanned_to == res.mask_space && res.undecided == 0;
    return res;
}

} // namespace caytop
