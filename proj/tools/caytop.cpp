// Command-line front end: group inspection, Cayley graph construction,
// chromatic numbers, discrete fundamental groups, neighborhood-complex
// homology, winding numbers, exhaustive verifications, and a resumable
// subset search.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
// 3 a budget expired before an answer, 4 internal invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "caytop/cayley.hpp"
#include "caytop/coloring.hpp"
#include "caytop/group.hpp"
#include "caytop/ncomplex.hpp"
#include "caytop/pi1.hpp"
#include "caytop/search.hpp"
#include "caytop/serialize.hpp"
#include "caytop/verify.hpp"
#include "caytop/walk.hpp"

namespace {

using namespace caytop;

struct Options {
    std::string group;
    std::string set;
    bool no_symmetrize = false;
    std::string scope = "whole";
    std::string format = "json";
    std::string out;
    unsigned jobs = 1;
    std::optional<std::uint64_t> seed;
    std::optional<long long> budget_ms;
    bool timings = false;

    std::string walk;
    std::string coloring;

    int m = 4;
    long long max_order = 16;
    std::vector<std::string> groups;
    long long from = 9;
    long long to = 15;
    int target = 3;
    std::string ledger;
    std::uint64_t batch = 1024;
    std::optional<std::uint64_t> max_masks;
};

void write_text(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.out);
    f << text;
}

// Assembles and emits one JSON report per invocation.
class Report {
  public:
    Report(const Options& o, const std::string& command)
        : o_(o), start_(std::chrono::steady_clock::now()) {
        j_ = make_report(command, nullptr);
        j_["seed"] = o.seed ? nlohmann::json(*o.seed) : nlohmann::json(nullptr);
    }

    nlohmann::json& top() { return j_; }

    void finish(nlohmann::json results) {
        j_["results"] = std::move(results);
        if (o_.timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            j_["timings"] = {{"total_ms", ms}};
        }
        write_text(o_, j_.dump(2) + "\n");
    }

  private:
    const Options& o_;
    std::chrono::steady_clock::time_point start_;
    nlohmann::json j_;
};

std::vector<std::string> split_nonblank(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        std::size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = cur.find_last_not_of(" \t");
        out.push_back(cur.substr(a, b - a + 1));
    }
    return out;
}

std::vector<GroupElement> parse_set_elems(const FgAbelianGroup& g, const std::string& raw) {
    std::vector<GroupElement> out;
    for (const std::string& chunk : split_nonblank(raw, ';')) {
        // over a one-coordinate group, "1,4" is a list of elements
        bool scalar_list = g.num_factors() == 1 && chunk.find('(') == std::string::npos &&
                           chunk.find(',') != std::string::npos;
        if (scalar_list)
            for (const std::string& part : split_nonblank(chunk, ','))
                out.push_back(g.parse_element(part));
        else
            out.push_back(g.parse_element(chunk));
    }
    return out;
}

SymmetricSet make_set(const FgAbelianGroup& g, const Options& o) {
    std::vector<GroupElement> elems = parse_set_elems(g, o.set);
    return o.no_symmetrize ? SymmetricSet::from_elements(g, elems)
                           : SymmetricSet::symmetrize(g, elems);
}

CayleyScope scope_of(const std::string& s) {
    return s == "component" ? CayleyScope::generated_subgroup : CayleyScope::whole_group;
}

nlohmann::json set_json(const SymmetricSet& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const GroupElement& e : s.elements()) a.push_back(element_to_string(e));
    return a;
}

std::vector<int> parse_int_list(const std::string& raw, const char* what) {
    std::vector<int> out;
    for (const std::string& part : split_nonblank(raw, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " entry: " + part);
        }
    }
    return out;
}

VerifyOptions verify_options(const Options& o) {
    VerifyOptions v;
    v.jobs = o.jobs;
    v.budget_ms = o.budget_ms;
    return v;
}

void run_group(const Options& o) {
    Report rep(o, "group");
    FgAbelianGroup g = FgAbelianGroup::parse(o.group);
    rep.top()["group"] = g.to_string();
    nlohmann::json moduli = nlohmann::json::array();
    for (const Int& n : g.torsion_moduli()) moduli.push_back(int_json(n));
    Int e = g.exponent();
    rep.finish({{"group", g.to_string()},
                {"num_factors", g.num_factors()},
                {"free_rank", g.free_rank()},
                {"torsion_moduli", moduli},
                {"is_finite", g.is_finite()},
                {"order", g.is_finite() ? int_json(g.order()) : nlohmann::json(nullptr)},
                {"exponent", e == 0 ? nlohmann::json(nullptr) : int_json(e)},
                {"invariants",
                 nlohmann::json(canonical_invariants(g.torsion_moduli(), g.free_rank()))}});
}

void run_cayley(const Options& o) {
    FgAbelianGroup g = FgAbelianGroup::parse(o.group);
    SymmetricSet s = make_set(g, o);
    CayleyGraph x = build_cayley(g, s, scope_of(o.scope));
    if (o.format == "dimacs") {
        write_text(o, to_dimacs(x.graph()));
        return;
    }
    Report rep(o, "cayley");
    rep.top()["group"] = g.to_string();
    rep.top()["set"] = set_json(s);
    rep.finish(cayley_json(x));
}

void run_chi(const Options& o, int& status) {
    FgAbelianGroup g = FgAbelianGroup::parse(o.group);
    SymmetricSet s = make_set(g, o);
    CayleyGraph x = build_cayley(g, s, scope_of(o.scope));
    Graph comp = identity_component(x);
    bool connected = is_connected(x.graph());
    std::optional<int> chi = chromatic_number(comp, deadline_after_ms(o.budget_ms));
    std::optional<Coloring> col;
    if (chi) {
        ColorDecision d = decide_k_colorable(comp, *chi);
        col = d.coloring;
    }
    if (o.format == "dimacs") {
        if (!chi) {
            status = 3;
            return;
        }
        write_text(o, col ? dimacs_coloring(*col) : std::string());
        return;
    }
    Report rep(o, "chi");
    rep.top()["group"] = g.to_string();
    rep.top()["set"] = set_json(s);
    rep.finish({{"chi", chi ? nlohmann::json(*chi) : nlohmann::json(nullptr)},
                {"connected", connected},
                {"scope_used", connected ? "whole_graph" : "identity_component"},
                {"coloring", col ? nlohmann::json(*col) : nlohmann::json(nullptr)}});
    if (!chi) status = 3;
}

void run_pi1(const Options& o) {
    Report rep(o, "pi1");
    FgAbelianGroup g = FgAbelianGroup::parse(o.group);
    SymmetricSet s = make_set(g, o);
    rep.top()["group"] = g.to_string();
    rep.top()["set"] = set_json(s);
    AbelianInvariants pi1 = pi1_invariants(s);
    EvenPi1Result even = pi1_even_invariants(s);
    rep.finish({{"pi1", pi1},
                {"pi1_torsion", is_torsion(pi1)},
                {"pi1_even", even.invariants},
                {"generates_group", even.generates_group},
                {"non_bipartite", even.non_bipartite},
                {"interpretation_valid", even.interpretation_valid}});
}

void run_h1(const Options& o) {
    Report rep(o, "h1");
    FgAbelianGroup g = FgAbelianGroup::parse(o.group);
    SymmetricSet s = make_set(g, o);
    CayleyGraph x = build_cayley(g, s, scope_of(o.scope));
    rep.top()["group"] = g.to_string();
    rep.top()["set"] = set_json(s);
    Complex2 nc = neighborhood_complex_2skeleton(x.graph());
    AbelianInvariants h1 = h1_invariants(nc);
    Chi4Certificate cert = chi4_certificate(x.graph());
    cert.pi1_torsion = is_torsion(pi1_invariants(s));
    if (cert.connected && cert.non_bipartite &&
        (cert.h1_torsion.value_or(false) || cert.pi1_torsion.value_or(false)))
        cert.implied_lower_bound = 4;
    rep.finish({{"complex", nc},
                {"h1", h1},
                {"h1_torsion", is_torsion(h1)},
                {"certificate", cert}});
}

void run_wind(const Options& o) {
    Report rep(o, "wind");
    FgAbelianGroup g = FgAbelianGroup::parse(o.group);
    SymmetricSet s = make_set(g, o);
    CayleyGraph x = build_cayley(g, s, scope_of(o.scope));
    rep.top()["group"] = g.to_string();
    rep.top()["set"] = set_json(s);
    Walk w(x.graph(), parse_int_list(o.walk, "walk"));
    std::vector<int> colors = parse_int_list(o.coloring, "coloring");
    if (colors.size() != x.graph().num_vertices())
        throw std::invalid_argument("coloring length does not match the vertex count");
    long long wind = winding_number(w, Coloring{3, colors});
    rep.finish({{"winding_number", wind}, {"walk_length", w.length()}});
}

void run_verify_payan(const Options& o, int& status) {
    Report rep(o, "verify payan");
    PayanResult r = verify_payan(o.m, verify_options(o));
    if (!r.ok()) status = 1;
    rep.finish(r);
}

void run_verify_exp4(const Options& o, int& status) {
    Report rep(o, "verify exp4");
    Exp4Result r = verify_exponent_dividing_4(o.max_order, verify_options(o));
    if (!r.ok()) status = 1;
    rep.finish(r);
}

void run_verify_lemma21(const Options& o, int& status) {
    Report rep(o, "verify lemma21");
    std::vector<std::string> specs = o.groups.empty() ? default_lemma21_specs() : o.groups;
    Lemma21Result r = verify_lemma21(specs, verify_options(o));
    if (!r.ok()) status = 1;
    rep.finish(r);
}

void run_verify_certs(const Options& o, int& status) {
    Report rep(o, "verify certs");
    CertificateSweepResult r = certificate_soundness_sweep(o.max_order, verify_options(o));
    if (!r.ok()) status = 1;
    rep.finish(r);
}

void run_example54(const Options& o, int& status) {
    Report rep(o, "example54");
    Section54Result r = example_section54(o.from, o.to, verify_options(o));
    if (!r.ok()) status = 1;
    rep.finish(r);
}

void run_search(const Options& o, int& status) {
    Report rep(o, "search");
    SearchOptions so;
    so.ledger_path = o.ledger;
    so.budget_ms = o.budget_ms;
    so.jobs = o.jobs;
    so.batch = o.batch;
    so.max_masks = o.max_masks;
    SearchResult r = search_binary(o.m, o.target, so);
    if (!r.complete) status = 3;
    rep.finish(r);
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    int status = 0;

    CLI::App app{"Cayley graphs over finitely generated abelian groups: chromatic numbers,"
                 " discrete fundamental groups, and neighborhood-complex homology"};
    app.require_subcommand(1);

    auto add_report_opts = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
        cmd->add_option("--seed", o.seed, "Seed echoed into the report");
        cmd->add_flag("--timings", o.timings, "Include wall-clock timings in the report");
    };
    auto add_group_set_opts = [&](CLI::App* cmd) {
        cmd->add_option("--group", o.group, "Group presentation, e.g. \"Z/8 x Z/2\" or \"Z^2\"")
            ->required();
        cmd->add_option("--set", o.set,
                        "Symmetric set: elements split on ';' (on ',' too for one-coordinate "
                        "groups), e.g. \"(1,0);(0,1)\" or \"1,4\"");
        cmd->add_flag("--no-symmetrize", o.no_symmetrize,
                      "Reject sets that are not already symmetric and identity-free");
    };
    auto add_scope_opt = [&](CLI::App* cmd) {
        cmd->add_option("--scope", o.scope, "whole = all of G, component = <S> only")
            ->check(CLI::IsMember({"whole", "component"}));
    };
    auto add_budget_opt = [&](CLI::App* cmd) {
        cmd->add_option("--budget-ms", o.budget_ms, "Wall-clock budget in milliseconds");
    };
    auto add_jobs_opt = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* c_group = app.add_subcommand("group", "Describe a group presentation");
    c_group->add_option("--group", o.group, "Group presentation")->required();
    add_report_opts(c_group);
    c_group->callback([&] { run_group(o); });

    CLI::App* c_cayley = app.add_subcommand("cayley", "Construct a Cayley graph");
    add_group_set_opts(c_cayley);
    add_scope_opt(c_cayley);
    c_cayley->add_option("--format", o.format, "json or dimacs")
        ->check(CLI::IsMember({"json", "dimacs"}));
    add_report_opts(c_cayley);
    c_cayley->callback([&] { run_cayley(o); });

    CLI::App* c_chi = app.add_subcommand(
        "chi", "Chromatic number (of the identity component when disconnected)");
    add_group_set_opts(c_chi);
    add_scope_opt(c_chi);
    c_chi->add_option("--format", o.format, "json, or dimacs for the coloring found")
        ->check(CLI::IsMember({"json", "dimacs"}));
    add_budget_opt(c_chi);
    add_report_opts(c_chi);
    c_chi->callback([&] { run_chi(o, status); });

    CLI::App* c_pi1 = app.add_subcommand("pi1", "Discrete fundamental group of Cay(<S>, S)");
    add_group_set_opts(c_pi1);
    add_report_opts(c_pi1);
    c_pi1->callback([&] { run_pi1(o); });

    CLI::App* c_h1 = app.add_subcommand(
        "h1", "Neighborhood-complex homology and the chromatic lower-bound certificate");
    add_group_set_opts(c_h1);
    add_scope_opt(c_h1);
    add_report_opts(c_h1);
    c_h1->callback([&] { run_h1(o); });

    CLI::App* c_wind = app.add_subcommand("wind", "Winding number of a closed walk");
    add_group_set_opts(c_wind);
    add_scope_opt(c_wind);
    c_wind->add_option("--walk", o.walk, "Closed walk as vertex indices, e.g. \"0,1,2,0\"")
        ->required();
    c_wind->add_option("--coloring", o.coloring, "Proper 3-coloring, one color per vertex")
        ->required();
    add_report_opts(c_wind);
    c_wind->callback([&] { run_wind(o); });

    CLI::App* c_verify = app.add_subcommand("verify", "Exhaustive desk-scale verifications");
    c_verify->require_subcommand(1);

    CLI::App* v_payan = c_verify->add_subcommand(
        "payan", "No Cayley graph over (Z/2)^m is 3-chromatic");
    v_payan->add_option("--m", o.m, "Rank of the elementary abelian 2-group (at most 4)");
    add_jobs_opt(v_payan);
    add_budget_opt(v_payan);
    add_report_opts(v_payan);
    v_payan->callback([&] { run_verify_payan(o, status); });

    CLI::App* v_exp4 = c_verify->add_subcommand(
        "exp4", "Exponent-dividing-4 sweep: chromatic, fundamental group, containment");
    v_exp4->add_option("--max-order,--order", o.max_order, "Largest group order to sweep");
    add_jobs_opt(v_exp4);
    add_budget_opt(v_exp4);
    add_report_opts(v_exp4);
    v_exp4->callback([&] { run_verify_exp4(o, status); });

    CLI::App* v_lemma21 = c_verify->add_subcommand(
        "lemma21", "3-chromatic generating-set constructions on sample groups");
    v_lemma21->add_option("--groups", o.groups, "Group presentations (default: built-in list)");
    add_jobs_opt(v_lemma21);
    add_budget_opt(v_lemma21);
    add_report_opts(v_lemma21);
    v_lemma21->callback([&] { run_verify_lemma21(o, status); });

    CLI::App* v_certs = c_verify->add_subcommand(
        "certs", "Certificate soundness sweep over all small abelian groups");
    v_certs->add_option("--max-order,--order", o.max_order, "Largest group order to sweep");
    add_jobs_opt(v_certs);
    add_budget_opt(v_certs);
    add_report_opts(v_certs);
    v_certs->callback([&] { run_verify_certs(o, status); });

    CLI::App* c_ex54 = app.add_subcommand(
        "example54", "Distance-1-or-2 circulant family Cay(Z/n, {±1, ±2})");
    c_ex54->add_option("--from", o.from, "Smallest n (at least 9)");
    c_ex54->add_option("--to", o.to, "Largest n");
    add_jobs_opt(c_ex54);
    add_budget_opt(c_ex54);
    add_report_opts(c_ex54);
    c_ex54->callback([&] { run_example54(o, status); });

    CLI::App* c_search = app.add_subcommand(
        "search", "Resumable scan of symmetric subsets of (Z/2)^m by chromatic number");
    c_search->add_option("--m", o.m, "Rank (1 to 6)")->required();
    c_search->add_option("--target", o.target, "Chromatic number to search for");
    c_search->add_option("--ledger", o.ledger, "Newline-delimited JSON ledger to append/resume");
    c_search->add_option("--batch", o.batch, "Canonical masks per ledger flush");
    c_search->add_option("--max-masks", o.max_masks, "Stop after scanning this many masks");
    add_jobs_opt(c_search);
    add_budget_opt(c_search);
    add_report_opts(c_search);
    c_search->callback([&] { run_search(o, status); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const budget_exhausted_error& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}
