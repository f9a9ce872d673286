#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "caytop/cayley.hpp"
#include "caytop/coloring.hpp"
#include "caytop/lattice.hpp"
#include "caytop/ncomplex.hpp"
#include "caytop/search.hpp"
#include "caytop/verify.hpp"

namespace caytop {

inline constexpr const char* tool_version = "caytop 0.1.0";

// Int as a JSON number when it fits 64 bits, else as a decimal string.
nlohmann::json int_json(const Int& v);

void to_json(nlohmann::json& j, const AbelianInvariants& inv);
void to_json(nlohmann::json& j, const Coloring& c);
void to_json(nlohmann::json& j, const Chi4Certificate& cert);
void to_json(nlohmann::json& j, const Complex2& c); // face counts only
void to_json(nlohmann::json& j, const PayanResult& r);
void to_json(nlohmann::json& j, const Exp4Result& r);
void to_json(nlohmann::json& j, const Lemma21Case& c);
void to_json(nlohmann::json& j, const Lemma21Result& r);
void to_json(nlohmann::json& j, const Section54Case& c);
void to_json(nlohmann::json& j, const Section54Result& r);
void to_json(nlohmann::json& j, const CertificateSweepResult& r);
void to_json(nlohmann::json& j, const SearchResult& r);

nlohmann::json graph_json(const Graph& g);
nlohmann::json cayley_json(const CayleyGraph& x);

// "v <vertex> <color>" lines, vertices 1-based, colors 0-based.
std::string dimacs_coloring(const Coloring& c);

// Report skeleton shared by every subcommand: command echo, tool version,
// results payload, and a timings slot that stays null unless filled in.
nlohmann::json make_report(const std::string& command, nlohmann::json results);

} // namespace caytop
