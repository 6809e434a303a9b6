#pragma once

// Text and JSON forms of symmetric functions, class expansions and reports;
// the graph constructor language; the built-in corpus.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "csfkit/graphs.hpp"
#include "csfkit/ncsym.hpp"
#include "csfkit/series.hpp"
#include "csfkit/symfunc.hpp"

namespace csfkit {

/// "e[2,1] + 3 e[3]": longer partitions first, ties in descending lex order.
std::string format(const SymF& f);
/// "m[1|2] - 1/2 m[12]" in canonical partition order.
std::string format(const NCSymF& f);
/// "1/3 ((3,1),1) + 2/3 ((4),4)" in key order.
std::string format(const ClassExpansion& c);

/// Terms of a SymF in print order.
std::vector<std::pair<IntPartition, Rational>> ordered_terms(const SymF& f);

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& num, const nlohmann::json& den);

nlohmann::json to_json(const SymF& f);
nlohmann::json to_json(const NCSymF& f);
nlohmann::json to_json(const ClassExpansion& c);
nlohmann::json to_json(const GfReport& r);
nlohmann::json to_json(const ReplayReport& r);
nlohmann::json to_json(const LabeledGraph& g);

SymF symf_from_json(const nlohmann::json& j);
NCSymF ncsymf_from_json(const nlohmann::json& j);
ClassExpansion classes_from_json(const nlohmann::json& j);
LabeledGraph graph_from_json(const nlohmann::json& j);

/// "path:6", "cycle:5", "tadpole:5,2", "ltadpole:4,2", "cc:4,3", "ccm3:4",
/// "complete:4", "claw", "diamond", or the path of a JSON file
/// {"d": n, "edges": [[i, j], ...]}.
LabeledGraph parse_graph(std::string_view spec);

struct CorpusEntry {
  std::string name;  // in the constructor language
  LabeledGraph graph;
};

/// Paths, cycles, tadpoles, line graphs of tadpoles, cycle-chord graphs,
/// relabeled cycle-chord graphs, claw and diamond with at most max_d vertices,
/// in a fixed order.
std::vector<CorpusEntry> corpus(int max_d = 8);

}  // namespace csfkit
