#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "csfkit/errors.hpp"
#include "csfkit/io.hpp"
#include "csfkit/ncsym.hpp"
#include "csfkit/series.hpp"
#include "csfkit/symfunc.hpp"
#include "verify.hpp"

namespace csfkit::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string basis;
  bool nc = false;
  std::string mode;
  std::optional<int> anchor;
  std::string order;
  std::optional<int> max_d;
  std::string m_range;
  bool json_output = false;
  std::string out_file;
  std::string id;
  std::string series;
};

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
  }
}

// "5" or "5,4".
std::pair<int, int> parse_order(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    const int n = parse_int(text, "order");
    return {n, n};
  }
  return {parse_int(text.substr(0, comma), "order"), parse_int(text.substr(comma + 1), "order")};
}

// "3..5" or "4".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int m = parse_int(text, "range");
    return {m, m};
  }
  const auto range = std::make_pair(parse_int(text.substr(0, dots), "range"), parse_int(text.substr(dots + 2), "range"));
  if (range.first > range.second) throw UsageError("empty range '" + text + "'");
  return range;
}

LabeledGraph graph_of(const Options& o) {
  try {
    return parse_graph(o.graph);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int expand(const Options& o, std::ostream& out) {
  const LabeledGraph g = graph_of(o);
  if (o.nc) {
    const std::string basis = o.basis.empty() ? "m" : o.basis;
    if (basis != "m" && basis != "e" && basis != "p") throw UsageError("--basis must be m, e or p with --nc");
    const NCBasis target = basis == "m" ? NCBasis::m : basis == "e" ? NCBasis::e : NCBasis::p;
    const NCSymF y = convert(y_via_stable_partitions(g), target);
    out << (o.json_output ? to_json(y).dump() : format(y)) << "\n";
    return kExitOk;
  }
  const std::string basis = o.basis.empty() ? "e" : o.basis;
  if (basis != "e" && basis != "p") throw UsageError("--basis must be e or p (m needs --nc)");
  const SymF x = to_basis(csf_via_subsets(g), basis == "e" ? SymBasis::e : SymBasis::p);
  out << (o.json_output ? to_json(x).dump() : format(x)) << "\n";
  return kExitOk;
}

int anchor_of(const Options& o, const LabeledGraph& g) {
  const int anchor = o.anchor.value_or(g.order());
  if (anchor < 1 || anchor > g.order()) throw UsageError("--anchor must lie in [1.." + std::to_string(g.order()) + "]");
  return anchor;
}

int classes(const Options& o, std::ostream& out) {
  const LabeledGraph g = graph_of(o);
  const ClassExpansion c = class_reduce(y_via_stable_partitions(g), anchor_of(o, g));
  out << (o.json_output ? to_json(c).dump() : format(c)) << "\n";
  return kExitOk;
}

int check(const Options& o, std::ostream& out) {
  const LabeledGraph g = graph_of(o);
  if (o.mode == "epos") {
    const EPositivity v = is_e_positive(csf_via_subsets(g));
    if (o.json_output) {
      json j{{"mode", "epos"}, {"positive", v.positive}};
      if (v.witness) j["witness"] = json{{"partition", v.witness->first.parts()}, {"coefficient", to_json(v.witness->second)}};
      out << j.dump() << "\n";
    } else if (v.positive) {
      out << "e-positive\n";
    } else {
      out << "not e-positive: witness " << v.witness->first.to_string() << " coefficient " << to_string(v.witness->second)
          << "\n";
    }
    return v.positive ? kExitOk : kExitNegative;
  }
  const ParenVerdict v = is_e_paren_positive(g, anchor_of(o, g));
  if (o.json_output) {
    json j{{"mode", "eparen"}, {"positive", v.positive}, {"classes", to_json(v.classes)}};
    if (v.witness) j["witness"] = json{{"type", v.witness->first.type.parts()}, {"marked", v.witness->first.marked_block_size},
                                       {"coefficient", to_json(v.witness->second)}};
    out << j.dump() << "\n";
  } else if (v.positive) {
    out << "(e)-positive modulo " << v.classes.anchor() << "\n";
  } else {
    out << "not (e)-positive modulo " << v.classes.anchor() << ": witness " << v.witness->first.to_string()
        << " coefficient " << to_string(v.witness->second) << "\n";
  }
  return v.positive ? kExitOk : kExitNegative;
}

int verify(const Options& o, std::ostream& out) {
  const VerifyEntry* entry = find_verify_entry(o.id);
  if (!entry) {
    std::string known;
    for (const auto& e : verify_catalog()) known += "\n  " + e.id + " (" + e.alias + "): " + e.summary;
    throw UsageError("unknown verification '" + o.id + "'; known:" + known);
  }
  VerifyOptions vo;
  vo.max_d = o.max_d;
  if (!o.m_range.empty()) vo.m_range = parse_range(o.m_range);
  if (!o.order.empty()) vo.order = parse_order(o.order);
  const std::vector<VerifyRow> rows = entry->run(vo);
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  const bool ok = !rows.empty() && passed == static_cast<long>(rows.size());
  if (o.json_output) {
    json list = json::array();
    for (const auto& r : rows) list.push_back(json{{"instance", r.instance}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
    out << json{{"id", entry->id}, {"status", ok ? "pass" : "fail"}, {"rows", std::move(list)}}.dump() << "\n";
  } else {
    for (const auto& r : rows) out << (r.pass ? "[PASS] " : "[FAIL] ") << r.instance << "  " << r.detail << "\n";
    out << entry->id << ": " << passed << "/" << rows.size() << " passed\n";
  }
  return ok ? kExitOk : kExitNegative;
}

int series(const Options& o, std::ostream& out) {
  const int n = o.order.empty() ? 8 : parse_order(o.order).first;
  if (n < 0) throw UsageError("--order must be nonnegative");
  SymSeries s(0);
  if (o.series == "E") {
    s = E_series(n);
  } else if (o.series == "F") {
    s = F_series(n);
  } else if (o.series == "path") {
    s = div(E_series(n), F_series(n));
  } else if (o.series == "cycle") {
    s = div(shift(truncate(derivative(derivative(E_series(n + 2))), n), 2), F_series(n));
  } else if (o.series == "power") {
    s = div(F_series(n), E_series(n));
  } else {
    throw UsageError("series must be one of E, F, path, cycle, power");
  }
  if (o.json_output) {
    json list = json::array();
    for (int k = 0; k <= s.order(); ++k) list.push_back(to_json(s[k]));
    out << json{{"series", o.series}, {"order", n}, {"coefficients", std::move(list)}}.dump() << "\n";
  } else {
    for (int k = 0; k <= s.order(); ++k) out << "z^" << k << ": " << format(s[k]) << "\n";
  }
  return kExitOk;
}

int list_corpus(const Options& o, std::ostream& out) {
  const int max_d = o.max_d.value_or(8);
  if (max_d < 1 || max_d > 16) throw UsageError("--max must lie in [1..16]");
  const auto entries = corpus(max_d);
  if (o.json_output) {
    json list = json::array();
    for (const auto& [name, g] : entries) list.push_back(json{{"name", name}, {"d", g.order()}, {"edges", g.edge_count()}});
    out << list.dump() << "\n";
  } else {
    for (const auto& [name, g] : entries) out << name << " d=" << g.order() << " |E|=" << g.edge_count() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic symmetric functions in commuting and noncommuting variables", "csfkit"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&o](CLI::App* sub) {
    sub->add_flag("--json", o.json_output, "Emit JSON");
    sub->add_option("--out", o.out_file, "Write output to FILE");
  };

  CLI::App* expand_cmd = app.add_subcommand("expand", "Print X_G, or Y_G with --nc");
  expand_cmd->add_option("graph", o.graph, "Graph spec")->required();
  expand_cmd->add_option("--basis", o.basis, "e or p; m, e or p with --nc");
  expand_cmd->add_flag("--nc", o.nc, "Noncommuting variables");
  add_output(expand_cmd);

  CLI::App* classes_cmd = app.add_subcommand("classes", "Class sums of Y_G modulo an anchor");
  classes_cmd->add_option("graph", o.graph, "Graph spec")->required();
  classes_cmd->add_option("--anchor", o.anchor, "Anchor vertex (default d)");
  add_output(classes_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "e-positivity (epos) or (e)-positivity (eparen)");
  check_cmd->add_option("graph", o.graph, "Graph spec")->required();
  check_cmd->add_option("--mode", o.mode, "epos or eparen")->required()->check(CLI::IsMember({"epos", "eparen"}));
  check_cmd->add_option("--anchor", o.anchor, "Anchor vertex for eparen (default d)");
  add_output(check_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a named verification");
  verify_cmd->add_option("id", o.id, "Verification id or alias")->required();
  verify_cmd->add_option("--max", o.max_d, "Largest vertex count");
  verify_cmd->add_option("--m", o.m_range, "m or m1..m2");
  verify_cmd->add_option("--order", o.order, "N or Nx,Ny");
  add_output(verify_cmd);

  CLI::App* series_cmd = app.add_subcommand("series", "Print E, F, path, cycle or power series coefficients");
  series_cmd->add_option("name", o.series, "E, F, path, cycle or power")->required();
  series_cmd->add_option("--order", o.order, "Truncation order (default 8)");
  add_output(series_cmd);

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "List the built-in graph corpus");
  corpus_cmd->add_option("--max", o.max_d, "Largest vertex count (default 8)");
  add_output(corpus_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (expand_cmd->parsed()) code = expand(o, buffer);
    else if (classes_cmd->parsed()) code = classes(o, buffer);
    else if (check_cmd->parsed()) code = check(o, buffer);
    else if (verify_cmd->parsed()) code = verify(o, buffer);
    else if (series_cmd->parsed()) code = series(o, buffer);
    else code = list_corpus(o, buffer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_file);
    if (!file) {
      err << "cannot write '" << o.out_file << "'\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace csfkit::cli
