#include "csfkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "csfkit/errors.hpp"

namespace csfkit {

using nlohmann::json;

namespace {

// Joins signed terms "c X" as "X - 2 Y + 1/2 Z".
class TermWriter {
 public:
  void add(const Rational& c, const std::string& body) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out_.empty()) {
      if (negative) out_ += "-";
    } else {
      out_ += negative ? " - " : " + ";
    }
    if (magnitude != 1) out_ += to_string(magnitude) + " ";
    out_ += body;
  }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

std::string bracketed(const IntPartition& lambda) {
  std::string s = "[";
  for (std::size_t k = 0; k < lambda.parts().size(); ++k) {
    if (k) s += ',';
    s += std::to_string(lambda.parts()[k]);
  }
  return s + "]";
}

char ncbasis_letter(NCBasis b) { return basis_letter(b); }

NCBasis ncbasis_from(const std::string& s) {
  if (s == "m") return NCBasis::m;
  if (s == "e") return NCBasis::e;
  if (s == "p") return NCBasis::p;
  throw DomainError("unknown NCSym basis '" + s + "'");
}

SymBasis symbasis_from(const std::string& s) {
  if (s == "e") return SymBasis::e;
  if (s == "p") return SymBasis::p;
  throw DomainError("unknown basis '" + s + "'");
}

IntPartition partition_from_json(const json& j) { return IntPartition(j.get<std::vector<int>>()); }

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw DomainError("expected an integer or a decimal string");
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw DomainError("bad integer '" + std::string(token) + "' in graph spec");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw DomainError("trailing comma in graph spec");
  }
  return values;
}

void require_arity(const std::string& kind, const std::vector<int>& args, std::size_t n) {
  if (args.size() != n) {
    throw DomainError("'" + kind + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Text

std::vector<std::pair<IntPartition, Rational>> ordered_terms(const SymF& f) {
  std::vector<std::pair<IntPartition, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.length() != b.first.length()) return a.first.length() > b.first.length();
    return a.first.parts() > b.first.parts();
  });
  return terms;
}

std::string format(const SymF& f) {
  TermWriter w;
  const char letter = basis_letter(f.basis());
  for (const auto& [lambda, c] : ordered_terms(f)) w.add(c, letter + bracketed(lambda));
  return w.str();
}

std::string format(const NCSymF& f) {
  TermWriter w;
  const char letter = ncbasis_letter(f.basis());
  for (const auto& [pi, c] : f.terms()) w.add(c, std::string(1, letter) + "[" + pi.to_string() + "]");
  return w.str();
}

std::string format(const ClassExpansion& c) {
  TermWriter w;
  for (const auto& [key, value] : c.terms()) w.add(value, key.to_string());
  return w.str();
}

// ---------------------------------------------------------------------------
// JSON

json to_json(const Rational& r) { return json{{"num", integer_to_json(r.get_num())}, {"den", integer_to_json(r.get_den())}}; }

Rational rational_from_json(const json& num, const json& den) {
  Rational r(integer_from_json(num), integer_from_json(den));
  if (r.get_den() == 0) throw DomainError("zero denominator");
  r.canonicalize();
  return r;
}

json to_json(const SymF& f) {
  json terms = json::array();
  for (const auto& [lambda, c] : ordered_terms(f)) {
    json t = to_json(c);
    t["partition"] = lambda.parts();
    terms.push_back(std::move(t));
  }
  return json{{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", std::move(terms)}};
}

json to_json(const NCSymF& f) {
  json terms = json::array();
  for (const auto& [pi, c] : f.terms()) {
    json t = to_json(c);
    t["partition"] = pi.to_string();
    terms.push_back(std::move(t));
  }
  return json{{"degree", f.degree()}, {"basis", std::string(1, ncbasis_letter(f.basis()))}, {"terms", std::move(terms)}};
}

json to_json(const ClassExpansion& c) {
  json classes = json::array();
  for (const auto& [key, value] : c.terms()) {
    json t = to_json(value);
    t["type"] = key.type.parts();
    t["marked"] = key.marked_block_size;
    classes.push_back(std::move(t));
  }
  return json{{"degree", c.degree()}, {"anchor", c.anchor()}, {"classes", std::move(classes)}};
}

json to_json(const GfReport& r) {
  json j{{"identity", r.identity}, {"truncation", r.truncation}, {"status", r.match() ? "match" : "mismatch"},
         {"clearing_power", r.clearing_power}, {"compared", r.compared}};
  if (r.first_mismatch) {
    j["first_mismatch"] = json{{"series", r.first_mismatch->series},
                               {"position", r.first_mismatch->position},
                               {"lhs", to_json(r.first_mismatch->lhs)},
                               {"rhs", to_json(r.first_mismatch->rhs)},
                               {"residual", to_json(r.first_mismatch->lhs - r.first_mismatch->rhs)}};
  }
  return j;
}

json to_json(const ReplayReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"label", c.label},
                          {"status", c.match() ? "match" : "mismatch"},
                          {"formula", to_json(c.formula)},
                          {"direct", to_json(c.direct)}});
  }
  return json{{"identity", r.identity},
              {"m", r.m},
              {"status", r.match() ? "match" : "mismatch"},
              {"nonnegative", r.nonnegative()},
              {"checks", std::move(checks)},
              {"notes", r.notes}};
}

json to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"d", g.order()}, {"edges", std::move(edges)}};
}

SymF symf_from_json(const json& j) {
  SymF f(symbasis_from(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    f.add_term(partition_from_json(t.at("partition")), rational_from_json(t.at("num"), t.at("den")));
  }
  return f;
}

NCSymF ncsymf_from_json(const json& j) {
  NCSymF f(j.at("degree").get<int>(), ncbasis_from(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    f.add_term(SetPartition::parse(t.at("partition").get<std::string>()), rational_from_json(t.at("num"), t.at("den")));
  }
  return f;
}

ClassExpansion classes_from_json(const json& j) {
  const auto& classes = j.at("classes");
  int degree = 0;
  if (j.contains("degree")) {
    degree = j.at("degree").get<int>();
  } else if (!classes.empty()) {
    degree = partition_from_json(classes.front().at("type")).weight();
  } else {
    throw DomainError("empty class expansion without a degree");
  }
  ClassExpansion c(degree, j.at("anchor").get<int>());
  for (const auto& t : classes) {
    c.add_term(CongruenceKey{partition_from_json(t.at("type")), t.at("marked").get<int>()},
               rational_from_json(t.at("num"), t.at("den")));
  }
  return c;
}

LabeledGraph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be a pair [i, j]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return LabeledGraph(j.at("d").get<int>(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Graph constructor language

LabeledGraph parse_graph(std::string_view spec) {
  if (spec.empty()) throw DomainError("empty graph spec");
  const std::string text(spec);
  if (text.ends_with(".json")) {
    std::ifstream in(text);
    if (!in) throw DomainError("cannot open graph file '" + text + "'");
    try {
      return graph_from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw DomainError("bad graph file '" + text + "': " + e.what());
    }
  }
  const auto colon = spec.find(':');
  const std::string kind(spec.substr(0, colon));
  const std::vector<int> args = colon == std::string_view::npos ? std::vector<int>{} : parse_ints(spec.substr(colon + 1));
  if (colon != std::string_view::npos && args.empty()) throw DomainError("missing arguments in graph spec");

  if (kind == "claw") return require_arity(kind, args, 0), claw();
  if (kind == "diamond") return require_arity(kind, args, 0), diamond();
  if (kind == "path") return require_arity(kind, args, 1), path(args[0]);
  if (kind == "cycle") return require_arity(kind, args, 1), cycle(args[0]);
  if (kind == "complete") return require_arity(kind, args, 1), complete(args[0]);
  if (kind == "empty") return require_arity(kind, args, 1), empty_graph(args[0]);
  if (kind == "ccm3") return require_arity(kind, args, 1), cc_m3_labeled(args[0]);
  if (kind == "tadpole") return require_arity(kind, args, 2), tadpole(args[0], args[1]);
  if (kind == "ltadpole") return require_arity(kind, args, 2), line_tadpole(args[0], args[1]);
  if (kind == "cc") return require_arity(kind, args, 2), cycle_chord(args[0], args[1]);
  throw DomainError("unknown graph kind '" + kind + "'");
}

std::vector<CorpusEntry> corpus(int max_d) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name) {
    LabeledGraph g = parse_graph(name);
    out.push_back({std::move(name), std::move(g)});
  };
  for (int n = 1; n <= max_d; ++n) add("path:" + std::to_string(n));
  for (int n = 3; n <= max_d; ++n) add("cycle:" + std::to_string(n));
  for (int m = 3; m < max_d; ++m)
    for (int l = 1; m + l <= max_d; ++l) add("tadpole:" + std::to_string(m) + "," + std::to_string(l));
  for (int m = 3; m < max_d; ++m)
    for (int l = 1; m + l <= max_d; ++l) add("ltadpole:" + std::to_string(m) + "," + std::to_string(l));
  for (int a = 2; a + 2 <= max_d; ++a)
    for (int b = 2; a + b <= max_d; ++b) add("cc:" + std::to_string(a) + "," + std::to_string(b));
  for (int m = 3; m + 2 <= max_d; ++m) add("ccm3:" + std::to_string(m));
  if (max_d >= 4) {
    add("claw");
    add("diamond");
  }
  return out;
}

}  // namespace csfkit
