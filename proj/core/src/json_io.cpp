#include "graphlaw/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace graphlaw {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::BadInput, "malformed JSON");
  return j;
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::BadInput, what); }

int read_n(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) bad("expected an object with an integer n");
  int n = j["n"].get<int>();
  if (n < 0 || n > 64) bad("n out of range");
  return n;
}

VertexSet read_vertices(const json& j, int n) {
  if (!j.contains("vertices")) return VertexSet::full(n);
  VertexSet out;
  if (!j["vertices"].is_array()) bad("vertices must be a list");
  for (const json& e : j["vertices"]) {
    if (!e.is_number_integer()) bad("vertices must be integers");
    int v = e.get<int>();
    if (v < 0 || v >= n) bad("vertex out of range");
    out.add(v);
  }
  return out;
}

std::vector<int> sorted_list(VertexSet s) { return s.to_vector(); }

json graph_json(const UGraph& g) {
  json j;
  j["n"] = g.n();
  if (!(g.verts() == VertexSet::full(g.n()))) j["vertices"] = sorted_list(g.verts());
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

UGraph graph_from_json(const json& j) {
  int n = read_n(j);
  UGraph g(n, read_vertices(j, n));
  if (!j.contains("edges") || !j["edges"].is_array()) bad("expected an edge list");
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) bad("edges must be integer pairs");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) bad("edge endpoints out of range");
    if (!g.verts().contains(u) || !g.verts().contains(v)) bad("edge endpoint outside the vertex list");
    g.add_edge(u, v);
  }
  return g;
}

json dag_json(const Dag& d) {
  json j;
  j["n"] = d.n();
  if (!(d.verts() == VertexSet::full(d.n()))) j["vertices"] = sorted_list(d.verts());
  json edges = json::array();
  for (auto [u, v] : d.arcs()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Dag dag_from_json(const json& j) {
  int n = read_n(j);
  Dag d(n, read_vertices(j, n));
  if (!j.contains("edges") || !j["edges"].is_array()) bad("expected an edge list");
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) bad("edges must be integer pairs");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) bad("edge endpoints out of range");
    if (!d.verts().contains(u) || !d.verts().contains(v)) bad("edge endpoint outside the vertex list");
    d.add_arc(u, v);
  }
  d.topological_order();
  return d;
}

json dagoid_json(const Dagoid& dg) {
  json j;
  j["skeleton"] = graph_json(dg.skeleton());
  json imms = json::array();
  for (auto [a, b, c] : dg.immoralities()) imms.push_back(json::array({a, b, c}));
  j["immoralities"] = std::move(imms);
  return j;
}

Dagoid dagoid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("skeleton")) bad("expected a skeleton");
  UGraph sk = graph_from_json(j["skeleton"]);
  std::vector<std::array<int, 3>> imms;
  if (j.contains("immoralities")) {
    if (!j["immoralities"].is_array()) bad("immoralities must be a list");
    for (const json& t : j["immoralities"]) {
      if (!t.is_array() || t.size() != 3) bad("immoralities must be integer triples");
      imms.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
  }
  return dagoid_from_parts(sk, std::move(imms));
}

json subset_vector_json(const SubsetVector& v, int n) {
  json j;
  j["n"] = n;
  json entries = json::array();
  for (const auto& [mask, value] : v.entries()) {
    json e;
    e["set"] = sorted_list(VertexSet(mask));
    e["value"] = value;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::pair<SubsetVector, int> subset_vector_from_json(const json& j) {
  int n = read_n(j);
  SubsetVector v;
  if (!j.contains("entries") || !j["entries"].is_array()) bad("expected an entry list");
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("set") || !e.contains("value") || !e["set"].is_array() || !e["value"].is_number())
      bad("entries must carry a set and a value");
    VertexSet s;
    for (const json& x : e["set"]) {
      int u = x.get<int>();
      if (u < 0 || u >= n) bad("set member out of range");
      s.add(u);
    }
    if (v.at(s) != 0.0) bad("duplicate set in entries");
    v.set(s, e["value"].get<double>());
  }
  return {std::move(v), n};
}

}  // namespace

std::string write_graph(const UGraph& g) { return graph_json(g).dump(); }
UGraph read_graph(const std::string& text) { return graph_from_json(parse(text)); }

std::string write_dag(const Dag& d) { return dag_json(d).dump(); }
Dag read_dag(const std::string& text) { return dag_from_json(parse(text)); }

std::string write_dagoid(const Dagoid& dg) { return dagoid_json(dg).dump(); }
Dagoid read_dagoid(const std::string& text) { return dagoid_from_json(parse(text)); }

std::string write_subset_vector(const SubsetVector& v, int n) { return subset_vector_json(v, n).dump(); }
std::pair<SubsetVector, int> read_subset_vector(const std::string& text) { return subset_vector_from_json(parse(text)); }

std::string write_graph_law(const GraphLaw& law) {
  json j;
  if (law.kind() == LawKind::exponential) {
    j["kind"] = "exponential";
    j["omega"] = subset_vector_json(law.omega(), law.n());
  } else {
    j["kind"] = "table";
    json entries = json::array();
    for (const auto& [mask, lp] : law.table_entries()) {
      json e;
      e["graph"] = graph_json(graph_from_edge_mask(law.n(), mask, law.verts()));
      e["logp"] = lp;
      entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
  }
  return j.dump();
}

GraphLaw read_graph_law(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("expected a law kind");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "exponential") {
    if (!j.contains("omega")) bad("exponential law needs omega");
    auto [omega, n] = subset_vector_from_json(j["omega"]);
    return GraphLaw::exponential(n, std::move(omega));
  }
  if (kind != "table") bad("unknown law kind");
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty()) bad("table law needs entries");
  std::vector<std::pair<UGraph, double>> entries;
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("graph") || !e.contains("logp") || !e["logp"].is_number()) bad("table entries need a graph and logp");
    entries.emplace_back(graph_from_json(e["graph"]), e["logp"].get<double>());
  }
  int n = entries.front().first.n();
  VertexSet verts = entries.front().first.verts();
  return GraphLaw::table_on(n, verts, entries);
}

std::string write_dagoid_law(const DagoidLaw& law) {
  json j;
  if (law.kind() == LawKind::exponential) {
    j["kind"] = "exponential";
    j["omega"] = subset_vector_json(law.omega(), law.n());
  } else {
    j["kind"] = "table";
    json entries = json::array();
    for (const auto& [dg, lp] : law.table_entries()) {
      json e;
      e["dagoid"] = dagoid_json(dg);
      e["logp"] = lp;
      entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
  }
  return j.dump();
}

DagoidLaw read_dagoid_law(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("expected a law kind");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "exponential") {
    if (!j.contains("omega")) bad("exponential law needs omega");
    auto [omega, n] = subset_vector_from_json(j["omega"]);
    return DagoidLaw::exponential(n, std::move(omega));
  }
  if (kind != "table") bad("unknown law kind");
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].empty()) bad("table law needs entries");
  std::vector<std::pair<Dagoid, double>> entries;
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("dagoid") || !e.contains("logp") || !e["logp"].is_number()) bad("table entries need a dagoid and logp");
    entries.emplace_back(dagoid_from_json(e["dagoid"]), e["logp"].get<double>());
  }
  return DagoidLaw::table(entries.front().first.n(), entries);
}

std::string write_hyper(const GaussHyper& h) {
  json j;
  j["delta"] = h.delta();
  json phi = json::array();
  for (int i = 0; i < h.dim(); ++i) {
    json row = json::array();
    for (int k = 0; k < h.dim(); ++k) row.push_back(h.phi(i, k));
    phi.push_back(std::move(row));
  }
  j["phi"] = std::move(phi);
  return j.dump();
}

GaussHyper read_hyper(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("delta") || !j["delta"].is_number() || !j.contains("phi") || !j["phi"].is_array())
    bad("expected delta and phi");
  int dim = static_cast<int>(j["phi"].size());
  std::vector<double> phi;
  phi.reserve(static_cast<std::size_t>(dim) * dim);
  for (const json& row : j["phi"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) bad("phi must be square");
    for (const json& x : row) {
      if (!x.is_number()) bad("phi entries must be numbers");
      phi.push_back(x.get<double>());
    }
  }
  return GaussHyper(j["delta"].get<double>(), dim, std::move(phi));
}

DataMatrix read_csv(const std::string& text, bool header) {
  DataMatrix x;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header && first) {
      first = false;
      continue;
    }
    first = false;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(cell, &used);
      } catch (const std::exception&) {
        bad("CSV cell is not a number");
      }
      while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
      if (used != cell.size()) bad("CSV cell is not a number");
      row.push_back(value);
    }
    if (x.n_obs == 0)
      x.n_cols = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != x.n_cols)
      bad("CSV rows have unequal lengths");
    x.values.insert(x.values.end(), row.begin(), row.end());
    ++x.n_obs;
  }
  validate_data(x);
  return x;
}

std::string write_csv(const DataMatrix& x, bool header) {
  validate_data(x);
  std::string out;
  if (header) {
    for (int c = 0; c < x.n_cols; ++c) {
      if (c) out += ',';
      out += 'x';
      out += std::to_string(c);
    }
    out += '\n';
  }
  for (int r = 0; r < x.n_obs; ++r) {
    for (int c = 0; c < x.n_cols; ++c) {
      if (c) out += ',';
      out += json(x.at(r, c)).dump();
    }
    out += '\n';
  }
  return out;
}

std::string write_report(const ChainReport& r, std::size_t top_k) {
  json j;
  j["steps"] = r.counted;
  j["acceptance_rate"] = acceptance_rate(r);
  json ef = json::array();
  for (auto [u, v, f] : edge_frequencies(r)) ef.push_back(json::array({json(u), json(v), json(f)}));
  j["edge_freq"] = std::move(ef);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranked(r.visits.begin(), r.visits.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > top_k) ranked.resize(top_k);
  json top = json::array();
  for (const auto& [mask, count] : ranked) {
    json e;
    e["graph"] = graph_json(graph_from_edge_mask(r.n, mask));
    e["freq"] = static_cast<double>(count) / static_cast<double>(r.counted);
    top.push_back(std::move(e));
  }
  j["top_graphs"] = std::move(top);
  return j.dump();
}

std::string write_error(const Error& e) {
  json j;
  j["error"] = {{"code", e.code_name()}, {"message", e.what()}};
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::BadInput, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::BadInput, "cannot open file for writing: " + path);
  out << text;
}

}  // namespace graphlaw
