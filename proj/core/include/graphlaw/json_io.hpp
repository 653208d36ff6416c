#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "graphlaw/dag.hpp"
#include "graphlaw/dagoid.hpp"
#include "graphlaw/dagoid_law.hpp"
#include "graphlaw/error.hpp"
#include "graphlaw/gaussian.hpp"
#include "graphlaw/graph_law.hpp"
#include "graphlaw/mcmc.hpp"

namespace graphlaw {

// Text artifacts are JSON (data matrices are CSV).  Writers emit compact,
// deterministic text; readers throw BadInput on malformed input.  Graphs
// and DAGs serialize as {"n":…, "edges":[[u,v],…]} with an optional
// "vertices" list when the active set is not 0..n-1; vectors as
// {"n":…, "entries":[{"set":[…], "value":…},…]}; laws as
// {"kind":"exponential","omega":…} or {"kind":"table","entries":…}.

std::string write_graph(const UGraph& g);
UGraph read_graph(const std::string& text);

std::string write_dag(const Dag& d);
Dag read_dag(const std::string& text);

std::string write_dagoid(const Dagoid& dg);
Dagoid read_dagoid(const std::string& text);

std::string write_subset_vector(const SubsetVector& v, int n);
std::pair<SubsetVector, int> read_subset_vector(const std::string& text);

std::string write_graph_law(const GraphLaw& law);
GraphLaw read_graph_law(const std::string& text);

std::string write_dagoid_law(const DagoidLaw& law);
DagoidLaw read_dagoid_law(const std::string& text);

std::string write_hyper(const GaussHyper& h);
GaussHyper read_hyper(const std::string& text);

DataMatrix read_csv(const std::string& text, bool header);
std::string write_csv(const DataMatrix& x, bool header);

// {"steps":…, "acceptance_rate":…, "edge_freq":[[u,v,f],…],
//  "top_graphs":[{"graph":…, "freq":…},…]} with the top_k most visited
// graphs, ties toward the smaller edge mask.
std::string write_report(const ChainReport& r, std::size_t top_k);

// {"error":{"code":…, "message":…}}
std::string write_error(const Error& e);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace graphlaw
