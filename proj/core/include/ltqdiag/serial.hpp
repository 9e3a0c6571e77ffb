#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ltqdiag/diagnosability.hpp"
#include "ltqdiag/diagnosis.hpp"
#include "ltqdiag/fault_model.hpp"
#include "ltqdiag/graph.hpp"
#include "ltqdiag/syndrome.hpp"
#include "ltqdiag/vertex_set.hpp"

// Text and JSON interchange. Vertex labels are fixed-width binary strings,
// most significant bit first; member lists are always in ascending numeric
// order (which for fixed-width labels is also lexicographic order).

namespace ltqdiag {

std::string to_label(uint32_t v, int n);
uint32_t parse_label(const std::string& label, int n);

std::vector<std::string> to_labels(const VertexSet& s, int n);
VertexSet from_labels(const std::vector<std::string>& labels, int n);

std::string model_name(Model model);   // "pmc" / "mm*"
Model parse_model(const std::string& name);

std::string method_name(Method method);  // "formula" / "brute_force" / "witness"

// Graph exports: one undirected edge per line ("u v", sorted), DOT, and
// {"n": int, "edges": [[str, str], ...]}.
std::string edge_list_text(const LtqGraph& g);
std::string dot_text(const LtqGraph& g);
std::string graph_json(const LtqGraph& g);

// {"is_gng": bool, "violating_vertex": str|null, "free_neighbor_count": int|null}
std::string gng_report_json(const GoodNeighborReport& report, int n);

// {"size": int, "cut": [str], "component_sizes": [int]}
std::string cut_report_json(const CutReport& report, int n);
// {"none_found_below_bound": true, "bound": int} when no cut exists in range.
std::string kappa_result_json(const KappaResult& result, int n);

// PMC: {"model":"pmc","n":int,"tests":[{"u":str,"v":str,"out":0|1}]}
// MM*: {"model":"mm*","n":int,"tests":[{"w":str,"u":str,"v":str,"out":0|1}]}
// Test arrays in canonical order: by tester/comparator, then pair.
std::string syndrome_json(const LtqGraph& g, const PmcSyndrome& s);
std::string syndrome_json(const LtqGraph& g, const MmSyndrome& s);

// Parse either syndrome flavor; validates labels, adjacency, and that every
// test of the model's domain appears exactly once.
std::variant<PmcSyndrome, MmSyndrome> parse_syndrome_json(const std::string& text);

// {"n","g","model","method","value","exact","witness","pairs_checked","elapsed_ms"}
std::string diag_report_json(const DiagReport& report);

// {"faulty":[...]} | {"ambiguity":[[...],...]} | {"no_candidate":true}
std::string diagnosis_json(const DiagnosisResult& result, int n);

// Fault-set files: one n-bit binary label per line (blank lines ignored).
VertexSet parse_fault_lines(const std::string& text, int n);
std::string fault_lines(const VertexSet& s, int n);

}  // namespace ltqdiag
