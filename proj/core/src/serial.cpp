#include "ltqdiag/serial.hpp"

#include <json.hpp>
#include <sstream>

#include "ltqdiag/errors.hpp"

namespace ltqdiag {

using json = nlohmann::ordered_json;

std::string to_label(uint32_t v, int n) {
  std::string out(static_cast<size_t>(n), '0');
  for (int b = 0; b < n; ++b) {
    if ((v >> b) & 1) out[static_cast<size_t>(n - 1 - b)] = '1';
  }
  return out;
}

uint32_t parse_label(const std::string& label, int n) {
  if (static_cast<int>(label.size()) != n) {
    throw ArgumentError("label '" + label + "' is not " + std::to_string(n) + " bits wide");
  }
  uint32_t v = 0;
  for (char c : label) {
    if (c != '0' && c != '1') throw ArgumentError("label '" + label + "' has non-binary digits");
    v = (v << 1) | static_cast<uint32_t>(c - '0');
  }
  return v;
}

std::vector<std::string> to_labels(const VertexSet& s, int n) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (uint32_t v : s.members()) out.push_back(to_label(v, n));
  return out;
}

VertexSet from_labels(const std::vector<std::string>& labels, int n) {
  VertexSet out(uint64_t{1} << n);
  for (const auto& label : labels) out.add(parse_label(label, n));
  return out;
}

std::string model_name(Model model) { return model == Model::Pmc ? "pmc" : "mm*"; }

Model parse_model(const std::string& name) {
  if (name == "pmc" || name == "PMC") return Model::Pmc;
  if (name == "mm*" || name == "MM*" || name == "mm" || name == "mmstar") return Model::MmStar;
  throw ArgumentError("unknown model '" + name + "' (expected pmc or mm*)");
}

std::string method_name(Method method) {
  switch (method) {
    case Method::Formula:
      return "formula";
    case Method::BruteForce:
      return "brute_force";
    case Method::Witness:
      return "witness";
  }
  return "formula";
}

std::string edge_list_text(const LtqGraph& g) {
  std::ostringstream out;
  const int n = g.dimension();
  for (uint64_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbor_labels(static_cast<uint32_t>(u))) {
      if (v > u) out << to_label(static_cast<uint32_t>(u), n) << ' ' << to_label(v, n) << '\n';
    }
  }
  return out.str();
}

std::string dot_text(const LtqGraph& g) {
  std::ostringstream out;
  const int n = g.dimension();
  out << "graph ltq" << n << " {\n";
  for (uint64_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbor_labels(static_cast<uint32_t>(u))) {
      if (v > u) {
        out << "  \"" << to_label(static_cast<uint32_t>(u), n) << "\" -- \"" << to_label(v, n)
            << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_json(const LtqGraph& g) {
  const int n = g.dimension();
  json edges = json::array();
  for (uint64_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbor_labels(static_cast<uint32_t>(u))) {
      if (v > u) edges.push_back({to_label(static_cast<uint32_t>(u), n), to_label(v, n)});
    }
  }
  json doc;
  doc["n"] = n;
  doc["edges"] = std::move(edges);
  return doc.dump();
}

std::string gng_report_json(const GoodNeighborReport& report, int n) {
  json doc;
  doc["is_gng"] = report.is_gng;
  doc["violating_vertex"] =
      report.violating_vertex ? json(to_label(*report.violating_vertex, n)) : json(nullptr);
  doc["free_neighbor_count"] =
      report.free_neighbor_count ? json(*report.free_neighbor_count) : json(nullptr);
  return doc.dump();
}

std::string cut_report_json(const CutReport& report, int n) {
  json doc;
  doc["size"] = report.size;
  doc["cut"] = to_labels(report.cut, n);
  doc["component_sizes"] = report.component_sizes;
  return doc.dump();
}

std::string kappa_result_json(const KappaResult& result, int n) {
  if (result.cut) return cut_report_json(*result.cut, n);
  json doc;
  doc["none_found_below_bound"] = true;
  doc["bound"] = result.size_bound;
  return doc.dump();
}

std::string syndrome_json(const LtqGraph& g, const PmcSyndrome& s) {
  const int n = g.dimension();
  json tests = json::array();
  for (uint64_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbor_labels(static_cast<uint32_t>(u))) {
      json t;
      t["u"] = to_label(static_cast<uint32_t>(u), n);
      t["v"] = to_label(v, n);
      t["out"] = pmc_outcome(g, s, static_cast<uint32_t>(u), v);
      tests.push_back(std::move(t));
    }
  }
  json doc;
  doc["model"] = "pmc";
  doc["n"] = n;
  doc["tests"] = std::move(tests);
  return doc.dump();
}

std::string syndrome_json(const LtqGraph& g, const MmSyndrome& s) {
  const int n = g.dimension();
  json tests = json::array();
  for (uint64_t w = 0; w < g.vertex_count(); ++w) {
    const auto labels = g.neighbor_labels(static_cast<uint32_t>(w));
    for (size_t i = 0; i < labels.size(); ++i) {
      for (size_t j = i + 1; j < labels.size(); ++j) {
        json t;
        t["w"] = to_label(static_cast<uint32_t>(w), n);
        t["u"] = to_label(labels[i], n);
        t["v"] = to_label(labels[j], n);
        t["out"] = mm_outcome(g, s, static_cast<uint32_t>(w), labels[i], labels[j]);
        tests.push_back(std::move(t));
      }
    }
  }
  json doc;
  doc["model"] = "mm*";
  doc["n"] = n;
  doc["tests"] = std::move(tests);
  return doc.dump();
}

namespace {

json parse_json_or_throw(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ArgumentError("malformed JSON");
  return doc;
}

int syndrome_dimension(const json& doc) {
  if (!doc.is_object() || !doc.contains("model") || !doc.contains("n") ||
      !doc.contains("tests") || !doc["tests"].is_array()) {
    throw ArgumentError("syndrome JSON must carry model, n, and tests");
  }
  if (!doc["n"].is_number_integer()) throw ArgumentError("syndrome n must be an integer");
  return doc["n"].get<int>();
}

int parse_out_bit(const json& t) {
  if (!t.contains("out") || !t["out"].is_number_integer()) {
    throw ArgumentError("test outcome must be an integer 0 or 1");
  }
  const int out = t["out"].get<int>();
  if (out != 0 && out != 1) throw ArgumentError("test outcome must be 0 or 1");
  return out;
}

}  // namespace

std::variant<PmcSyndrome, MmSyndrome> parse_syndrome_json(const std::string& text) {
  const json doc = parse_json_or_throw(text);
  const int n = syndrome_dimension(doc);
  const LtqGraph g = LtqGraph::build(n);
  const std::string model = doc["model"].get<std::string>();

  if (model == "pmc") {
    PmcSyndrome s = make_empty_pmc_syndrome(g);
    std::vector<uint8_t> seen(s.outcomes.size(), 0);
    for (const auto& t : doc["tests"]) {
      const uint32_t u = parse_label(t.at("u").get<std::string>(), n);
      const uint32_t v = parse_label(t.at("v").get<std::string>(), n);
      if (!g.adjacent(u, v)) {
        throw ArgumentError("test between non-adjacent vertices " + t.at("u").get<std::string>() +
                            " and " + t.at("v").get<std::string>());
      }
      set_pmc_outcome(g, s, u, v, parse_out_bit(t));
      size_t idx = 0;
      const auto labels = g.neighbor_labels(u);
      for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == v) idx = static_cast<size_t>(u) * n + i;
      }
      if (seen[idx]) throw ArgumentError("duplicate test in syndrome");
      seen[idx] = 1;
    }
    for (uint8_t f : seen) {
      if (!f) throw ArgumentError("syndrome does not cover every ordered adjacent pair");
    }
    return s;
  }
  if (model == "mm*") {
    MmSyndrome s = make_empty_mm_syndrome(g);
    std::vector<uint8_t> seen(s.outcomes.size(), 0);
    const uint64_t per = static_cast<uint64_t>(n) * (n - 1) / 2;
    for (const auto& t : doc["tests"]) {
      const uint32_t w = parse_label(t.at("w").get<std::string>(), n);
      const uint32_t u = parse_label(t.at("u").get<std::string>(), n);
      const uint32_t v = parse_label(t.at("v").get<std::string>(), n);
      if (u == v || !g.adjacent(w, u) || !g.adjacent(w, v)) {
        throw ArgumentError("comparison with an invalid comparator/pair triple");
      }
      set_mm_outcome(g, s, w, u, v, parse_out_bit(t));
      const auto labels = g.neighbor_labels(w);
      size_t iu = 0, iv = 0;
      for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == u) iu = i;
        if (labels[i] == v) iv = i;
      }
      if (iu > iv) std::swap(iu, iv);
      const size_t idx = w * per + (iu * n - iu * (iu + 1) / 2 + (iv - iu - 1));
      if (seen[idx]) throw ArgumentError("duplicate comparison in syndrome");
      seen[idx] = 1;
    }
    for (uint8_t f : seen) {
      if (!f) throw ArgumentError("syndrome does not cover every comparator pair");
    }
    return s;
  }
  throw ArgumentError("unknown syndrome model '" + model + "'");
}

std::string diag_report_json(const DiagReport& report) {
  json doc;
  doc["n"] = report.n;
  doc["g"] = report.g;
  doc["model"] = model_name(report.model);
  doc["method"] = method_name(report.method);
  doc["value"] = report.value;
  doc["exact"] = report.exact;
  if (report.witness) {
    doc["witness"] = {to_labels(report.witness->first, report.n),
                      to_labels(report.witness->second, report.n)};
  } else {
    doc["witness"] = nullptr;
  }
  doc["pairs_checked"] = report.pairs_checked;
  doc["elapsed_ms"] = report.elapsed.count();
  return doc.dump();
}

std::string diagnosis_json(const DiagnosisResult& result, int n) {
  json doc;
  switch (result.kind) {
    case DiagnosisResult::Kind::Unique:
      doc["faulty"] = to_labels(result.unique(), n);
      break;
    case DiagnosisResult::Kind::Ambiguous: {
      json list = json::array();
      for (const auto& c : result.candidates) list.push_back(to_labels(c, n));
      doc["ambiguity"] = std::move(list);
      break;
    }
    case DiagnosisResult::Kind::NoCandidate:
      doc["no_candidate"] = true;
      break;
  }
  return doc.dump();
}

VertexSet parse_fault_lines(const std::string& text, int n) {
  VertexSet out(uint64_t{1} << n);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.add(parse_label(line, n));
  }
  return out;
}

std::string fault_lines(const VertexSet& s, int n) {
  std::string out;
  for (uint32_t v : s.members()) {
    out += to_label(v, n);
    out += '\n';
  }
  return out;
}

}  // namespace ltqdiag
