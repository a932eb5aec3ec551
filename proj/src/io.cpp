#include "gmedian/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gmedian {

using nlohmann::json;

namespace {

constexpr double kRangeSlack = 1e-12;

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error("graph set document: " + message);
}

std::size_t get_count(const json& j, const char* field) {
  if (!j.contains(field)) fail(std::string("missing field '") + field + "'");
  const json& v = j.at(field);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    fail(std::string("field '") + field + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

double get_weight(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  const double w = v.get<double>();
  if (!(w >= -kRangeSlack && w <= 1.0 + kRangeSlack)) {
    fail(where + " is outside [0, 1]");
  }
  return w;
}

GraphRecord parse_graph(const json& j, std::size_t n, std::size_t index) {
  const std::string where = "graph " + std::to_string(index + 1);
  if (!j.is_object()) fail(where + " must be an object");
  if (!j.contains("vertex_weights") || !j.at("vertex_weights").is_array()) {
    fail(where + ": missing 'vertex_weights' array");
  }

  GraphRecord rec;
  const json& vw = j.at("vertex_weights");
  if (vw.empty()) fail(where + ": needs at least one vertex");
  if (vw.size() > n) {
    fail(where + ": has " + std::to_string(vw.size()) + " vertices but n = " + std::to_string(n));
  }
  for (std::size_t r = 0; r < vw.size(); ++r) {
    rec.vertex_weights.push_back(
        get_weight(vw[r], where + ": vertex weight " + std::to_string(r + 1)));
  }

  if (j.contains("edges")) {
    const json& edges = j.at("edges");
    if (!edges.is_array()) fail(where + ": 'edges' must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::string ewhere = where + ": edge " + std::to_string(e + 1);
      const json& entry = edges[e];
      if (!entry.is_array() || entry.size() != 3) fail(ewhere + " must be a [r, s, weight] triple");
      if (!entry[0].is_number_unsigned() || !entry[1].is_number_unsigned()) {
        fail(ewhere + ": endpoints must be positive integers");
      }
      EdgeRecord edge;
      edge.r = entry[0].get<std::size_t>();
      edge.s = entry[1].get<std::size_t>();
      if (edge.r < 1 || edge.s > rec.vertex_weights.size()) {
        fail(ewhere + ": endpoints must lie in 1.." + std::to_string(rec.vertex_weights.size()));
      }
      if (edge.r >= edge.s) fail(ewhere + ": endpoints must satisfy r < s");
      if (!seen.insert({edge.r, edge.s}).second) {
        fail(ewhere + ": duplicate pair (" + std::to_string(edge.r) + ", " +
             std::to_string(edge.s) + ")");
      }
      edge.w = get_weight(entry[2], ewhere + ": weight");
      rec.edges.push_back(edge);
    }
  }
  return rec;
}

void append_weights(std::string& out, const std::vector<double>& weights) {
  out += '[';
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ", ";
    out += format_double(weights[i]);
  }
  out += ']';
}

}  // namespace

GraphSetDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");

  GraphSetDocument doc;
  if (!j.contains("format_version") || !j.at("format_version").is_number_integer()) {
    fail("missing integer field 'format_version'");
  }
  doc.format_version = j.at("format_version").get<int>();
  if (doc.format_version != 1) {
    fail("unsupported format_version " + std::to_string(doc.format_version));
  }
  doc.n = get_count(j, "n");
  doc.m = get_count(j, "m");

  if (!j.contains("graphs") || !j.at("graphs").is_array()) fail("missing 'graphs' array");
  const json& graphs = j.at("graphs");
  if (graphs.size() != doc.m) {
    fail("'graphs' holds " + std::to_string(graphs.size()) + " entries but m = " +
         std::to_string(doc.m));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    doc.graphs.push_back(parse_graph(graphs[i], doc.n, i));
  }
  if (j.contains("generator")) doc.generator = j.at("generator");
  return doc;
}

GraphSetDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string write_document(const GraphSetDocument& doc) {
  std::string out;
  out += "{\n";
  out += "  \"format_version\": " + std::to_string(doc.format_version) + ",\n";
  out += "  \"n\": " + std::to_string(doc.n) + ",\n";
  out += "  \"m\": " + std::to_string(doc.m) + ",\n";
  if (doc.generator) out += "  \"generator\": " + doc.generator->dump() + ",\n";
  out += "  \"graphs\": [\n";
  for (std::size_t i = 0; i < doc.graphs.size(); ++i) {
    const GraphRecord& g = doc.graphs[i];
    out += "    {\n";
    out += "      \"vertex_weights\": ";
    append_weights(out, g.vertex_weights);
    out += ",\n";
    out += "      \"edges\": [";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      out += e ? ",\n        [" : "\n        [";
      out += std::to_string(g.edges[e].r) + ", " + std::to_string(g.edges[e].s) + ", " +
             format_double(g.edges[e].w) + "]";
    }
    out += g.edges.empty() ? "]\n" : "\n      ]\n";
    out += i + 1 < doc.graphs.size() ? "    },\n" : "    }\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

void save_document(const GraphSetDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << write_document(doc);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

GraphSet to_graph_set(const GraphSetDocument& doc) {
  std::vector<AttributedGraph> members;
  members.reserve(doc.graphs.size());
  for (const GraphRecord& rec : doc.graphs) {
    const std::size_t nv = rec.vertex_weights.size();
    std::vector<double> ew(nv * nv, 0.0);
    for (const EdgeRecord& e : rec.edges) {
      ew[(e.r - 1) * nv + (e.s - 1)] = e.w;
      ew[(e.s - 1) * nv + (e.r - 1)] = e.w;
    }
    members.push_back(pad_to_size(AttributedGraph::make(rec.vertex_weights, std::move(ew)), doc.n));
  }
  return GraphSet::make(std::move(members));
}

GraphSetDocument from_graph_set(const GraphSet& s) {
  GraphSetDocument doc;
  doc.n = s.common_size();
  doc.m = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    GraphRecord rec;
    rec.vertex_weights = s[i].vertex_weights;
    for (std::size_t r = 0; r < doc.n; ++r) {
      for (std::size_t t = r + 1; t < doc.n; ++t) {
        const double w = s[i].edge(r, t);
        if (w != 0.0) rec.edges.push_back({r + 1, t + 1, w});
      }
    }
    doc.graphs.push_back(std::move(rec));
  }
  return doc;
}

GraphSet load_graph_set(const std::filesystem::path& path) {
  return to_graph_set(load_document(path));
}

std::string render_report_csv(const std::vector<BoundReport>& reports) {
  struct Row {
    const BoundReport* report;
    const BoundCheck* check;
  };
  std::vector<Row> rows;
  for (const BoundReport& report : reports) {
    for (const BoundCheck& check : report.checks) rows.push_back({&report, &check});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.report->instance_id != b.report->instance_id) {
      return a.report->instance_id < b.report->instance_id;
    }
    return a.check->name < b.check->name;
  });

  std::string out =
      "instance_id,cost,cl,gm,gm_approx,dist_medians,check_name,lhs,rel,rhs,slack,pass\n";
  for (const Row& row : rows) {
    const BoundReport& r = *row.report;
    const BoundCheck& c = *row.check;
    out += r.instance_id;
    out += ',';
    out += r.cost.flag();
    out += ',';
    out += format_double(r.cl_value) + ',';
    out += format_double(r.gm_value) + ',';
    out += format_double(r.gm_approx_value) + ',';
    if (r.dist_medians) out += format_double(*r.dist_medians);
    out += ',';
    out += c.name + ',';
    out += format_double(c.lhs) + ',';
    out += c.rel == CheckRelation::LessEq ? "<=" : "==";
    out += ',';
    out += format_double(c.rhs) + ',';
    out += format_double(c.slack) + ',';
    out += c.skipped ? "n/a" : (c.pass ? "true" : "false");
    out += '\n';
  }
  return out;
}

void save_report_csv(const std::vector<BoundReport>& reports, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << render_report_csv(reports);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string format_double(double v, int significant_digits) {
  if (v == 0.0) return "0";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, v);
  return buffer;
}

}  // namespace gmedian
