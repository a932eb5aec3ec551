#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmedian/bounds.hpp"
#include "gmedian/graph.hpp"

namespace gmedian {

// One stored edge: 1-based endpoints with r < s. Pairs that are not listed
// carry weight zero.
struct EdgeRecord {
  std::size_t r = 0;
  std::size_t s = 0;
  double w = 0.0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct GraphRecord {
  std::vector<double> vertex_weights;
  std::vector<EdgeRecord> edges;

  friend bool operator==(const GraphRecord&, const GraphRecord&) = default;
};

// On-disk graph-set document. generator is an optional free-form provenance
// block that round-trips verbatim.
struct GraphSetDocument {
  int format_version = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<GraphRecord> graphs;
  std::optional<nlohmann::json> generator;

  friend bool operator==(const GraphSetDocument&, const GraphSetDocument&) = default;
};

// Parsing throws std::runtime_error with a message naming the offending
// field on any structural problem: unsupported version, size mismatches,
// endpoints out of range or not r < s, duplicate pairs, weights outside
// [0, 1].
GraphSetDocument parse_document(const std::string& text);
GraphSetDocument load_document(const std::filesystem::path& path);

// Deterministic emitter: fixed key order and 17-significant-digit doubles,
// so equal documents serialize to identical bytes and every weight
// round-trips exactly.
std::string write_document(const GraphSetDocument& doc);
void save_document(const GraphSetDocument& doc, const std::filesystem::path& path);

GraphSet to_graph_set(const GraphSetDocument& doc);
GraphSetDocument from_graph_set(const GraphSet& s);

// load_document followed by to_graph_set.
GraphSet load_graph_set(const std::filesystem::path& path);

// CSV table of bound reports, one row per check, sorted by
// (instance_id, check_name). Header:
//   instance_id,cost,cl,gm,gm_approx,dist_medians,check_name,lhs,rel,rhs,slack,pass
std::string render_report_csv(const std::vector<BoundReport>& reports);
void save_report_csv(const std::vector<BoundReport>& reports,
                     const std::filesystem::path& path);

// Round-trip-safe decimal rendering (printf %.*g).
std::string format_double(double v, int significant_digits = 17);

}  // namespace gmedian
