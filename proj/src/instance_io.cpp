#include "rtcover/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rtcover {

using nlohmann::json;

std::string serialize_instance(const PartitionedHypergraph& h,
                               const std::optional<json>& metadata) {
  json doc;
  doc["format"] = kInstanceFormat;
  doc["r"] = h.r();
  doc["part_sizes"] = h.part_sizes();
  std::vector<std::vector<int>> edges = h.edges();
  std::sort(edges.begin(), edges.end());
  doc["edges"] = edges;
  if (metadata) doc["metadata"] = *metadata;
  return doc.dump(2) + "\n";
}

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid instance JSON: ") +
                                e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kInstanceFormat) {
    throw std::invalid_argument("instance file must have format rtgraph-v1");
  }
  if (!doc.contains("r") || !doc.contains("part_sizes") ||
      !doc.contains("edges")) {
    throw std::invalid_argument("instance file misses r/part_sizes/edges");
  }
  InstanceFile file;
  int r = doc["r"].get<int>();
  auto part_sizes = doc["part_sizes"].get<std::vector<int>>();
  auto edges = doc["edges"].get<std::vector<std::vector<int>>>();
  file.graph = PartitionedHypergraph(r, std::move(part_sizes), std::move(edges));
  if (doc.contains("metadata")) file.metadata = doc["metadata"];
  return file;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance(const std::string& path, const PartitionedHypergraph& h,
                    const std::optional<json>& metadata) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << serialize_instance(h, metadata);
}

json metadata_to_json(const GeneratorMetadata& meta) {
  json doc;
  doc["family"] = meta.family;
  doc["r"] = meta.r;
  doc["guaranteed_t"] = meta.guaranteed_t;
  if (!meta.guaranteed_kwise.empty()) {
    json pairs = json::array();
    for (auto [k, t] : meta.guaranteed_kwise) pairs.push_back({k, t});
    doc["guaranteed_kwise"] = pairs;
  }
  if (meta.claimed_tau) doc["claimed_tau"] = *meta.claimed_tau;
  if (meta.claimed_regular_degree) {
    doc["claimed_regular_degree"] = *meta.claimed_regular_degree;
  }
  if (meta.claimed_strict) doc["claimed_strict"] = *meta.claimed_strict;
  if (!meta.params.empty()) doc["params"] = meta.params;
  return doc;
}

}  // namespace rtcover
