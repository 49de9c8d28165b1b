#ifndef RTCOVER_INSTANCE_IO_HPP
#define RTCOVER_INSTANCE_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "rtcover/generators.hpp"
#include "rtcover/hypergraph.hpp"

namespace rtcover {

inline constexpr const char* kInstanceFormat = "rtgraph-v1";

struct InstanceFile {
  PartitionedHypergraph graph;
  std::optional<nlohmann::json> metadata;
};

// Canonical form: edges sorted lexicographically, keys in alphabetical
// order, two-space indent, trailing newline. Deserialize-then-serialize is
// byte-identical for canonical files.
std::string serialize_instance(
    const PartitionedHypergraph& h,
    const std::optional<nlohmann::json>& metadata = std::nullopt);

InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);
void write_instance(const std::string& path, const PartitionedHypergraph& h,
                    const std::optional<nlohmann::json>& metadata = std::nullopt);

nlohmann::json metadata_to_json(const GeneratorMetadata& meta);

}  // namespace rtcover

#endif  // RTCOVER_INSTANCE_IO_HPP
