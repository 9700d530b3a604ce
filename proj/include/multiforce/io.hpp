#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiforce/layout.hpp"
#include "multiforce/network.hpp"

namespace multiforce {

// Edge-list text format, one record per line:
//
//   # comment
//   [layers]                  optional, fixes layer order
//   friends
//   [vertices]                optional, for isolated vertices
//   alice friends
//   [edges]                   optional header; a headerless body is edges
//   alice bob friends
//
// Labels are whitespace-free tokens. Without a [layers] section, layers and
// actors are numbered in first-encounter order.

struct ParseReport {
    /// Edge records that repeated an existing edge (in either orientation).
    std::size_t duplicate_edges = 0;
};

MultiplexNetwork parse_edge_list(std::string_view text);
MultiplexNetwork parse_edge_list(std::string_view text, ParseReport& report);

/// Canonical text: layers in id order, isolated vertices, then edges sorted by
/// layer and endpoint labels (smaller label first). Actors without any vertex
/// are not representable.
std::string serialize_edge_list(const MultiplexNetwork& network);

/// JSON array with one {actor, layer, x, y, z} object per vertex, in vertex
/// order; z is the layer index.
std::string write_positions_json(const PositionMap& positions, const MultiplexNetwork& network);

struct MetricsRow {
    std::string dataset;
    std::string setting;
    double internal_fit = 0.0;
    double external_fit = 0.0;
};

inline constexpr std::string_view metrics_csv_header = "dataset,setting,internal_fit,external_fit";

std::string write_metrics_csv(const std::vector<MetricsRow>& rows);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

struct DatasetManifestEntry {
    std::string name;
    std::filesystem::path path;
    std::optional<std::size_t> layers;
    std::optional<std::size_t> actors;
    std::optional<std::size_t> edges;
    /// Accept an expected edge count equal to twice the undirected count.
    bool directed_counted = false;
};

/// Reads {"datasets": [{"name", "path", "layers"?, "actors"?, "edges"?,
/// "directed_counted"?}, ...]}. Relative paths resolve against base_dir.
std::vector<DatasetManifestEntry> parse_manifest(std::string_view json_text,
                                                 const std::filesystem::path& base_dir = {});

/// Parses the file and checks it against the expected counts.
MultiplexNetwork load_dataset(const DatasetManifestEntry& entry);

/// Throws ValidationError naming the first count that differs.
void validate_counts(const MultiplexNetwork& network, const DatasetManifestEntry& entry);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace multiforce
