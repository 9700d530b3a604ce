#include "multiforce/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <tuple>

#include "multiforce/errors.hpp"

namespace multiforce {

namespace {

enum class Section { edges, layers, vertices };

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

class EdgeListParser {
public:
    explicit EdgeListParser(ParseReport& report) : report_(report) {}

    MultiplexNetwork run(std::string_view text) {
        std::size_t line_no = 0;
        while (!text.empty()) {
            const std::size_t nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;
            try {
                handle(line, line_no);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(line_no, e.what());
            }
        }
        return std::move(network_);
    }

private:
    void handle(std::string_view line, std::size_t line_no) {
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().starts_with('#')) {
            return;
        }
        if (tokens.front().starts_with('[')) {
            if (tokens.size() != 1) {
                throw ParseError(line_no, "unexpected text after section header");
            }
            switch_section(tokens.front(), line_no);
            return;
        }
        switch (section_) {
        case Section::layers:
            if (tokens.size() != 1) {
                throw ParseError(line_no, "layer declaration takes exactly one label");
            }
            network_.add_layer(std::string(tokens[0]));
            return;
        case Section::vertices:
            if (tokens.size() != 2) {
                throw ParseError(line_no, "vertex declaration takes 'actor layer'");
            }
            network_.add_vertex(actor(tokens[0]), layer(tokens[1], line_no));
            seen_records_ = true;
            return;
        case Section::edges:
            if (tokens.size() != 3) {
                throw ParseError(line_no, "edge record takes 'actor actor layer', got " +
                                              std::to_string(tokens.size()) + " tokens");
            }
            add_edge(tokens, line_no);
            seen_records_ = true;
            return;
        }
    }

    void switch_section(std::string_view header, std::size_t line_no) {
        if (header == "[layers]") {
            if (seen_records_ || layers_declared_) {
                throw ParseError(line_no, "[layers] must appear once, before vertex and edge records");
            }
            layers_declared_ = true;
            section_ = Section::layers;
        } else if (header == "[vertices]") {
            section_ = Section::vertices;
        } else if (header == "[edges]") {
            section_ = Section::edges;
        } else {
            throw ParseError(line_no, "unknown section " + std::string(header));
        }
    }

    ActorId actor(std::string_view label) {
        if (auto id = network_.find_actor(label)) {
            return *id;
        }
        return network_.add_actor(std::string(label));
    }

    LayerId layer(std::string_view label, std::size_t line_no) {
        if (auto id = network_.find_layer(label)) {
            return *id;
        }
        if (layers_declared_) {
            throw ParseError(line_no, "undeclared layer '" + std::string(label) + "'");
        }
        return network_.add_layer(std::string(label));
    }

    void add_edge(const std::vector<std::string_view>& tokens, std::size_t line_no) {
        if (tokens[0] == tokens[1]) {
            throw ParseError(line_no, "self-loop on '" + std::string(tokens[0]) + "'");
        }
        const LayerId l = layer(tokens[2], line_no);
        const Vertex u = network_.add_vertex(actor(tokens[0]), l);
        const Vertex v = network_.add_vertex(actor(tokens[1]), l);
        if (network_.contains(Edge{u, v})) {
            ++report_.duplicate_edges;
            return;
        }
        network_.add_edge(u, v);
    }

    ParseReport& report_;
    MultiplexNetwork network_;
    Section section_ = Section::edges;
    bool layers_declared_ = false;
    bool seen_records_ = false;
};

}  // namespace

MultiplexNetwork parse_edge_list(std::string_view text) {
    ParseReport report;
    return parse_edge_list(text, report);
}

MultiplexNetwork parse_edge_list(std::string_view text, ParseReport& report) {
    return EdgeListParser(report).run(text);
}

std::string serialize_edge_list(const MultiplexNetwork& network) {
    std::string out = "# multiplex edge list\n[layers]\n";
    for (std::uint32_t l = 0; l < network.layer_count(); ++l) {
        out += network.layer_label(LayerId{l});
        out += '\n';
    }

    std::vector<bool> has_edge(network.vertex_count(), false);
    for (const IndexedEdge& e : network.indexed_edges()) {
        has_edge[e.u] = true;
        has_edge[e.v] = true;
    }
    std::vector<Vertex> isolated;
    for (std::size_t i = 0; i < network.vertex_count(); ++i) {
        if (!has_edge[i]) {
            isolated.push_back(network.vertices()[i]);
        }
    }
    // Labels, not ids, order the records, so parsing and re-serializing gives the same text.
    auto label = [&](ActorId a) -> const std::string& { return network.actor_label(a); };
    std::sort(isolated.begin(), isolated.end(), [&](const Vertex& a, const Vertex& b) {
        return a.layer != b.layer ? a.layer < b.layer : label(a.actor) < label(b.actor);
    });
    out += "[vertices]\n";
    for (const Vertex& v : isolated) {
        out += label(v.actor) + ' ' + network.layer_label(v.layer) + '\n';
    }

    struct Record {
        LayerId layer;
        std::string_view first, second;
    };
    std::vector<Record> records;
    for (const Edge& e : network.edges()) {
        std::string_view a = label(e.u.actor);
        std::string_view b = label(e.v.actor);
        if (b < a) {
            std::swap(a, b);
        }
        records.push_back({e.u.layer, a, b});
    }
    std::sort(records.begin(), records.end(), [](const Record& x, const Record& y) {
        return std::tie(x.layer, x.first, x.second) < std::tie(y.layer, y.first, y.second);
    });
    out += "[edges]\n";
    for (const Record& r : records) {
        out += std::string(r.first) + ' ' + std::string(r.second) + ' ' + network.layer_label(r.layer) + '\n';
    }
    return out;
}

std::string write_positions_json(const PositionMap& positions, const MultiplexNetwork& network) {
    const auto vertices = network.vertices();
    if (positions.size() < vertices.size()) {
        const Vertex& v = vertices[positions.size()];
        throw ValidationError("no position for vertex (" + network.actor_label(v.actor) + ", " +
                              network.layer_label(v.layer) + ")");
    }
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex& v = vertices[i];
        const Vec2 p = positions[static_cast<VertexIndex>(i)];
        nlohmann::ordered_json record;
        record["actor"] = network.actor_label(v.actor);
        record["layer"] = network.layer_label(v.layer);
        record["x"] = p.x;
        record["y"] = p.y;
        record["z"] = v.layer.value;
        records.push_back(std::move(record));
    }
    return records.dump(2) + '\n';
}

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

std::string write_metrics_csv(const std::vector<MetricsRow>& rows) {
    std::string out(metrics_csv_header);
    out += '\n';
    for (const MetricsRow& row : rows) {
        out += row.dataset + ',' + row.setting + ',' + format_double(row.internal_fit) + ',' +
               format_double(row.external_fit) + '\n';
    }
    return out;
}

std::vector<DatasetManifestEntry> parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir) {
    std::vector<DatasetManifestEntry> entries;
    try {
        const auto doc = nlohmann::json::parse(json_text);
        for (const auto& item : doc.at("datasets")) {
            DatasetManifestEntry entry;
            entry.name = item.at("name").get<std::string>();
            entry.path = item.at("path").get<std::string>();
            if (entry.path.is_relative() && !base_dir.empty()) {
                entry.path = base_dir / entry.path;
            }
            if (item.contains("layers")) {
                entry.layers = item["layers"].get<std::size_t>();
            }
            if (item.contains("actors")) {
                entry.actors = item["actors"].get<std::size_t>();
            }
            if (item.contains("edges")) {
                entry.edges = item["edges"].get<std::size_t>();
            }
            entry.directed_counted = item.value("directed_counted", false);
            entries.push_back(std::move(entry));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad manifest: ") + e.what());
    }
    return entries;
}

void validate_counts(const MultiplexNetwork& network, const DatasetManifestEntry& entry) {
    auto mismatch = [&](const char* what, std::size_t expected, std::size_t actual) {
        throw ValidationError(entry.name + ": expected " + std::to_string(expected) + " " + what + ", found " +
                              std::to_string(actual));
    };
    if (entry.layers && *entry.layers != network.layer_count()) {
        mismatch("layers", *entry.layers, network.layer_count());
    }
    if (entry.actors && *entry.actors != network.actor_count()) {
        mismatch("actors", *entry.actors, network.actor_count());
    }
    if (entry.edges) {
        const std::size_t e = network.edge_count();
        const bool ok = *entry.edges == e || (entry.directed_counted && *entry.edges == 2 * e);
        if (!ok) {
            mismatch("edges", *entry.edges, e);
        }
    }
}

MultiplexNetwork load_dataset(const DatasetManifestEntry& entry) {
    MultiplexNetwork network = parse_edge_list(read_file(entry.path));
    validate_counts(network, entry);
    return network;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw Error("write failed: " + path.string());
    }
}

}  // namespace multiforce
