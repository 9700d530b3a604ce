#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace multiforce {

struct ActorId {
    std::uint32_t value = 0;
    auto operator<=>(const ActorId&) const = default;
};

struct LayerId {
    std::uint32_t value = 0;
    auto operator<=>(const LayerId&) const = default;
};

/// One appearance of an actor on a layer.
struct Vertex {
    ActorId actor;
    LayerId layer;
    auto operator<=>(const Vertex&) const = default;
};

/// Undirected in-layer edge, stored with u.actor < v.actor.
struct Edge {
    Vertex u;
    Vertex v;
    auto operator<=>(const Edge&) const = default;
};

/// Position of a vertex in MultiplexNetwork::vertices().
using VertexIndex = std::uint32_t;

struct IndexedEdge {
    VertexIndex u;
    VertexIndex v;
};

struct LayerSubgraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

/// Multiplex network G = (actors, layers, vertices, in-layer edges).
///
/// Actors and layers get dense ids in insertion order; the layer id doubles as
/// the z coordinate of a drawing. Vertices are explicit, so an actor can be
/// missing from some layers. Built by a single writer, then shared read-only.
///
/// Besides the label-level API the network keeps index-level views (vertex
/// indices per layer, per actor, per edge) for the layout inner loops.
class MultiplexNetwork {
public:
    ActorId add_actor(std::string label);
    LayerId add_layer(std::string label);

    /// Idempotent: re-adding an existing (actor, layer) pair returns it.
    Vertex add_vertex(ActorId actor, LayerId layer);

    /// Stores the canonical form of {u, v}. Adding an existing edge again is a
    /// no-op that returns the stored edge.
    Edge add_edge(Vertex u, Vertex v);

    bool contains(Vertex v) const { return vertex_index(v).has_value(); }
    bool contains(const Edge& e) const;

    std::size_t actor_count() const noexcept { return actor_labels_.size(); }
    std::size_t layer_count() const noexcept { return layer_labels_.size(); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return actor_labels_.empty() && layer_labels_.empty(); }

    const std::string& actor_label(ActorId id) const;
    const std::string& layer_label(LayerId id) const;
    std::optional<ActorId> find_actor(std::string_view label) const;
    std::optional<LayerId> find_layer(std::string_view label) const;

    /// Vertices in insertion order; a vertex's position here is its VertexIndex.
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    /// Edges in insertion order.
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const IndexedEdge> indexed_edges() const noexcept { return indexed_edges_; }

    std::optional<VertexIndex> vertex_index(Vertex v) const;
    const Vertex& vertex(VertexIndex index) const { return vertices_.at(index); }

    /// All vertices of an actor ordered by layer id.
    std::vector<Vertex> replicas(ActorId actor) const;
    /// Vertex indices of an actor's replicas, ordered by layer id.
    std::span<const VertexIndex> replica_indices(ActorId actor) const;

    /// Vertex indices on a layer, in vertex-index order.
    std::span<const VertexIndex> layer_members(LayerId layer) const;

    /// Vertices and edges of one layer, both in the network's storage order.
    LayerSubgraph layer_subgraph(LayerId layer) const;

private:
    void check_actor(ActorId id) const;
    void check_layer(LayerId id) const;
    static std::uint64_t vertex_key(Vertex v) {
        return (std::uint64_t{v.actor.value} << 32) | v.layer.value;
    }

    std::vector<std::string> actor_labels_;
    std::vector<std::string> layer_labels_;
    std::unordered_map<std::string, ActorId> actor_lookup_;
    std::unordered_map<std::string, LayerId> layer_lookup_;

    std::vector<Vertex> vertices_;
    std::unordered_map<std::uint64_t, VertexIndex> vertex_lookup_;
    std::vector<std::vector<VertexIndex>> actor_replicas_;
    std::vector<std::vector<VertexIndex>> layer_members_;

    std::vector<Edge> edges_;
    std::vector<IndexedEdge> indexed_edges_;
    std::unordered_set<std::uint64_t> edge_lookup_;
};

}  // namespace multiforce
