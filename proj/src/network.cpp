#include "multiforce/network.hpp"

#include <algorithm>
#include <utility>

#include "multiforce/errors.hpp"

namespace multiforce {

ActorId MultiplexNetwork::add_actor(std::string label) {
    if (actor_lookup_.contains(label)) {
        throw DuplicateLabelError(label);
    }
    const ActorId id{static_cast<std::uint32_t>(actor_labels_.size())};
    actor_lookup_.emplace(label, id);
    actor_labels_.push_back(std::move(label));
    actor_replicas_.emplace_back();
    return id;
}

LayerId MultiplexNetwork::add_layer(std::string label) {
    if (layer_lookup_.contains(label)) {
        throw DuplicateLabelError(label);
    }
    const LayerId id{static_cast<std::uint32_t>(layer_labels_.size())};
    layer_lookup_.emplace(label, id);
    layer_labels_.push_back(std::move(label));
    layer_members_.emplace_back();
    return id;
}

void MultiplexNetwork::check_actor(ActorId id) const {
    if (id.value >= actor_labels_.size()) {
        throw UnknownIdError("unknown actor id " + std::to_string(id.value));
    }
}

void MultiplexNetwork::check_layer(LayerId id) const {
    if (id.value >= layer_labels_.size()) {
        throw UnknownIdError("unknown layer id " + std::to_string(id.value));
    }
}

Vertex MultiplexNetwork::add_vertex(ActorId actor, LayerId layer) {
    check_actor(actor);
    check_layer(layer);
    const Vertex v{actor, layer};
    const auto [it, inserted] =
        vertex_lookup_.try_emplace(vertex_key(v), static_cast<VertexIndex>(vertices_.size()));
    if (!inserted) {
        return v;
    }
    const VertexIndex index = it->second;
    vertices_.push_back(v);
    layer_members_[layer.value].push_back(index);

    auto& reps = actor_replicas_[actor.value];
    const auto pos = std::upper_bound(reps.begin(), reps.end(), layer, [this](LayerId l, VertexIndex i) {
        return l < vertices_[i].layer;
    });
    reps.insert(pos, index);
    return v;
}

namespace {

std::uint64_t edge_key(VertexIndex a, VertexIndex b) {
    return (std::uint64_t{a} << 32) | b;
}

}  // namespace

Edge MultiplexNetwork::add_edge(Vertex u, Vertex v) {
    if (u.layer != v.layer) {
        throw MultiplexViolationError("edge endpoints on different layers (" + std::to_string(u.layer.value) +
                                      " and " + std::to_string(v.layer.value) + ")");
    }
    if (u == v) {
        throw SelfLoopError("self-loop on actor " + std::to_string(u.actor.value));
    }
    const auto ui = vertex_index(u);
    const auto vi = vertex_index(v);
    if (!ui || !vi) {
        const Vertex& missing = ui ? v : u;
        throw UnknownIdError("vertex (actor " + std::to_string(missing.actor.value) + ", layer " +
                             std::to_string(missing.layer.value) + ") not in network");
    }
    Edge e = u.actor < v.actor ? Edge{u, v} : Edge{v, u};
    VertexIndex a = *ui;
    VertexIndex b = *vi;
    if (v.actor < u.actor) {
        std::swap(a, b);
    }
    if (edge_lookup_.insert(edge_key(a, b)).second) {
        edges_.push_back(e);
        indexed_edges_.push_back({a, b});
    }
    return e;
}

bool MultiplexNetwork::contains(const Edge& e) const {
    const auto ui = vertex_index(e.u);
    const auto vi = vertex_index(e.v);
    if (!ui || !vi) {
        return false;
    }
    return edge_lookup_.contains(edge_key(*ui, *vi)) || edge_lookup_.contains(edge_key(*vi, *ui));
}

const std::string& MultiplexNetwork::actor_label(ActorId id) const {
    check_actor(id);
    return actor_labels_[id.value];
}

const std::string& MultiplexNetwork::layer_label(LayerId id) const {
    check_layer(id);
    return layer_labels_[id.value];
}

std::optional<ActorId> MultiplexNetwork::find_actor(std::string_view label) const {
    if (auto it = actor_lookup_.find(std::string(label)); it != actor_lookup_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<LayerId> MultiplexNetwork::find_layer(std::string_view label) const {
    if (auto it = layer_lookup_.find(std::string(label)); it != layer_lookup_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<VertexIndex> MultiplexNetwork::vertex_index(Vertex v) const {
    if (auto it = vertex_lookup_.find(vertex_key(v)); it != vertex_lookup_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::vector<Vertex> MultiplexNetwork::replicas(ActorId actor) const {
    std::vector<Vertex> out;
    for (VertexIndex i : replica_indices(actor)) {
        out.push_back(vertices_[i]);
    }
    return out;
}

std::span<const VertexIndex> MultiplexNetwork::replica_indices(ActorId actor) const {
    check_actor(actor);
    return actor_replicas_[actor.value];
}

std::span<const VertexIndex> MultiplexNetwork::layer_members(LayerId layer) const {
    check_layer(layer);
    return layer_members_[layer.value];
}

LayerSubgraph MultiplexNetwork::layer_subgraph(LayerId layer) const {
    LayerSubgraph sub;
    for (VertexIndex i : layer_members(layer)) {
        sub.vertices.push_back(vertices_[i]);
    }
    for (const Edge& e : edges_) {
        if (e.u.layer == layer) {
            sub.edges.push_back(e);
        }
    }
    return sub;
}

}  // namespace multiforce
