#include "multiforce/render.hpp"

#include <array>
#include <string_view>

#include "multiforce/errors.hpp"
#include "multiforce/io.hpp"

namespace multiforce {

namespace {

constexpr std::array<std::string_view, 10> default_palette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
};

std::string color(const std::vector<std::string>& colors, std::size_t layer, std::string_view fallback) {
    return colors.empty() ? std::string(fallback) : colors[layer % colors.size()];
}

std::string escape(std::string_view text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::string num(double x) {
    return format_double(x);
}

std::string point_list(std::initializer_list<Vec2> points) {
    std::string out;
    for (const Vec2& p : points) {
        if (!out.empty()) {
            out += ' ';
        }
        out += num(p.x) + ',' + num(p.y);
    }
    return out;
}

}  // namespace

void RenderSpec::validate() const {
    if (!(panel_width > 0.0) || !(panel_height > 0.0)) {
        throw ValidationError("panel width and height must be positive");
    }
    if (arrangement == Arrangement::stacked_oblique && !(squash > 0.0)) {
        throw ValidationError("stacked panels need a positive squash factor");
    }
    if (margin < 0.0 || gutter < 0.0 || node_radius < 0.0 || layer_offset < 0.0) {
        throw ValidationError("margin, gutter, node radius and layer offset must be non-negative");
    }
}

Affine2 panel_transform(std::size_t layer_index, const RenderSpec& spec, const Frame& frame) {
    const double i = static_cast<double>(layer_index);
    const double sx = spec.panel_width / frame.width;
    Affine2 t;
    if (spec.arrangement == Arrangement::side_by_side) {
        const double sy = spec.panel_height / frame.height;
        t.a = sx;
        t.d = sy;
        t.tx = sx * frame.width / 2 + spec.margin + i * (spec.panel_width + spec.gutter);
        t.ty = sy * frame.height / 2 + spec.margin;
        return t;
    }
    const double sy = spec.squash * spec.panel_height / frame.height;
    t.a = sx;
    t.b = spec.shear_x * sy;
    t.d = sy;
    t.tx = sx * frame.width / 2 + t.b * frame.height / 2 + spec.margin;
    t.ty = sy * frame.height / 2 + spec.margin + i * spec.layer_offset;
    return t;
}

Vec2 canvas_size(std::size_t layer_count, const RenderSpec& spec) {
    const double n = static_cast<double>(layer_count);
    if (layer_count == 0) {
        return {2 * spec.margin, 2 * spec.margin};
    }
    if (spec.arrangement == Arrangement::side_by_side) {
        return {2 * spec.margin + n * spec.panel_width + (n - 1) * spec.gutter, 2 * spec.margin + spec.panel_height};
    }
    const double panel_h = spec.squash * spec.panel_height;
    return {2 * spec.margin + spec.panel_width + spec.shear_x * panel_h,
            2 * spec.margin + (n - 1) * spec.layer_offset + panel_h};
}

std::string render_svg(const MultiplexNetwork& network, const PositionMap& positions, const RenderSpec& spec,
                       const Frame& frame) {
    spec.validate();
    if (positions.size() != network.vertex_count()) {
        throw ValidationError("positions cover " + std::to_string(positions.size()) + " vertices, network has " +
                              std::to_string(network.vertex_count()));
    }
    const Vec2 size = canvas_size(network.layer_count(), spec);
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(size.x) + "\" height=\"" +
           num(size.y) + "\" viewBox=\"0 0 " + num(size.x) + ' ' + num(size.y) + "\">\n";
    if (network.layer_count() == 0) {
        out += "<!-- empty network: nothing to draw -->\n</svg>\n";
        return out;
    }

    std::vector<Affine2> transforms;
    for (std::size_t l = 0; l < network.layer_count(); ++l) {
        transforms.push_back(panel_transform(l, spec, frame));
    }
    const auto vertices = network.vertices();
    auto screen = [&](VertexIndex v) { return transforms[vertices[v].layer.value].apply(positions[v]); };

    if (spec.arrangement == Arrangement::stacked_oblique && spec.show_replica_lines) {
        out += "<g id=\"interlayer\" fill=\"none\" stroke=\"#aaaaaa\" stroke-width=\"1\" stroke-dasharray=\"3,3\">\n";
        for (std::uint32_t a = 0; a < network.actor_count(); ++a) {
            const auto reps = network.replica_indices(ActorId{a});
            if (reps.size() < 2) {
                continue;
            }
            out += "<polyline data-actor=\"" + escape(network.actor_label(ActorId{a})) + "\" points=\"";
            for (std::size_t i = 0; i < reps.size(); ++i) {
                const Vec2 p = screen(reps[i]);
                out += (i ? " " : "") + num(p.x) + ',' + num(p.y);
            }
            out += "\"/>\n";
        }
        out += "</g>\n";
    }

    for (std::uint32_t l = 0; l < network.layer_count(); ++l) {
        const LayerId layer{l};
        const Affine2& t = transforms[l];
        const std::string node_color = color(spec.node_colors, l, default_palette[l % default_palette.size()]);
        const std::string edge_color = color(spec.edge_colors, l, "#999999");
        const std::string label = escape(network.layer_label(layer));
        const double hw = frame.width / 2;
        const double hh = frame.height / 2;

        out += "<g id=\"layer-" + label + "\">\n";
        out += "<polygon class=\"panel\" fill=\"" + node_color + "\" fill-opacity=\"0.08\" stroke=\"#cccccc\" points=\"" +
               point_list({t.apply({-hw, -hh}), t.apply({hw, -hh}), t.apply({hw, hh}), t.apply({-hw, hh})}) +
               "\"/>\n";
        if (spec.label_placement == LabelPlacement::above) {
            const Vec2 corner = t.apply({-hw, -hh});
            out += "<text x=\"" + num(corner.x) + "\" y=\"" + num(corner.y - 4) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" + label + "</text>\n";
        }
        out += "<g class=\"edges\" stroke=\"" + edge_color + "\" stroke-width=\"1\">\n";
        for (const IndexedEdge& e : network.indexed_edges()) {
            if (vertices[e.u].layer != layer) {
                continue;
            }
            const Vec2 p = screen(e.u);
            const Vec2 q = screen(e.v);
            out += "<line x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" + num(q.x) + "\" y2=\"" + num(q.y) +
                   "\"/>\n";
        }
        out += "</g>\n";
        out += "<g class=\"nodes\" fill=\"" + node_color + "\" stroke=\"#ffffff\" stroke-width=\"1\">\n";
        for (VertexIndex v : network.layer_members(layer)) {
            const Vec2 p = screen(v);
            out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(spec.node_radius) +
                   "\"><title>" + escape(network.actor_label(vertices[v].actor)) + "</title></circle>\n";
        }
        out += "</g>\n</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace multiforce
