#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multiforce/geometry.hpp"
#include "multiforce/layout.hpp"
#include "multiforce/network.hpp"

namespace multiforce {

enum class Arrangement {
    /// One panel per layer, left to right.
    side_by_side,
    /// Sheared panels stacked top to bottom, a cheap stand-in for a 2.5D view.
    stacked_oblique,
};

enum class LabelPlacement { above, none };

/// Affine map p -> (a*x + b*y + tx, c*x + d*y + ty).
struct Affine2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    double tx = 0.0, ty = 0.0;

    Vec2 apply(Vec2 p) const { return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty}; }
};

struct RenderSpec {
    Arrangement arrangement = Arrangement::side_by_side;
    // Sizes in pixels.
    double panel_width = 300.0;
    double panel_height = 300.0;
    double margin = 20.0;
    double gutter = 20.0;
    double node_radius = 4.0;
    bool show_replica_lines = true;
    LabelPlacement label_placement = LabelPlacement::above;
    /// Cycled by layer id; empty means the built-in palette.
    std::vector<std::string> node_colors;
    std::vector<std::string> edge_colors;
    // Stacked mode: horizontal shift per unit of (squashed) panel height,
    // vertical squash of each panel and vertical distance between layers.
    double shear_x = 0.6;
    double squash = 0.4;
    double layer_offset = 150.0;

    /// Throws ValidationError when a panel would have zero area.
    void validate() const;
};

/// Maps frame coordinates of layer `layer_index` into its canvas region.
Affine2 panel_transform(std::size_t layer_index, const RenderSpec& spec, const Frame& frame);

/// Canvas width and height in pixels.
Vec2 canvas_size(std::size_t layer_count, const RenderSpec& spec);

/// SVG 1.1 document: group "interlayer" with replica polylines (stacked mode
/// only), then one group "layer-<label>" per layer holding its panel, edges
/// and vertex circles.
std::string render_svg(const MultiplexNetwork& network, const PositionMap& positions, const RenderSpec& spec,
                       const Frame& frame);

}  // namespace multiforce
