#pragma once

#include <string>
#include <vector>

#include "qrpoly/polygon.hpp"
#include "qrpoly/prism.hpp"
#include "qrpoly/tiling.hpp"

namespace qrpoly {

enum class Format { svg, obj, json };

struct RenderSpec {
    std::string output_path;  // empty = stdout
    Format format = Format::json;
    double scale = 1.0;
    int precision = 6;  // decimal places, in [1, 12]
};

void check_render_spec(const RenderSpec& spec);

/// Fixed-point decimal with canonical zero (never "-0.000000").
std::string format_fixed(double value, int precision);

/// One <polygon> element per item, input order, y axis flipped so CCW renders
/// counter-clockwise on screen; viewBox = bounding box + 5% margin.
/// Byte-identical for identical inputs.
struct SvgItem {
    std::vector<Vec2> vertices;
    std::string kind;
};
std::string emit_svg(const std::vector<SvgItem>& items, const RenderSpec& spec);

std::vector<SvgItem> svg_items(const Polygon& p);
std::vector<SvgItem> svg_items(const Patch& p);

/// Wavefront geometry: "v x y z" then 1-based "f i j k ..." lines, faces CCW
/// seen from outside.
std::string emit_obj(const Polyhedron& p, const RenderSpec& spec);

/// Fixed key order: kind, n, params, vertices, edges, faces, metrics,
/// validation. Numbers at `precision` decimals.
std::string emit_json(const Polygon& p, const RenderSpec& spec);
std::string emit_json(const Polyhedron& p, const RenderSpec& spec);
std::string emit_json(const Patch& p, const RenderSpec& spec);

}  // namespace qrpoly
