#include "qrpoly/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qrpoly/emit.hpp"
#include "qrpoly/quat.hpp"

namespace qrpoly {

namespace {

int write_output(const std::string& data, const std::string& path) {
    if (path.empty()) {
        std::cout << data;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return 2;
    }
    out << data;
    return 0;
}

Format parse_format(const std::string& name) {
    if (name == "svg") return Format::svg;
    if (name == "obj") return Format::obj;
    if (name == "json") return Format::json;
    throw CLI::ValidationError("--format", "must be one of svg, obj, json");
}

struct CommonOpts {
    int n = 3;
    double a1 = 1.0;
    double a2 = 1.0;
    double a3 = 1.0;
    int rings = 2;
    std::string variant = "isogonal";
    std::string format = "json";
    std::string out;
    double scale = 1.0;
    int precision = 6;

    RenderSpec render() const {
        RenderSpec spec;
        spec.output_path = out;
        spec.format = parse_format(format);
        spec.scale = scale;
        spec.precision = precision;
        return spec;
    }
};

void add_render_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format (svg, obj, json)");
    cmd->add_option("--out", o.out, "Output file (default: stdout)");
    cmd->add_option("--scale", o.scale, "Units per unit length");
    cmd->add_option("--precision", o.precision, "Decimal places, 1..12");
}

int emit_polygon(const Polygon& poly, const CommonOpts& o) {
    const RenderSpec spec = o.render();
    switch (spec.format) {
        case Format::svg: return write_output(emit_svg(svg_items(poly), spec), o.out);
        case Format::json: return write_output(emit_json(poly, spec), o.out);
        case Format::obj:
            std::cerr << "error: obj output needs a 3D solid\n";
            return 2;
    }
    return 2;
}

int emit_solid(const Polyhedron& solid, const CommonOpts& o) {
    const RenderSpec spec = o.render();
    switch (spec.format) {
        case Format::obj: return write_output(emit_obj(solid, spec), o.out);
        case Format::json: return write_output(emit_json(solid, spec), o.out);
        case Format::svg:
            std::cerr << "error: svg output rejects 3D input\n";
            return 2;
    }
    return 2;
}

int emit_patch(const Patch& patch, const CommonOpts& o) {
    const RenderSpec spec = o.render();
    int rc;
    switch (spec.format) {
        case Format::svg: rc = write_output(emit_svg(svg_items(patch), spec), o.out); break;
        case Format::json: rc = write_output(emit_json(patch, spec), o.out); break;
        case Format::obj:
            std::cerr << "error: obj output needs a 3D solid\n";
            return 2;
    }
    if (rc != 0) return rc;
    const PatchValidation v = validate_patch(patch);
    if (!v.pass()) {
        std::cerr << "error: patch failed validation\n";
        for (const std::string& f : v.failures) std::cerr << "  " << f << "\n";
        return 1;
    }
    return 0;
}

Patch make_tiling(const CommonOpts& o) {
    if (o.n == 3) {
        if (o.variant == "isotoxal") return isotoxal_hexagon_patch(o.a1, o.a2, o.rings);
        if (o.variant == "regular") return hexagon_patch(o.a1, o.a1, o.rings);
        if (o.variant == "isogonal") return hexagon_patch(o.a1, o.a2, o.rings);
    } else if (o.n == 4) {
        if (o.variant == "regular")
            return octagon_square_patch(o.a1, o.a2, o.rings, OctagonVariant::regular);
        if (o.variant == "isogonal")
            return octagon_square_patch(o.a1, o.a2, o.rings, OctagonVariant::isogonal);
        if (o.variant == "isotoxal")
            return octagon_square_patch(o.a1, o.a2, o.rings, OctagonVariant::isotoxal);
    } else if (o.n == 5) {
        if (o.variant == "regular") return decagon_patch("bowtie-exemplar", o.a1, o.a2);
        if (o.variant == "isogonal") return decagon_patch("isogonal-exemplar", o.a1, o.a2);
    }
    throw std::invalid_argument("tiling: unsupported --n/--variant combination");
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Quasi-regular polygons, prisms, duals and plane tilings"};
    app.require_subcommand(1);

    CommonOpts o;

    CLI::App* polygon_cmd =
        app.add_subcommand("polygon", "Isogonal 2n-gon (regular when a1 == a2)");
    polygon_cmd->add_option("--n", o.n, "Dihedral parameter, n >= 2");
    polygon_cmd->add_option("--a1", o.a1, "First edge-scale parameter");
    polygon_cmd->add_option("--a2", o.a2, "Second edge-scale parameter");
    add_render_flags(polygon_cmd, o);

    CLI::App* dual_cmd = app.add_subcommand("dual", "Isotoxal dual of the isogonal 2n-gon");
    dual_cmd->add_option("--n", o.n, "Dihedral parameter, n >= 2");
    dual_cmd->add_option("--a1", o.a1, "First edge-scale parameter");
    dual_cmd->add_option("--a2", o.a2, "Second edge-scale parameter");
    add_render_flags(dual_cmd, o);

    CLI::App* prism_cmd = app.add_subcommand("prism", "Quasi-regular prism from D_n x C_2");
    prism_cmd->add_option("--n", o.n, "Dihedral parameter, n >= 2");
    prism_cmd->add_option("--a1", o.a1, "Cap parameter");
    prism_cmd->add_option("--a2", o.a2, "Cap parameter");
    prism_cmd->add_option("--a3", o.a3, "Height parameter");
    add_render_flags(prism_cmd, o);

    CLI::App* dual_prism_cmd =
        app.add_subcommand("dual-prism", "Dipyramid dual by polar reciprocation");
    dual_prism_cmd->add_option("--n", o.n, "Dihedral parameter, n >= 2");
    dual_prism_cmd->add_option("--a1", o.a1, "Cap parameter");
    dual_prism_cmd->add_option("--a2", o.a2, "Cap parameter");
    dual_prism_cmd->add_option("--a3", o.a3, "Height parameter");
    add_render_flags(dual_prism_cmd, o);

    CLI::App* tiling_cmd = app.add_subcommand(
        "tiling", "Plane tiling patch (n=3 hexagons, n=4 octagons+squares, n=5 decagons)");
    tiling_cmd->add_option("--n", o.n, "Tile family selector: 3, 4 or 5");
    tiling_cmd->add_option("--a1", o.a1, "First edge-scale parameter");
    tiling_cmd->add_option("--a2", o.a2, "Second edge-scale parameter");
    tiling_cmd->add_option("--rings", o.rings, "Growth rings, >= 1");
    tiling_cmd->add_option("--variant", o.variant, "regular, isogonal or isotoxal");
    add_render_flags(tiling_cmd, o);

    CLI::App* group_cmd =
        app.add_subcommand("group-check", "Order of Aut(I2(n)+I2(n)) from quaternion pairs");
    group_cmd->add_option("--n", o.n, "Dihedral parameter, n >= 2");
    group_cmd->add_option("--out", o.out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (polygon_cmd->parsed()) return emit_polygon(isogonal_polygon(o.n, o.a1, o.a2), o);
        if (dual_cmd->parsed()) return emit_polygon(isotoxal_polygon(o.n, o.a1, o.a2), o);
        if (prism_cmd->parsed()) return emit_solid(build_prism(o.n, o.a1, o.a2, o.a3), o);
        if (dual_prism_cmd->parsed()) return emit_solid(dual_prism(o.n, o.a1, o.a2, o.a3), o);
        if (tiling_cmd->parsed()) return emit_patch(make_tiling(o), o);
        if (group_cmd->parsed()) {
            const long order = aut_group_order(o.n);
            return write_output("aut-order " + std::to_string(order) + "\n", o.out);
        }
    } catch (const TilingConflict& e) {
        std::cerr << "error: " << e.what() << " near (" << e.vertex.x << ", " << e.vertex.y
                  << ")\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace qrpoly
