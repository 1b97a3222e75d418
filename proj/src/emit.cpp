#include "qrpoly/emit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qrpoly {

namespace {

const char* tile_fill(const std::string& kind) {
    if (kind.find("regular") != std::string::npos) return "#cde7cd";
    if (kind.find("isogonal") != std::string::npos) return "#c9d8ef";
    if (kind.find("isotoxal") != std::string::npos) return "#efd8c9";
    if (kind == "square") return "#e9e4cf";
    if (kind == "bowtie") return "#e0cfe8";
    if (kind == "triangle") return "#d8efc9";
    return "#dddddd";
}

class JsonWriter {
  public:
    explicit JsonWriter(int precision) : precision_(precision) {}

    void begin_object() { out_ << "{"; fresh_ = true; }
    void end_object() { out_ << "}"; fresh_ = false; }
    void key(const std::string& k) {
        if (!fresh_) out_ << ",";
        fresh_ = false;
        out_ << "\"" << k << "\":";
    }
    void value_string(const std::string& s) { out_ << "\"" << s << "\""; }
    void value_int(long v) { out_ << v; }
    void value_number(double v) { out_ << format_fixed(v, precision_); }
    void raw(const std::string& s) { out_ << s; }

    void key_string(const std::string& k, const std::string& v) { key(k); value_string(v); }
    void key_int(const std::string& k, long v) { key(k); value_int(v); }
    void key_number(const std::string& k, double v) { key(k); value_number(v); }

    void key_numbers(const std::string& k, const std::vector<double>& vals) {
        key(k);
        out_ << "[";
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) out_ << ",";
            value_number(vals[i]);
        }
        out_ << "]";
    }

    void key_index_lists(const std::string& k, const std::vector<std::vector<int>>& lists) {
        key(k);
        out_ << "[";
        for (std::size_t i = 0; i < lists.size(); ++i) {
            if (i) out_ << ",";
            out_ << "[";
            for (std::size_t j = 0; j < lists[i].size(); ++j) {
                if (j) out_ << ",";
                out_ << lists[i][j];
            }
            out_ << "]";
        }
        out_ << "]";
    }

    std::string str() const { return out_.str(); }

  private:
    std::ostringstream out_;
    int precision_;
    bool fresh_ = true;
};

std::vector<std::vector<int>> cycle_edges(std::size_t k) {
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < k; ++i)
        edges.push_back({static_cast<int>(i), static_cast<int>((i + 1) % k)});
    return edges;
}

void write_vertex_array2(JsonWriter& w, const std::vector<Vec2>& verts, double scale) {
    w.raw("[");
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) w.raw(",");
        w.raw("[");
        w.value_number(scale * verts[i].x);
        w.raw(",");
        w.value_number(scale * verts[i].y);
        w.raw("]");
    }
    w.raw("]");
}

}  // namespace

void check_render_spec(const RenderSpec& spec) {
    if (spec.precision < 1 || spec.precision > 12)
        throw std::invalid_argument("render spec: precision must lie in [1, 12]");
    if (spec.scale <= 0.0) throw std::invalid_argument("render spec: scale must be positive");
}

std::string format_fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    std::string s(buf);
    // Canonical zero: "-0.000000" -> "0.000000".
    if (s[0] == '-' && s.find_first_not_of("0.", 1) == std::string::npos) s.erase(0, 1);
    return s;
}

std::string emit_svg(const std::vector<SvgItem>& items, const RenderSpec& spec) {
    check_render_spec(spec);
    std::vector<Vec2> all;
    for (const SvgItem& item : items) {
        for (const Vec2& p : item.vertices) all.push_back({spec.scale * p.x, -spec.scale * p.y});
    }
    BBox2 box = all.empty() ? BBox2{0, 0, 1, 1} : BBox2::of(all);
    const double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    const double margin = 0.05 * (span > 0 ? span : 1.0);
    const int prec = spec.precision;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << format_fixed(box.xmin - margin, prec) << " " << format_fixed(box.ymin - margin, prec)
        << " " << format_fixed(box.xmax - box.xmin + 2 * margin, prec) << " "
        << format_fixed(box.ymax - box.ymin + 2 * margin, prec) << "\">\n";
    const std::string stroke_width = format_fixed(0.004 * (span > 0 ? span : 1.0), prec);
    for (const SvgItem& item : items) {
        out << "<polygon points=\"";
        for (std::size_t i = 0; i < item.vertices.size(); ++i) {
            if (i) out << " ";
            out << format_fixed(spec.scale * item.vertices[i].x, prec) << ","
                << format_fixed(-spec.scale * item.vertices[i].y, prec);
        }
        out << "\" fill=\"" << tile_fill(item.kind) << "\" stroke=\"#333333\" stroke-width=\""
            << stroke_width << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::vector<SvgItem> svg_items(const Polygon& p) {
    return {SvgItem{p.vertices, to_string(p.kind)}};
}

std::vector<SvgItem> svg_items(const Patch& p) {
    std::vector<SvgItem> items;
    items.reserve(p.tiles.size());
    for (const PlacedTile& t : p.tiles)
        items.push_back(SvgItem{p.tile_vertices(t), p.proto_of(t).name});
    return items;
}

std::string emit_obj(const Polyhedron& p, const RenderSpec& spec) {
    check_render_spec(spec);
    std::ostringstream out;
    for (const Vec3& v : p.vertices) {
        out << "v " << format_fixed(spec.scale * v.x, spec.precision) << " "
            << format_fixed(spec.scale * v.y, spec.precision) << " "
            << format_fixed(spec.scale * v.z, spec.precision) << "\n";
    }
    for (const auto& face : p.faces) {
        out << "f";
        for (int idx : face) out << " " << idx + 1;
        out << "\n";
    }
    return out.str();
}

std::string emit_json(const Polygon& p, const RenderSpec& spec) {
    check_render_spec(spec);
    const PolygonMetrics m = polygon_metrics(p);
    JsonWriter w(spec.precision);
    w.begin_object();
    w.key_string("kind", to_string(p.kind));
    w.key_int("n", p.n);
    w.key("params");
    {
        JsonWriter params(spec.precision);
        params.begin_object();
        params.key_number("a1", p.a1);
        params.key_number("a2", p.a2);
        params.end_object();
        w.raw(params.str());
    }
    w.key("vertices");
    write_vertex_array2(w, p.vertices, spec.scale);
    w.key_index_lists("edges", cycle_edges(p.vertices.size()));
    std::vector<int> face(p.vertices.size());
    for (std::size_t i = 0; i < face.size(); ++i) face[i] = static_cast<int>(i);
    w.key_index_lists("faces", {face});
    w.key("metrics");
    {
        JsonWriter met(spec.precision);
        met.begin_object();
        if (p.kind == PolygonKind::isotoxal || p.lambda > 0.0)
            met.key_number("lambda", p.lambda);
        met.key_numbers("edge_lengths", m.edge_classes);
        std::vector<double> degs;
        for (double a : m.angle_classes) degs.push_back(a * 180.0 / kPi);
        met.key_numbers("interior_angles_deg", degs);
        met.key_numbers("circumradii", value_classes(m.circumradii, 1e-9));
        met.end_object();
        w.raw(met.str());
    }
    w.key("validation");
    w.raw("{}");
    w.end_object();
    return w.str() + "\n";
}

std::string emit_json(const Polyhedron& p, const RenderSpec& spec) {
    check_render_spec(spec);
    JsonWriter w(spec.precision);
    w.begin_object();
    w.key_string("kind", to_string(p.kind));
    w.key_int("n", p.n);
    w.key("params");
    {
        JsonWriter params(spec.precision);
        params.begin_object();
        params.key_number("a1", p.a1);
        params.key_number("a2", p.a2);
        params.key_number("a3", p.a3);
        params.end_object();
        w.raw(params.str());
    }
    w.key("vertices");
    w.raw("[");
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) w.raw(",");
        w.raw("[");
        w.value_number(spec.scale * p.vertices[i].x);
        w.raw(",");
        w.value_number(spec.scale * p.vertices[i].y);
        w.raw(",");
        w.value_number(spec.scale * p.vertices[i].z);
        w.raw("]");
    }
    w.raw("]");
    std::vector<std::vector<int>> edges;
    for (const auto& e : p.edges) edges.push_back({e[0], e[1]});
    w.key_index_lists("edges", edges);
    w.key_index_lists("faces", p.faces);
    w.key("metrics");
    {
        JsonWriter met(spec.precision);
        met.begin_object();
        if (p.scale_r2 > 0.0) met.key_number("scale_r2", p.scale_r2);
        met.key_numbers("edge_lengths", edge_length_classes(p));
        std::map<std::string, int> census;
        for (const FaceReport& r : classify_faces(p)) ++census[r.shape];
        met.key("face_census");
        met.raw("{");
        bool first = true;
        for (const auto& [shape, count] : census) {
            if (!first) met.raw(",");
            first = false;
            met.raw("\"" + shape + "\":" + std::to_string(count));
        }
        met.raw("}");
        met.end_object();
        w.raw(met.str());
    }
    w.key("validation");
    {
        const bool euler_ok = euler_characteristic(p) == 2;
        w.raw(std::string("{\"euler\":\"") + (euler_ok ? "pass" : "fail") + "\"}");
    }
    w.end_object();
    return w.str() + "\n";
}

std::string emit_json(const Patch& p, const RenderSpec& spec) {
    check_render_spec(spec);
    const PatchValidation v = validate_patch(p);
    JsonWriter w(spec.precision);
    w.begin_object();
    w.key_string("kind", p.variant.empty() ? p.family : p.family + ":" + p.variant);
    w.key_int("n", p.family == "octagon-square" ? 4
                   : (p.family.rfind("decagon", 0) == 0 ? 5 : 3));
    w.key("params");
    {
        JsonWriter params(spec.precision);
        params.begin_object();
        params.key_number("a1", p.a1);
        params.key_number("a2", p.a2);
        params.key_int("rings", p.rings);
        params.end_object();
        w.raw(params.str());
    }
    // Shared vertex pool; each tile becomes a face of vertex indices.
    w.key("vertices");
    std::vector<Vec2> pool;
    for (const PatchVertex& pv : p.vertex_index) pool.push_back(pv.pos);
    write_vertex_array2(w, pool, spec.scale);
    std::vector<std::vector<int>> edges;
    for (const PatchEdge& e : p.edge_index) edges.push_back({e.v0, e.v1});
    w.key_index_lists("edges", edges);

    // Recover tile corner -> pooled vertex ids from the stored corner table.
    std::vector<std::vector<int>> faces(p.tiles.size());
    for (std::size_t t = 0; t < p.tiles.size(); ++t)
        faces[t].resize(p.proto_of(p.tiles[t]).vertices.size(), -1);
    for (std::size_t vi = 0; vi < p.vertex_index.size(); ++vi) {
        for (const auto& [tid, corner] : p.vertex_index[vi].corners)
            faces[static_cast<std::size_t>(tid)][static_cast<std::size_t>(corner)] =
                static_cast<int>(vi);
    }
    w.key_index_lists("faces", faces);

    w.key("metrics");
    {
        JsonWriter met(spec.precision);
        met.begin_object();
        met.key_int("tiles", static_cast<long>(p.tiles.size()));
        met.key("tile_census");
        std::map<std::string, int> census;
        for (const PlacedTile& t : p.tiles) ++census[p.proto_of(t).name];
        met.raw("{");
        bool first = true;
        for (const auto& [name, count] : census) {
            if (!first) met.raw(",");
            first = false;
            met.raw("\"" + name + "\":" + std::to_string(count));
        }
        met.raw("}");
        met.key_int("holes", v.hole_count);
        met.end_object();
        w.raw(met.str());
    }
    w.key("validation");
    {
        JsonWriter val(spec.precision);
        val.begin_object();
        val.key_string("overlap", v.overlap_free ? "pass" : "fail");
        val.key_string("edge_matching", v.edges_match ? "pass" : "fail");
        val.key_string("angle_sum", v.angle_sums_ok ? "pass" : "fail");
        val.key_int("interior_vertices", v.interior_vertices);
        val.key_int("boundary_vertices", v.boundary_vertices);
        val.key("configs");
        val.raw("{");
        bool first = true;
        for (const auto& [cfg, count] : v.vertex_census) {
            if (!first) val.raw(",");
            first = false;
            val.raw("\"" + cfg + "\":" + std::to_string(count));
        }
        val.raw("}");
        val.end_object();
        w.raw(val.str());
    }
    w.end_object();
    return w.str() + "\n";
}

}  // namespace qrpoly
