#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrpoly/emit.hpp"
#include "qrpoly/quat.hpp"

namespace py = pybind11;
using namespace qrpoly;

namespace {

py::list vec2_list(const std::vector<Vec2>& pts) {
    py::list out;
    for (const Vec2& p : pts) out.append(py::make_tuple(p.x, p.y));
    return out;
}

py::dict polygon_dict(const Polygon& p) {
    py::dict d;
    d["kind"] = to_string(p.kind);
    d["n"] = p.n;
    d["a1"] = p.a1;
    d["a2"] = p.a2;
    if (p.kind == PolygonKind::isotoxal || p.lambda > 0.0) d["lambda"] = p.lambda;
    d["vertices"] = vec2_list(p.vertices);
    const PolygonMetrics m = polygon_metrics(p);
    d["edge_lengths"] = m.edge_classes;
    py::list angles;
    for (double a : m.angle_classes) angles.append(a * 180.0 / kPi);
    d["interior_angles_deg"] = angles;
    return d;
}

py::dict polyhedron_dict(const Polyhedron& p) {
    py::dict d;
    d["kind"] = to_string(p.kind);
    d["n"] = p.n;
    py::list verts;
    for (const Vec3& v : p.vertices) verts.append(py::make_tuple(v.x, v.y, v.z));
    d["vertices"] = verts;
    py::list faces;
    for (const auto& f : p.faces) {
        py::list face;
        for (int i : f) face.append(i);
        faces.append(face);
    }
    d["faces"] = faces;
    py::list edges;
    for (const auto& e : p.edges) edges.append(py::make_tuple(e[0], e[1]));
    d["edges"] = edges;
    d["edge_lengths"] = edge_length_classes(p);
    d["euler"] = euler_characteristic(p);
    if (p.scale_r2 > 0.0) d["scale_r2"] = p.scale_r2;
    py::dict census;
    for (const FaceReport& r : classify_faces(p)) {
        const std::string key = r.shape;
        census[py::str(key)] = census.contains(py::str(key))
                                   ? census[py::str(key)].cast<int>() + 1
                                   : 1;
    }
    d["face_census"] = census;
    return d;
}

py::dict validation_dict(const PatchValidation& v) {
    py::dict d;
    d["pass"] = v.pass();
    d["overlap"] = v.overlap_free;
    d["edge_matching"] = v.edges_match;
    d["angle_sum"] = v.angle_sums_ok;
    d["interior_vertices"] = v.interior_vertices;
    d["boundary_vertices"] = v.boundary_vertices;
    d["holes"] = v.hole_count;
    py::dict census;
    for (const auto& [cfg, count] : v.vertex_census) census[py::str(cfg)] = count;
    d["configs"] = census;
    return d;
}

OctagonVariant parse_variant(const std::string& name) {
    if (name == "regular") return OctagonVariant::regular;
    if (name == "isogonal") return OctagonVariant::isogonal;
    if (name == "isotoxal") return OctagonVariant::isotoxal;
    throw std::invalid_argument("variant must be regular, isogonal or isotoxal");
}

}  // namespace

PYBIND11_MODULE(qrpoly, m) {
    m.doc() = "Quasi-regular polygons, prisms and duals from dihedral Coxeter "
              "systems, with plane tiling generators";

    m.def("aut_group_order", &aut_group_order, py::arg("n"),
          "Order of Aut(I2(n)+I2(n)) counted from quaternion pair transforms");
    m.def(
        "dicyclic_root_system",
        [](int n) {
            py::list out;
            for (const Quat& q : dicyclic_root_system(n))
                out.append(py::make_tuple(q.w, q.x, q.y, q.z));
            return out;
        },
        py::arg("n"), "The 4n unit quaternions {q^k, q^k e2}");

    m.def("dual_scale", &dual_scale, py::arg("n"), py::arg("a1"), py::arg("a2"),
          "Dual polygon scale factor lambda");
    m.def(
        "regular_polygon",
        [](int n, double a) { return polygon_dict(regular_polygon(n, a)); }, py::arg("n"),
        py::arg("a"));
    m.def(
        "isogonal_polygon",
        [](int n, double a1, double a2) { return polygon_dict(isogonal_polygon(n, a1, a2)); },
        py::arg("n"), py::arg("a1"), py::arg("a2"));
    m.def(
        "isotoxal_polygon",
        [](int n, double a1, double a2) { return polygon_dict(isotoxal_polygon(n, a1, a2)); },
        py::arg("n"), py::arg("a1"), py::arg("a2"));

    m.def(
        "build_prism",
        [](int n, double a1, double a2, double a3) {
            return polyhedron_dict(build_prism(n, a1, a2, a3));
        },
        py::arg("n"), py::arg("a1"), py::arg("a2"), py::arg("a3"));
    m.def(
        "dual_prism",
        [](int n, double a1, double a2, double a3) {
            return polyhedron_dict(dual_prism(n, a1, a2, a3));
        },
        py::arg("n"), py::arg("a1"), py::arg("a2"), py::arg("a3"));

    py::class_<Patch>(m, "Patch")
        .def_readonly("family", &Patch::family)
        .def_readonly("a1", &Patch::a1)
        .def_readonly("a2", &Patch::a2)
        .def_property_readonly("tile_count",
                               [](const Patch& p) { return p.tiles.size(); })
        .def("tiles",
             [](const Patch& p) {
                 py::list out;
                 for (const PlacedTile& t : p.tiles) {
                     py::dict d;
                     d["kind"] = p.proto_of(t).name;
                     d["vertices"] = vec2_list(p.tile_vertices(t));
                     d["rotation"] = t.rotation;
                     d["translation"] = py::make_tuple(t.translation.x, t.translation.y);
                     out.append(d);
                 }
                 return out;
             })
        .def("validate", [](const Patch& p) { return validation_dict(validate_patch(p)); })
        .def("holes",
             [](const Patch& p) {
                 py::list out;
                 for (const auto& h : p.declared_holes) out.append(vec2_list(h));
                 return out;
             })
        .def("graphene",
             [](const Patch& p, const std::string& double_bond) {
                 const GrapheneGraph g = graphene_graph(
                     p, double_bond == "longer" ? DoubleBond::longer : DoubleBond::shorter);
                 py::dict d;
                 d["atoms"] = vec2_list(g.atoms);
                 d["interior"] = g.interior;
                 py::list bonds;
                 for (const auto& b : g.bonds)
                     bonds.append(py::make_tuple(b.a, b.b, b.dbl, b.length));
                 d["bonds"] = bonds;
                 d["bond_ratio"] = g.bond_ratio;
                 return d;
             },
             py::arg("double_bond") = "shorter")
        .def("svg",
             [](const Patch& p) {
                 RenderSpec spec;
                 return emit_svg(svg_items(p), spec);
             })
        .def("json", [](const Patch& p) {
            RenderSpec spec;
            return emit_json(p, spec);
        });

    m.def("hexagon_patch", &hexagon_patch, py::arg("a1"), py::arg("a2"), py::arg("rings"));
    m.def("isotoxal_hexagon_patch", &isotoxal_hexagon_patch, py::arg("a1"), py::arg("a2"),
          py::arg("rings"));
    m.def(
        "octagon_square_patch",
        [](double a1, double a2, int rings, const std::string& variant) {
            return octagon_square_patch(a1, a2, rings, parse_variant(variant));
        },
        py::arg("a1"), py::arg("a2"), py::arg("rings"), py::arg("variant") = "isogonal");
    m.def("decagon_patch", &decagon_patch, py::arg("kind"), py::arg("a1"), py::arg("a2"));
}
