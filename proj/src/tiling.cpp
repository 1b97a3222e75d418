#include "qrpoly/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace qrpoly {

namespace {

constexpr double kQuant = 1e-7;   // vertex quantization grid
constexpr double kAngleTol = 1e-8;

struct CellKey {
    std::int64_t qx, qy;
    bool operator==(const CellKey& o) const { return qx == o.qx && qy == o.qy; }
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = static_cast<std::uint64_t>(k.qx) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(k.qy) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// Spatial hash merging points within `tol` true distance; cell-boundary
/// straddles are handled by probing the 3x3 neighborhood.
class PointIndex {
  public:
    explicit PointIndex(double tol = kQuant) : tol_(tol) {}

    int find(Vec2 p) const {
        const auto qx = static_cast<std::int64_t>(std::llround(p.x / tol_));
        const auto qy = static_cast<std::int64_t>(std::llround(p.y / tol_));
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = cells_.find(CellKey{qx + dx, qy + dy});
                if (it == cells_.end()) continue;
                for (int idx : it->second) {
                    if (dist(points_[static_cast<std::size_t>(idx)], p) <= tol_) return idx;
                }
            }
        }
        return -1;
    }

    int find_or_add(Vec2 p) {
        const int found = find(p);
        if (found >= 0) return found;
        const int idx = static_cast<int>(points_.size());
        points_.push_back(p);
        const auto qx = static_cast<std::int64_t>(std::llround(p.x / tol_));
        const auto qy = static_cast<std::int64_t>(std::llround(p.y / tol_));
        cells_[CellKey{qx, qy}].push_back(idx);
        return idx;
    }

    const std::vector<Vec2>& points() const { return points_; }

  private:
    double tol_;
    std::vector<Vec2> points_;
    std::unordered_map<CellKey, std::vector<int>, CellKeyHash> cells_;
};

Vec2 centroid(const std::vector<Vec2>& pts) {
    Vec2 c;
    for (const Vec2& p : pts) c = c + p;
    return (1.0 / static_cast<double>(pts.size())) * c;
}

bool is_convex(const std::vector<Vec2>& poly) {
    const std::size_t k = poly.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Vec2 a = poly[(i + 1) % k] - poly[i];
        const Vec2 b = poly[(i + 2) % k] - poly[(i + 1) % k];
        if (cross(a, b) < -1e-12) return false;
    }
    return true;
}

TileProto make_proto(std::string name, std::vector<Vec2> verts, std::vector<int> edge_class,
                     std::vector<std::vector<Vec2>> convex_parts = {}) {
    TileProto proto;
    proto.name = std::move(name);
    proto.corner_angle = interior_angles(verts);
    proto.area = std::abs(signed_area(verts));
    if (convex_parts.empty()) {
        if (!is_convex(verts)) throw std::logic_error("make_proto: missing convex decomposition");
        convex_parts.push_back(verts);
    }
    proto.convex_parts = std::move(convex_parts);
    proto.vertices = std::move(verts);
    proto.edge_class = std::move(edge_class);
    return proto;
}

std::vector<int> classes_by_nearest_length(const std::vector<Vec2>& verts, double len0,
                                           double len1) {
    // Class 0 = edges matching len0, class 1 = len1 (nearest wins).
    std::vector<int> cls(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const double len = dist(verts[i], verts[(i + 1) % verts.size()]);
        cls[i] = std::abs(len - len0) <= std::abs(len - len1) ? 0 : 1;
    }
    return cls;
}

std::vector<int> parity_classes(std::size_t k) {
    std::vector<int> cls(k);
    for (std::size_t i = 0; i < k; ++i) cls[i] = static_cast<int>(i % 2);
    return cls;
}

double normalize_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

struct AttachSpec {
    int proto = 0;
    int pedge = 0;
    int glued_class = 0;
};

class Builder;
using AttachRule =
    std::function<std::optional<AttachSpec>(const Builder&, const PlacedTile&, int edge)>;

class Builder {
  public:
    explicit Builder(Patch patch) : patch_(std::move(patch)) {}

    const Patch& patch() const { return patch_; }
    Patch take() { return std::move(patch_); }

    int effective_class(const PlacedTile& t, int edge) const {
        const TileProto& proto = patch_.proto_of(t);
        return (proto.edge_class[static_cast<std::size_t>(edge)] + t.class_offset) % 2;
    }

    double corner_at_edge_end(const PlacedTile& t, int edge) const {
        const TileProto& proto = patch_.proto_of(t);
        const std::size_t k = proto.vertices.size();
        return proto.corner_angle[(static_cast<std::size_t>(edge) + 1) % k];
    }

    /// Place `proto` with its edge `pedge` glued (reversed) onto segment A->B.
    PlacedTile placement_on_segment(int proto_idx, int pedge, Vec2 a, Vec2 b,
                                    int glued_class) const {
        const TileProto& proto = patch_.protos[static_cast<std::size_t>(proto_idx)];
        const std::size_t k = proto.vertices.size();
        const Vec2 p0 = proto.vertices[static_cast<std::size_t>(pedge)];
        const Vec2 p1 = proto.vertices[(static_cast<std::size_t>(pedge) + 1) % k];
        const Vec2 target = a - b;
        const Vec2 source = p1 - p0;
        const double rot = normalize_angle(std::atan2(target.y, target.x) -
                                           std::atan2(source.y, source.x));
        PlacedTile t;
        t.proto = proto_idx;
        t.rotation = rot;
        t.translation = b - rotate(p0, rot);
        t.class_offset =
            ((glued_class - proto.edge_class[static_cast<std::size_t>(pedge)]) % 2 + 2) % 2;
        return t;
    }

    /// Insert the tile unless an identical placement exists. Returns
    /// (tile id, inserted). Detects vertex angle over-fill conflicts.
    std::pair<int, bool> add_tile(PlacedTile t, int ring) {
        const TileProto& proto = patch_.proto_of(t);
        std::vector<Vec2> verts = placed_vertices(t);
        const Vec2 c = centroid(verts);
        const int existing = tile_centroids_.find(c);
        if (existing >= 0) {
            const PlacedTile& other = patch_.tiles[static_cast<std::size_t>(existing)];
            if (other.proto != t.proto || !same_vertices(patch_.tile_vertices(other), verts))
                throw TilingConflict("conflicting tile placements share a centroid", c);
            if (other.class_offset != t.class_offset)
                throw TilingConflict("inconsistent edge-class phase at tile", c);
            return {existing, false};
        }

        // A corner pushing any vertex past a full turn means the forced tile
        // cannot fit: report the offending vertex.
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const int vid = corner_angles_.find_or_add(verts[i]);
            if (static_cast<std::size_t>(vid) >= angle_sum_.size()) angle_sum_.push_back(0.0);
            if (angle_sum_[static_cast<std::size_t>(vid)] + proto.corner_angle[i] >
                2.0 * kPi + 1e-6)
                throw TilingConflict("vertex angle sum exceeds full turn", verts[i]);
        }
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const int vid = corner_angles_.find_or_add(verts[i]);
            angle_sum_[static_cast<std::size_t>(vid)] += proto.corner_angle[i];
        }

        t.id = static_cast<int>(patch_.tiles.size());
        t.ring = ring;
        tile_centroids_.find_or_add(c);
        patch_.tiles.push_back(t);
        return {t.id, true};
    }

    std::vector<Vec2> placed_vertices(const PlacedTile& t) const {
        const TileProto& proto = patch_.proto_of(t);
        std::vector<Vec2> out;
        out.reserve(proto.vertices.size());
        for (const Vec2& p : proto.vertices) out.push_back(rotate(p, t.rotation) + t.translation);
        return out;
    }

    void grow(const AttachRule& rule, int rings) {
        std::deque<std::pair<int, int>> wave;
        for (const PlacedTile& t : patch_.tiles) {
            const std::size_t k = patch_.proto_of(t).vertices.size();
            for (std::size_t e = 0; e < k; ++e) wave.emplace_back(t.id, static_cast<int>(e));
        }
        for (int ring = 1; ring <= rings; ++ring) {
            std::deque<std::pair<int, int>> next;
            while (!wave.empty()) {
                const auto [tid, edge] = wave.front();
                wave.pop_front();
                const PlacedTile tile = patch_.tiles[static_cast<std::size_t>(tid)];
                const auto spec = rule(*this, tile, edge);
                if (!spec) continue;
                const std::vector<Vec2> verts = placed_vertices(tile);
                const std::size_t k = verts.size();
                const Vec2 a = verts[static_cast<std::size_t>(edge)];
                const Vec2 b = verts[(static_cast<std::size_t>(edge) + 1) % k];
                const PlacedTile cand =
                    placement_on_segment(spec->proto, spec->pedge, a, b, spec->glued_class);
                const auto [nid, added] = add_tile(cand, ring);
                if (added) {
                    const PlacedTile& placed = patch_.tiles[static_cast<std::size_t>(nid)];
                    const std::size_t nk = patch_.proto_of(placed).vertices.size();
                    for (std::size_t e = 0; e < nk; ++e)
                        next.emplace_back(nid, static_cast<int>(e));
                }
            }
            wave.swap(next);
        }
    }

  private:
    static bool same_vertices(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
        if (a.size() != b.size()) return false;
        for (const Vec2& p : a) {
            bool hit = false;
            for (const Vec2& q : b) {
                if (dist(p, q) <= kQuant) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    }

    Patch patch_;
    PointIndex tile_centroids_;
    PointIndex corner_angles_;
    std::vector<double> angle_sum_;
};

int first_edge_of_class(const TileProto& proto, int cls) {
    for (std::size_t i = 0; i < proto.edge_class.size(); ++i)
        if (proto.edge_class[i] == cls) return static_cast<int>(i);
    throw std::logic_error("first_edge_of_class: class not present");
}

int first_edge_with_corner(const TileProto& proto, double corner_at_start) {
    for (std::size_t i = 0; i < proto.corner_angle.size(); ++i)
        if (std::abs(proto.corner_angle[i] - corner_at_start) < 1e-9) return static_cast<int>(i);
    throw std::logic_error("first_edge_with_corner: no matching corner");
}

bool corners_distinct(const TileProto& proto) {
    return value_classes(proto.corner_angle, 1e-9).size() > 1;
}

/// Attachment edge for an alternating-corner prototype: corner identity fixes
/// the parity when the corners differ; otherwise fall back to the class
/// parity so repeated reaches of one tile agree on its phase.
int attach_edge(const TileProto& proto, double corner_at_start, int glued_class) {
    if (corners_distinct(proto)) return first_edge_with_corner(proto, corner_at_start);
    return first_edge_of_class(proto, glued_class);
}

void finalize_patch(Patch& patch) {
    PointIndex verts;
    patch.vertex_index.clear();
    patch.edge_index.clear();

    std::map<std::pair<int, int>, int> edge_ids;
    for (const PlacedTile& t : patch.tiles) {
        const std::vector<Vec2> pts = patch.tile_vertices(t);
        const std::size_t k = pts.size();
        std::vector<int> vids(k);
        for (std::size_t i = 0; i < k; ++i) {
            const int vid = verts.find_or_add(pts[i]);
            vids[i] = vid;
            if (static_cast<std::size_t>(vid) >= patch.vertex_index.size()) {
                PatchVertex pv;
                pv.pos = pts[i];
                patch.vertex_index.push_back(pv);
            }
            patch.vertex_index[static_cast<std::size_t>(vid)].corners.emplace_back(
                t.id, static_cast<int>(i));
            patch.vertex_index[static_cast<std::size_t>(vid)].angle_sum +=
                patch.proto_of(t).corner_angle[i];
        }
        for (std::size_t i = 0; i < k; ++i) {
            int a = vids[i], b = vids[(i + 1) % k];
            std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            auto it = edge_ids.find(key);
            if (it == edge_ids.end()) {
                PatchEdge pe;
                pe.v0 = key.first;
                pe.v1 = key.second;
                patch.edge_index.push_back(pe);
                it = edge_ids.emplace(key, static_cast<int>(patch.edge_index.size() - 1)).first;
            }
            patch.edge_index[static_cast<std::size_t>(it->second)].sides.emplace_back(
                t.id, static_cast<int>(i));
        }
    }

    // Interior vertex = not incident to any unshared (boundary) edge.
    std::vector<bool> on_boundary(patch.vertex_index.size(), false);
    for (const PatchEdge& e : patch.edge_index) {
        if (e.sides.size() == 1) {
            on_boundary[static_cast<std::size_t>(e.v0)] = true;
            on_boundary[static_cast<std::size_t>(e.v1)] = true;
        }
    }
    for (std::size_t i = 0; i < patch.vertex_index.size(); ++i)
        patch.vertex_index[i].interior = !on_boundary[i];
}

/// Boundary cycles other than the outer one; used as declared holes.
std::vector<std::vector<Vec2>> trace_holes(const Patch& patch) {
    std::map<int, std::vector<int>> incident;  // vertex -> boundary edge ids
    std::vector<int> boundary_edges;
    for (std::size_t e = 0; e < patch.edge_index.size(); ++e) {
        if (patch.edge_index[e].sides.size() == 1) {
            boundary_edges.push_back(static_cast<int>(e));
            incident[patch.edge_index[e].v0].push_back(static_cast<int>(e));
            incident[patch.edge_index[e].v1].push_back(static_cast<int>(e));
        }
    }
    for (const auto& [v, es] : incident) {
        if (es.size() != 2) return {};  // non-manifold boundary; skip tracing
    }

    std::vector<bool> used(patch.edge_index.size(), false);
    std::vector<std::vector<Vec2>> cycles;
    for (int e0 : boundary_edges) {
        if (used[static_cast<std::size_t>(e0)]) continue;
        std::vector<Vec2> cycle;
        int edge = e0;
        int v = patch.edge_index[static_cast<std::size_t>(edge)].v0;
        while (!used[static_cast<std::size_t>(edge)]) {
            used[static_cast<std::size_t>(edge)] = true;
            cycle.push_back(patch.vertex_index[static_cast<std::size_t>(v)].pos);
            const PatchEdge& pe = patch.edge_index[static_cast<std::size_t>(edge)];
            v = (pe.v0 == v) ? pe.v1 : pe.v0;
            for (int cand : incident[v]) {
                if (cand != edge && !used[static_cast<std::size_t>(cand)]) {
                    edge = cand;
                    break;
                }
            }
        }
        cycles.push_back(std::move(cycle));
    }
    if (cycles.size() <= 1) return {};
    std::size_t outer = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const double a = std::abs(signed_area(cycles[i]));
        if (a > best) {
            best = a;
            outer = i;
        }
    }
    std::vector<std::vector<Vec2>> holes;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        if (i != outer) holes.push_back(std::move(cycles[i]));
    return holes;
}

}  // namespace

std::vector<Vec2> Patch::tile_vertices(const PlacedTile& t) const {
    const TileProto& proto = proto_of(t);
    std::vector<Vec2> out;
    out.reserve(proto.vertices.size());
    for (const Vec2& p : proto.vertices) out.push_back(rotate(p, t.rotation) + t.translation);
    return out;
}

std::vector<Vec2> Patch::tile_vertices(int tile_id) const {
    return tile_vertices(tiles[static_cast<std::size_t>(tile_id)]);
}

namespace {

Patch grow_from_seed(Patch base, int seed_proto, const AttachRule& rule, int rings) {
    Builder builder(std::move(base));
    PlacedTile seed;
    seed.proto = seed_proto;
    builder.add_tile(seed, 0);
    builder.grow(rule, rings);
    Patch patch = builder.take();
    finalize_patch(patch);
    return patch;
}

Patch honeycomb_patch(Patch base, double hex_a, int rings) {
    base.protos.push_back(make_proto(
        "regular-hexagon", regular_polygon(3, hex_a).vertices, std::vector<int>(6, 0)));
    const AttachRule rule = [](const Builder&, const PlacedTile&,
                               int) -> std::optional<AttachSpec> {
        return AttachSpec{0, 0, 0};
    };
    return grow_from_seed(std::move(base), 0, rule, rings);
}

}  // namespace

Patch hexagon_patch(double a1, double a2, int rings) {
    if (a1 < 0.0 || a2 < 0.0) throw std::invalid_argument("hexagon_patch: negative parameter");
    if (a1 == 0.0 && a2 == 0.0) throw std::invalid_argument("hexagon_patch: both parameters zero");
    if (rings < 1) throw std::invalid_argument("hexagon_patch: rings must be >= 1");

    Patch base;
    base.family = "hexagon";
    base.a1 = a1;
    base.a2 = a2;
    base.rings = rings;

    if (a1 == a2) return honeycomb_patch(std::move(base), a1, rings);

    if (a2 == 0.0) {
        // Regular hexagons collapse to points: plain triangle tiling.
        base.protos.push_back(make_proto(
            "triangle", isogonal_polygon(3, a1, 0.0).vertices, std::vector<int>(3, 0)));
        const AttachRule rule = [](const Builder&, const PlacedTile&,
                                   int) -> std::optional<AttachSpec> {
            return AttachSpec{0, 0, 0};
        };
        return grow_from_seed(std::move(base), 0, rule, rings);
    }

    if (a1 == 0.0) {
        // Isogonal hexagons collapse to triangles: trihexagonal limit.
        base.protos.push_back(make_proto(
            "regular-hexagon", regular_polygon(3, a2).vertices, std::vector<int>(6, 0)));
        base.protos.push_back(make_proto(
            "triangle", isogonal_polygon(3, 0.0, a2).vertices, std::vector<int>(3, 0)));
        const AttachRule rule = [](const Builder&, const PlacedTile& t,
                                   int) -> std::optional<AttachSpec> {
            return t.proto == 0 ? AttachSpec{1, 0, 0} : AttachSpec{0, 0, 0};
        };
        return grow_from_seed(std::move(base), 0, rule, rings);
    }

    const Polygon iso = isogonal_polygon(3, a1, a2);
    const double len_reg = std::sqrt(2.0) * a2;
    const double len_alt = std::sqrt(2.0) * a1;
    base.protos.push_back(make_proto("regular-hexagon", regular_polygon(3, a2).vertices,
                                     std::vector<int>(6, 0)));
    base.protos.push_back(make_proto("isogonal-hexagon", iso.vertices,
                                     classes_by_nearest_length(iso.vertices, len_reg, len_alt)));

    const int iso_reg_edge = first_edge_of_class(base.protos[1], 0);
    const int iso_alt_edge = first_edge_of_class(base.protos[1], 1);
    const AttachRule rule = [iso_reg_edge, iso_alt_edge](
                                const Builder& b, const PlacedTile& t,
                                int edge) -> std::optional<AttachSpec> {
        if (t.proto == 0) return AttachSpec{1, iso_reg_edge, 0};
        if (b.effective_class(t, edge) == 0) return AttachSpec{0, 0, 0};
        return AttachSpec{1, iso_alt_edge, 1};
    };
    return grow_from_seed(std::move(base), 0, rule, rings);
}

Patch isotoxal_hexagon_patch(double a1, double a2, int rings) {
    if (a1 <= 0.0 || a2 <= 0.0)
        throw std::invalid_argument("isotoxal_hexagon_patch: parameters must be positive");
    if (rings < 1) throw std::invalid_argument("isotoxal_hexagon_patch: rings must be >= 1");

    Patch base;
    base.family = "isotoxal-hexagon";
    base.a1 = a1;
    base.a2 = a2;
    base.rings = rings;

    const Polygon iso = isotoxal_polygon(3, a1, a2);
    const double edge_len = dist(iso.vertices[0], iso.vertices[1]);
    if (a1 == a2) return honeycomb_patch(std::move(base), edge_len / std::sqrt(2.0), rings);

    base.protos.push_back(make_proto("regular-hexagon",
                                     regular_polygon(3, edge_len / std::sqrt(2.0)).vertices,
                                     std::vector<int>(6, 0)));
    base.protos.push_back(
        make_proto("isotoxal-hexagon", iso.vertices, parity_classes(iso.vertices.size())));

    const double alpha = *std::max_element(base.protos[1].corner_angle.begin(),
                                           base.protos[1].corner_angle.end());
    const AttachRule rule = [alpha](const Builder& b, const PlacedTile& t,
                                    int edge) -> std::optional<AttachSpec> {
        if (t.proto == 0) {
            // New isotoxal tile leads with its wide corner at the segment end.
            const int pedge = attach_edge(b.patch().protos[1], alpha, 0);
            return AttachSpec{1, pedge, 0};
        }
        if (b.effective_class(t, edge) == 0) return AttachSpec{0, 0, 0};
        const double partner = 4.0 * kPi / 3.0 - b.corner_at_edge_end(t, edge);
        const int pedge = attach_edge(b.patch().protos[1], partner, 1);
        return AttachSpec{1, pedge, 1};
    };
    return grow_from_seed(std::move(base), 0, rule, rings);
}

Patch octagon_square_patch(double a1, double a2, int rings, OctagonVariant variant) {
    if (a1 <= 0.0 || a2 <= 0.0)
        throw std::invalid_argument("octagon_square_patch: parameters must be positive");
    if (rings < 1) throw std::invalid_argument("octagon_square_patch: rings must be >= 1");
    if (variant == OctagonVariant::regular && a1 != a2)
        throw std::invalid_argument("octagon_square_patch: regular variant requires a1 == a2");

    Patch base;
    base.family = "octagon-square";
    base.a1 = a1;
    base.a2 = a2;
    base.rings = rings;

    Polygon oct;
    double square_side = 0.0;
    std::vector<int> oct_classes;
    bool isotoxal = false;
    switch (variant) {
        case OctagonVariant::regular:
            base.variant = "regular";
            oct = regular_polygon(4, a1);
            square_side = std::sqrt(2.0) * a1;
            oct_classes = parity_classes(oct.vertices.size());
            break;
        case OctagonVariant::isogonal:
            base.variant = "isogonal";
            oct = isogonal_polygon(4, a1, a2);
            square_side = std::sqrt(2.0) * a2;
            oct_classes = (a1 == a2)
                              ? parity_classes(oct.vertices.size())
                              : classes_by_nearest_length(oct.vertices, std::sqrt(2.0) * a2,
                                                          std::sqrt(2.0) * a1);
            break;
        case OctagonVariant::isotoxal:
            base.variant = "isotoxal";
            oct = isotoxal_polygon(4, a1, a2);
            square_side = dist(oct.vertices[0], oct.vertices[1]);
            oct_classes = parity_classes(oct.vertices.size());
            isotoxal = true;
            break;
    }

    base.protos.push_back(make_proto("octagon", oct.vertices, oct_classes));
    const double h = square_side / 2.0;
    base.protos.push_back(make_proto(
        "square", {{-h, -h}, {h, -h}, {h, h}, {-h, h}}, std::vector<int>(4, 0)));

    AttachRule rule;
    if (!isotoxal) {
        const int oct_sq_edge = first_edge_of_class(base.protos[0], 0);
        const int oct_oct_edge = first_edge_of_class(base.protos[0], 1);
        rule = [oct_sq_edge, oct_oct_edge](const Builder& b, const PlacedTile& t,
                                           int edge) -> std::optional<AttachSpec> {
            if (t.proto == 1) return AttachSpec{0, oct_sq_edge, 0};
            if (b.effective_class(t, edge) == 0) return AttachSpec{1, 0, 0};
            return AttachSpec{0, oct_oct_edge, 1};
        };
    } else {
        const double alpha = *std::max_element(base.protos[0].corner_angle.begin(),
                                               base.protos[0].corner_angle.end());
        rule = [alpha](const Builder& b, const PlacedTile& t,
                       int edge) -> std::optional<AttachSpec> {
            if (t.proto == 1) {
                const int pedge = attach_edge(b.patch().protos[0], alpha, 0);
                return AttachSpec{0, pedge, 0};
            }
            if (b.effective_class(t, edge) == 0) return AttachSpec{1, 0, 0};
            const double partner = 3.0 * kPi / 2.0 - b.corner_at_edge_end(t, edge);
            const int pedge = attach_edge(b.patch().protos[0], partner, 1);
            return AttachSpec{0, pedge, 1};
        };
    }
    // Anchor the seed's class phase: square-glued (class 0) edges lead with
    // the wide corner, matching the attachment convention above.
    int seed_offset = 0;
    if (isotoxal && corners_distinct(base.protos[0])) {
        const double alpha = *std::max_element(base.protos[0].corner_angle.begin(),
                                               base.protos[0].corner_angle.end());
        const int j = first_edge_with_corner(base.protos[0], alpha);
        seed_offset = ((0 - base.protos[0].edge_class[static_cast<std::size_t>(j)]) % 2 + 2) % 2;
    }
    Builder builder(std::move(base));
    PlacedTile seed;
    seed.proto = 0;
    seed.class_offset = seed_offset;
    builder.add_tile(seed, 0);
    builder.grow(rule, rings);
    Patch patch = builder.take();
    finalize_patch(patch);
    return patch;
}

namespace {

std::vector<Vec2> bowtie_vertices(double edge) {
    // Equilateral girih bow-tie, interior angles 216,72,72,216,72,72 (CCW).
    const double interior[6] = {216, 72, 72, 216, 72, 72};
    std::vector<Vec2> verts;
    Vec2 pos{0, 0};
    double dir = 0.0;
    for (int i = 0; i < 6; ++i) {
        verts.push_back(pos);
        pos = pos + edge * Vec2{std::cos(dir), std::sin(dir)};
        dir += kPi - interior[(i + 1) % 6] * kPi / 180.0;
    }
    const Vec2 c = centroid(verts);
    for (Vec2& v : verts) v = v - c;
    return verts;
}

}  // namespace

Patch decagon_patch(const std::string& kind, double a1, double a2) {
    if (a1 <= 0.0 || a2 <= 0.0)
        throw std::invalid_argument("decagon_patch: parameters must be positive");

    Patch base;
    base.a1 = a1;
    base.a2 = a2;
    base.rings = 1;

    if (kind == "bowtie-exemplar") {
        base.family = "decagon-bowtie";
        base.variant = kind;
        const Polygon dec = regular_polygon(5, a1);
        base.protos.push_back(
            make_proto("regular-decagon", dec.vertices, std::vector<int>(10, 0)));
        const std::vector<Vec2> bow = bowtie_vertices(std::sqrt(2.0) * a1);
        std::vector<Vec2> part1(bow.begin(), bow.begin() + 4);          // v0..v3
        std::vector<Vec2> part2{bow[3], bow[4], bow[5], bow[0]};        // v3..v0
        base.protos.push_back(
            make_proto("bowtie", bow, std::vector<int>(6, 0), {part1, part2}));

        Builder builder(std::move(base));
        PlacedTile center;
        center.proto = 0;
        builder.add_tile(center, 0);
        const std::vector<Vec2> cv = builder.placed_vertices(center);
        // Outer decagons nest over the bow-tie waists on even edges; bow-ties
        // bridge the odd edges through their wing-wing edge (index 1).
        for (int k = 0; k < 5; ++k) {
            const Vec2 a_even = cv[static_cast<std::size_t>(2 * k)];
            const Vec2 b_even = cv[static_cast<std::size_t>((2 * k + 1) % 10)];
            builder.add_tile(builder.placement_on_segment(0, 0, a_even, b_even, 0), 1);
            const Vec2 a_odd = cv[static_cast<std::size_t>(2 * k + 1)];
            const Vec2 b_odd = cv[static_cast<std::size_t>((2 * k + 2) % 10)];
            builder.add_tile(builder.placement_on_segment(1, 1, a_odd, b_odd, 0), 1);
        }
        Patch patch = builder.take();
        finalize_patch(patch);
        patch.declared_holes = trace_holes(patch);
        return patch;
    }

    if (kind == "isogonal-exemplar") {
        // Isogonal decagons cannot close around a vertex (2 x 144 != 360) and
        // no bounded gap matches both edge classes, so the unglued wedges are
        // declared as the intentionally untiled regions.
        base.family = "decagon-isogonal";
        base.variant = kind;
        const Polygon dec = isogonal_polygon(5, a1, a2);
        const std::vector<int> classes =
            (a1 == a2) ? parity_classes(dec.vertices.size())
                       : classes_by_nearest_length(dec.vertices, std::sqrt(2.0) * a2,
                                                   std::sqrt(2.0) * a1);
        base.protos.push_back(make_proto("isogonal-decagon", dec.vertices, classes));
        const int glue_edge = first_edge_of_class(base.protos[0], 0);

        Builder builder(std::move(base));
        PlacedTile center;
        center.proto = 0;
        builder.add_tile(center, 0);
        const std::vector<Vec2> cv = builder.placed_vertices(center);
        std::array<int, 10> neighbor_at{};
        neighbor_at.fill(-1);
        {
            const TileProto& proto = builder.patch().protos[0];
            for (int e = 0; e < 10; ++e) {
                if (proto.edge_class[static_cast<std::size_t>(e)] != 0) continue;
                const Vec2 a = cv[static_cast<std::size_t>(e)];
                const Vec2 b = cv[static_cast<std::size_t>((e + 1) % 10)];
                const auto [id, added] =
                    builder.add_tile(builder.placement_on_segment(0, glue_edge, a, b, 0), 1);
                (void)added;
                neighbor_at[static_cast<std::size_t>(e)] = id;
            }
        }
        Patch patch = builder.take();
        finalize_patch(patch);

        // Flanking edge of a neighbor tile at a shared corner: the edge
        // leaving `corner` that does not run along the centre tile.
        auto flank = [&](int tile_id, Vec2 corner, Vec2 not_toward) {
            const std::vector<Vec2> verts = patch.tile_vertices(tile_id);
            const std::size_t k = verts.size();
            for (std::size_t i = 0; i < k; ++i) {
                if (dist(verts[i], corner) > kQuant) continue;
                const Vec2 prev = verts[(i + k - 1) % k];
                const Vec2 next = verts[(i + 1) % k];
                return dist(prev, not_toward) <= kQuant ? next : prev;
            }
            throw std::logic_error("decagon_patch: flank corner not found");
        };
        const TileProto& proto = patch.protos[0];
        for (int e = 0; e < 10; ++e) {
            if (proto.edge_class[static_cast<std::size_t>(e)] != 1) continue;
            const Vec2 c_start = cv[static_cast<std::size_t>(e)];
            const Vec2 c_end = cv[static_cast<std::size_t>((e + 1) % 10)];
            const int left = neighbor_at[static_cast<std::size_t>((e + 9) % 10)];
            const int right = neighbor_at[static_cast<std::size_t>((e + 1) % 10)];
            const Vec2 q_left = flank(left, c_start, cv[static_cast<std::size_t>((e + 9) % 10)]);
            const Vec2 q_right =
                flank(right, c_end, cv[static_cast<std::size_t>((e + 2) % 10)]);
            std::vector<Vec2> outline{q_left, c_start, c_end, q_right};
            if (signed_area(outline) < 0.0) std::reverse(outline.begin(), outline.end());
            patch.declared_holes.push_back(std::move(outline));
        }
        return patch;
    }

    throw std::invalid_argument("decagon_patch: unknown kind " + kind);
}

PatchValidation validate_patch(const Patch& patch) {
    PatchValidation report;

    // Pairwise overlap: convex-part clipping over bbox-filtered pairs.
    const std::size_t t_count = patch.tiles.size();
    std::vector<std::vector<Vec2>> all_verts(t_count);
    std::vector<BBox2> boxes(t_count);
    for (std::size_t i = 0; i < t_count; ++i) {
        all_verts[i] = patch.tile_vertices(static_cast<int>(i));
        boxes[i] = BBox2::of(all_verts[i]);
    }
    for (std::size_t i = 0; i < t_count; ++i) {
        const PlacedTile& ti = patch.tiles[i];
        for (std::size_t j = i + 1; j < t_count; ++j) {
            if (!boxes[i].overlaps(boxes[j], kQuant)) continue;
            const PlacedTile& tj = patch.tiles[j];
            double inter = 0.0;
            for (const auto& pa : patch.proto_of(ti).convex_parts) {
                std::vector<Vec2> a;
                a.reserve(pa.size());
                for (const Vec2& p : pa) a.push_back(rotate(p, ti.rotation) + ti.translation);
                for (const auto& pb : patch.proto_of(tj).convex_parts) {
                    std::vector<Vec2> b;
                    b.reserve(pb.size());
                    for (const Vec2& p : pb) b.push_back(rotate(p, tj.rotation) + tj.translation);
                    inter += convex_clip_area(a, b);
                }
            }
            const double ratio =
                inter / std::min(patch.proto_of(ti).area, patch.proto_of(tj).area);
            report.max_overlap_ratio = std::max(report.max_overlap_ratio, ratio);
            if (ratio > 1e-8) {
                report.overlap_free = false;
                std::ostringstream msg;
                msg << "tiles " << ti.id << " and " << tj.id << " overlap (ratio " << ratio
                    << ")";
                report.failures.push_back(msg.str());
            }
        }
    }

    // Edge matching: no edge may carry more than two tiles, and no vertex may
    // sit strictly inside another tile's edge (T junction).
    for (const PatchEdge& e : patch.edge_index) {
        if (e.sides.size() > 2) {
            report.edges_match = false;
            report.failures.push_back("edge shared by more than two tiles");
        }
    }
    for (std::size_t vi = 0; vi < patch.vertex_index.size(); ++vi) {
        const Vec2 p = patch.vertex_index[vi].pos;
        for (const PatchEdge& e : patch.edge_index) {
            if (e.v0 == static_cast<int>(vi) || e.v1 == static_cast<int>(vi)) continue;
            const Vec2 a = patch.vertex_index[static_cast<std::size_t>(e.v0)].pos;
            const Vec2 b = patch.vertex_index[static_cast<std::size_t>(e.v1)].pos;
            if (std::min(a.x, b.x) - kQuant > p.x || std::max(a.x, b.x) + kQuant < p.x ||
                std::min(a.y, b.y) - kQuant > p.y || std::max(a.y, b.y) + kQuant < p.y)
                continue;
            if (point_segment_distance(p, a, b) < kQuant &&
                dist(p, a) > 10 * kQuant && dist(p, b) > 10 * kQuant) {
                report.edges_match = false;
                std::ostringstream msg;
                msg << "T-junction at (" << p.x << ", " << p.y << ")";
                report.failures.push_back(msg.str());
            }
        }
    }

    // Interior angle sums and vertex-configuration census.
    for (const PatchVertex& v : patch.vertex_index) {
        if (!v.interior) {
            ++report.boundary_vertices;
            continue;
        }
        ++report.interior_vertices;
        const double residual = std::abs(v.angle_sum - 2.0 * kPi);
        report.max_angle_residual = std::max(report.max_angle_residual, residual);
        if (residual > kAngleTol) {
            report.angle_sums_ok = false;
            std::ostringstream msg;
            msg << "angle sum " << v.angle_sum << " at (" << v.pos.x << ", " << v.pos.y << ")";
            report.failures.push_back(msg.str());
        }
        std::vector<std::string> parts;
        for (const auto& [tid, corner] : v.corners) {
            const PlacedTile& t = patch.tiles[static_cast<std::size_t>(tid)];
            const double deg =
                patch.proto_of(t).corner_angle[static_cast<std::size_t>(corner)] * 180.0 / kPi;
            std::ostringstream part;
            part << patch.proto_of(t).name << ":" << std::llround(deg * 1000.0) / 1000.0;
            parts.push_back(part.str());
        }
        std::sort(parts.begin(), parts.end());
        std::string key;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) key += "+";
            key += parts[i];
        }
        ++report.vertex_census[key];
    }

    report.hole_count = static_cast<int>(patch.declared_holes.size());
    return report;
}

GrapheneGraph graphene_graph(const Patch& patch, DoubleBond which) {
    if (patch.family != "hexagon")
        throw std::invalid_argument("graphene_graph: patch not hexagonal");
    if (patch.a1 <= 0.0 || patch.a2 <= 0.0 || patch.a1 == patch.a2)
        throw std::invalid_argument("graphene_graph: no distinct bond length classes");

    GrapheneGraph g;
    g.bond_ratio = patch.a1 / patch.a2;
    const double short_len = std::sqrt(2.0) * std::min(patch.a1, patch.a2);
    const double long_len = std::sqrt(2.0) * std::max(patch.a1, patch.a2);

    g.atoms.reserve(patch.vertex_index.size());
    for (const PatchVertex& v : patch.vertex_index) {
        g.atoms.push_back(v.pos);
        g.interior.push_back(v.interior);
    }
    for (const PatchEdge& e : patch.edge_index) {
        GrapheneGraph::Bond bond;
        bond.a = e.v0;
        bond.b = e.v1;
        bond.length = dist(g.atoms[static_cast<std::size_t>(e.v0)],
                           g.atoms[static_cast<std::size_t>(e.v1)]);
        const bool is_short =
            std::abs(bond.length - short_len) <= std::abs(bond.length - long_len);
        bond.dbl = (which == DoubleBond::shorter) ? is_short : !is_short;
        g.bonds.push_back(bond);
    }
    return g;
}

std::vector<Vec2> translation_symmetries(const Patch& patch, int max_candidates) {
    const std::size_t t_count = patch.tiles.size();
    std::vector<Vec2> centroids(t_count);
    std::vector<std::vector<Vec2>> all_verts(t_count);
    std::vector<BBox2> boxes(t_count);
    for (std::size_t i = 0; i < t_count; ++i) {
        all_verts[i] = patch.tile_vertices(static_cast<int>(i));
        centroids[i] = centroid(all_verts[i]);
        boxes[i] = BBox2::of(all_verts[i]);
    }

    PointIndex seen(1e-6);
    std::vector<Vec2> candidates;
    for (std::size_t i = 0; i < t_count; ++i) {
        for (std::size_t j = 0; j < t_count; ++j) {
            if (i == j || patch.tiles[i].proto != patch.tiles[j].proto) continue;
            const Vec2 d = centroids[j] - centroids[i];
            if (norm(d) < 1e-9) continue;
            if (seen.find(d) < 0) {
                seen.find_or_add(d);
                candidates.push_back(d);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](Vec2 a, Vec2 b) { return norm(a) < norm(b); });
    if (static_cast<int>(candidates.size()) > max_candidates)
        candidates.resize(static_cast<std::size_t>(max_candidates));

    auto point_covered = [&](Vec2 p) {
        for (std::size_t i = 0; i < t_count; ++i) {
            if (p.x < boxes[i].xmin - kQuant || p.x > boxes[i].xmax + kQuant ||
                p.y < boxes[i].ymin - kQuant || p.y > boxes[i].ymax + kQuant)
                continue;
            if (locate_point(p, all_verts[i], kQuant) != PointLocation::outside) return true;
        }
        return false;
    };
    auto tile_at = [&](int proto, Vec2 c, const std::vector<Vec2>& verts) {
        for (std::size_t i = 0; i < t_count; ++i) {
            if (patch.tiles[i].proto != proto || dist(centroids[i], c) > 1e-6) continue;
            bool match = true;
            for (const Vec2& v : verts) {
                bool hit = false;
                for (const Vec2& w : all_verts[i]) {
                    if (dist(v, w) < 1e-6) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    match = false;
                    break;
                }
            }
            if (match) return true;
        }
        return false;
    };

    std::vector<Vec2> symmetries;
    for (const Vec2& t : candidates) {
        int matched = 0;
        bool broken = false;
        for (std::size_t i = 0; i < t_count && !broken; ++i) {
            std::vector<Vec2> moved = all_verts[i];
            bool inside = true;
            for (Vec2& v : moved) {
                v = v + t;
                if (!point_covered(v)) {
                    inside = false;
                    break;
                }
            }
            if (!inside || !point_covered(centroids[i] + t)) continue;
            if (tile_at(patch.tiles[i].proto, centroids[i] + t, moved)) ++matched;
            else broken = true;
        }
        if (!broken && matched > 0) symmetries.push_back(t);
    }
    return symmetries;
}

}  // namespace qrpoly
