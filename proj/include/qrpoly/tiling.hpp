#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrpoly/geometry.hpp"
#include "qrpoly/polygon.hpp"

namespace qrpoly {

/// Raised when boundary-edge expansion cannot attach the forced tile.
class TilingConflict : public std::runtime_error {
  public:
    TilingConflict(const std::string& what, Vec2 where)
        : std::runtime_error(what), vertex(where) {}
    Vec2 vertex;
};

/// Immutable tile shape shared by placements. Edge i runs vertex i -> i+1;
/// `edge_class` drives the attachment rules (0 and 1 alternate for the
/// quasi-regular 2n-gons). Non-convex shapes carry a convex decomposition.
struct TileProto {
    std::string name;  // regular-hexagon, isogonal-hexagon, square, bowtie, ...
    std::vector<Vec2> vertices;
    std::vector<int> edge_class;
    std::vector<double> corner_angle;
    std::vector<std::vector<Vec2>> convex_parts;
    double area = 0.0;
};

/// Placement: vertices = rotate(prototype, rotation) + translation,
/// recomputable bit-identically from the stored fields.
struct PlacedTile {
    int proto = 0;
    double rotation = 0.0;
    Vec2 translation;
    int id = 0;
    int ring = 0;
    int class_offset = 0;  // edge-class phase for equal-edge prototypes
};

struct PatchVertex {
    Vec2 pos;
    std::vector<std::pair<int, int>> corners;  // (tile id, corner index)
    bool interior = false;
    double angle_sum = 0.0;
};

struct PatchEdge {
    int v0 = 0, v1 = 0;
    std::vector<std::pair<int, int>> sides;  // (tile id, edge index)
};

struct Patch {
    std::string family;  // hexagon, isotoxal-hexagon, octagon-square,
                         // decagon-bowtie, decagon-isogonal
    std::string variant;
    double a1 = 0.0, a2 = 0.0;
    int rings = 0;
    std::vector<TileProto> protos;
    std::vector<PlacedTile> tiles;
    std::vector<std::vector<Vec2>> declared_holes;

    // Derived index, filled by finalize().
    std::vector<PatchVertex> vertex_index;
    std::vector<PatchEdge> edge_index;

    std::vector<Vec2> tile_vertices(const PlacedTile& t) const;
    std::vector<Vec2> tile_vertices(int tile_id) const;
    const TileProto& proto_of(const PlacedTile& t) const {
        return protos[static_cast<std::size_t>(t.proto)];
    }
};

/// Tiling of the plane by isogonal hexagons and regular hexagons, two
/// isogonal and one regular at every interior vertex. a1 == a2 gives the
/// honeycomb; a1 == 0 the triangle/hexagon limit; a2 == 0 plain triangles.
Patch hexagon_patch(double a1, double a2, int rings);

/// Dual arrangement: regular hexagons (edge = the isotoxal edge length)
/// surrounded by isotoxal hexagons, angles alpha + beta + 120 = 360 at every
/// interior vertex.
Patch isotoxal_hexagon_patch(double a1, double a2, int rings);

enum class OctagonVariant { regular, isogonal, isotoxal };

/// Truncated-square combinatorics with the chosen octagon type. Squares take
/// the edge length of the octagon edges they border (the a2 class).
Patch octagon_square_patch(double a1, double a2, int rings, OctagonVariant variant);

/// Stored finite exemplars: "bowtie-exemplar" (regular decagons + girih
/// bow-ties, local D5 symmetry) or "isogonal-exemplar" (isogonal decagons
/// with declared holes where 2 x 144 degrees cannot close).
Patch decagon_patch(const std::string& kind, double a1, double a2);

struct PatchValidation {
    bool overlap_free = true;
    bool edges_match = true;
    bool angle_sums_ok = true;
    double max_overlap_ratio = 0.0;    // intersection area / smaller tile area
    double max_angle_residual = 0.0;   // |sum - 2 pi| over interior vertices
    int interior_vertices = 0;
    int boundary_vertices = 0;
    int hole_count = 0;
    std::map<std::string, int> vertex_census;  // interior configurations
    std::vector<std::string> failures;

    bool pass() const { return overlap_free && edges_match && angle_sums_ok; }
};

PatchValidation validate_patch(const Patch& p);

enum class DoubleBond { shorter, longer };

struct GrapheneGraph {
    struct Bond {
        int a = 0, b = 0;
        bool dbl = false;
        double length = 0.0;
    };
    std::vector<Vec2> atoms;
    std::vector<bool> interior;
    std::vector<Bond> bonds;
    double bond_ratio = 0.0;  // a1 / a2
};

/// Carbon/bond graph of a hexagon patch with two edge-length classes; bonds
/// tagged double by the chosen length class.
GrapheneGraph graphene_graph(const Patch& p, DoubleBond which);

/// Candidate translations (shortest difference vectors between congruent
/// tiles) that map every fully-interior translated tile onto an existing
/// tile. Returns the surviving vectors among the `max_candidates` shortest.
std::vector<Vec2> translation_symmetries(const Patch& p, int max_candidates);

}  // namespace qrpoly
