#pragma once

#include <optional>
#include <vector>

#include "semitoric/geom.hpp"

namespace semitoric {

// Delta cut by a vertical line {x = lambda}. Infinite endpoints are
// represented by the corresponding flag; `bottom`/`top` are only
// meaningful when the matching side is finite.
struct VerticalSlice {
    enum class Kind { Empty, Compact, Unbounded };

    Kind kind = Kind::Empty;
    Rational lambda;
    Pt bottom, top;
    bool bottom_infinite = false;
    bool top_infinite = false;

    bool empty() const { return kind == Kind::Empty; }
    bool compact() const { return kind == Kind::Compact; }
    Rational length() const { return top.y - bottom.y; }
};

// Primitive edge directions at a boundary point, oriented (det >= 0).
// At a top-boundary point u points to the left half, v to the right.
struct CornerBasis {
    Pt z;
    VecZ2 u;
    VecZ2 v;
};

// Inward constraint <normal, p> <= offset.
struct HalfPlane {
    VecZ2 normal;
    Rational offset;

    bool satisfied(const Pt& p) const {
        return Rational(normal.x) * p.x + Rational(normal.y) * p.y <= offset;
    }
    bool strictly(const Pt& p) const {
        return Rational(normal.x) * p.x + Rational(normal.y) * p.y < offset;
    }
    Rational residual(const Pt& p) const {
        return offset - Rational(normal.x) * p.x - Rational(normal.y) * p.y;
    }
};

// Directed boundary edge, traversed with the interior on the left.
// Infinite ends are flagged; `a` is still a base point on the edge line
// when a_infinite is set (and likewise for `b`).
struct BoundaryEdge {
    Pt a;
    Pt b;
    bool a_infinite = false;
    bool b_infinite = false;
    VecZ2 travel; // primitive direction of traversal
};

// Rational convex polygon, possibly unbounded. Three storage kinds:
//   Compact: counterclockwise vertex cycle;
//   Chain:   vertex chain with a recession ray at each end;
//   Strip:   region between two parallel boundary lines, no vertices.
class RationalPolygon {
public:
    enum class Kind { Compact, Chain, Strip };

    static RationalPolygon from_points(const std::vector<Pt>& pts,
                                       const std::vector<VecZ2>& rays = {});
    static RationalPolygon chain_with_rays(std::vector<Pt> chain, const VecZ2& ray_in,
                                           const VecZ2& ray_out);
    static RationalPolygon strip(const VecZ2& dir, const Rational& c_low,
                                 const Rational& c_high);

    Kind kind() const { return kind_; }
    bool is_compact() const { return kind_ == Kind::Compact; }

    const std::vector<Pt>& vertices() const { return vertices_; }
    const VecZ2& ray_in() const { return ray_in_; }
    const VecZ2& ray_out() const { return ray_out_; }
    const VecZ2& strip_dir() const { return strip_dir_; }
    const Rational& strip_low() const { return strip_low_; }
    const Rational& strip_high() const { return strip_high_; }

    bool operator==(const RationalPolygon&) const = default;

    std::vector<BoundaryEdge> edges() const;
    std::vector<HalfPlane> halfplanes() const;

    bool contains(const Pt& p) const;
    bool interior_contains(const Pt& p) const;
    bool on_boundary(const Pt& p) const;
    bool is_vertex(const Pt& p) const;

    // Recession directions (0, 1 or 2 primitive vectors; strips report both).
    std::vector<VecZ2> recession() const;
    bool has_vertical_recession() const;

    // Open x-range of the polygon; nullopt on an unbounded side.
    std::optional<Rational> x_min() const;
    std::optional<Rational> x_max() const;
    std::optional<Rational> y_min() const;
    std::optional<Rational> y_max() const;

    VerticalSlice vertical_slice(const Rational& lambda) const;
    Pt top_boundary_point(const Rational& lambda) const;
    CornerBasis corner_basis(const Pt& z) const;

    RationalPolygon map_affine(const AffineMapZ& m) const;
    RationalPolygon translate(const Pt& t) const { return map_affine(AffineMapZ::translate(t)); }
    RationalPolygon map_shear(const PiecewiseShear& ps) const;
    bool is_convex_image(const PiecewiseShear& ps) const;

    std::string to_string() const;

private:
    RationalPolygon() = default;

    std::optional<RationalPolygon> try_map_shear(const PiecewiseShear& ps) const;
    void canonicalize();
    void validate_or_throw() const;

    Kind kind_ = Kind::Compact;
    std::vector<Pt> vertices_;
    VecZ2 ray_in_, ray_out_;   // Chain only
    VecZ2 strip_dir_;          // Strip only
    Rational strip_low_, strip_high_;
};

} // namespace semitoric
