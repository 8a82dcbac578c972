#pragma once

#include <optional>
#include <vector>

#include "subtile/vec.hpp"

namespace subtile {

// Simple polygon with CCW exact field vertices (d=2), or an interval given
// by its two endpoints (d=1). Tiles are the open interiors.
class Polygon {
  public:
    static Polygon make(std::vector<Vec> vertices);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }

    // doubled area for d=2, length for d=1; always > 0
    const FieldElem& area2() const { return area2_; }
    // a point strictly interior, exact
    const Vec& deep_point() const { return deep_; }
    // squared circumradius about the local origin (max vertex norm^2)
    const FieldElem& max_vertex_norm_sq() const { return max_norm_sq_; }
    // exact axis-aligned bounding box in the local frame
    const FieldElem& bbox_lo(int axis) const { return bbox_lo_[axis]; }
    const FieldElem& bbox_hi(int axis) const { return bbox_hi_[axis]; }

    bool contains_point(const Vec& shift, const Vec& p, bool strict) const;

  private:
    Polygon() = default;
    int dim_ = 0;
    std::vector<Vec> v_;
    FieldElem area2_;
    Vec deep_;
    FieldElem max_norm_sq_;
    std::vector<FieldElem> bbox_lo_, bbox_hi_;
};

enum class BallRel { inside, touches, outside };

// open-interior intersection of two placed tiles; boundary contact is false
bool interiors_overlap(const Polygon& p, const Vec& ps, const Polygon& q, const Vec& qs);

// relation of the placed tile to the ball B(center, R) per the cap/sqcap
// semantics: inside = closure within the open ball, touches = closure meets
// the closed ball without being inside
BallRel ball_relation(const Polygon& p, const Vec& shift, const Vec& center,
                      const FieldElem& r_sq);

FieldElem dist_sq_point_segment(const Vec& pt, const Vec& a, const Vec& b);

// distance^2 from a point to the closure of a placed tile (0 if inside)
FieldElem dist_sq_point_polygon(const Polygon& p, const Vec& shift, const Vec& pt);

struct Placed {
    const Polygon* poly;
    Vec shift;
};

// Boundary of the union of interior-disjoint placed tiles, as exact segments
// (d=2) or points (d=1). Throws InvalidUnion if a same-side doubled edge
// certifies an interior overlap.
struct UnionBoundary {
    struct Seg {
        Vec a, b;
    };
    int dim = 0;
    std::vector<Seg> segs;        // d=2
    std::vector<FieldElem> cuts;  // d=1

    // squared distance from a point to the boundary; nullopt when empty
    std::optional<FieldElem> dist_sq(const Vec& p) const;
};

UnionBoundary union_boundary(const std::vector<Placed>& tiles);

// segment [a,b] touches the closure of a placed tile (d=2)
bool segment_touches_polygon(const Polygon& p, const Vec& shift, const Vec& a, const Vec& b);

bool point_in_union(const std::vector<Placed>& tiles, const Vec& p);

// closed ball B(center, r) inside the closed union support
bool union_contains_ball(const std::vector<Placed>& tiles, const Vec& center,
                         const FieldElem& r_sq);

}  // namespace subtile
