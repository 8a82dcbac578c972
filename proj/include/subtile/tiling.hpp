#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "subtile/geometry.hpp"

namespace subtile {

// Prototile table shared by patches and rules. Every prototile contains the
// origin in its interior; the origin is the tile's reference position.
class PrototileSet {
  public:
    static std::shared_ptr<const PrototileSet> make(FieldPtr field, int dim,
                                                    std::vector<std::string> names,
                                                    std::vector<Polygon> polys);

    const FieldPtr& field() const { return field_; }
    int dim() const { return dim_; }
    int count() const { return static_cast<int>(polys_.size()); }
    const Polygon& poly(int i) const { return polys_.at(i); }
    const std::string& name(int i) const { return names_.at(i); }
    int index_of(const std::string& name) const;  // SchemaError when missing

    // max over prototiles of the squared vertex norm (local frame)
    const FieldElem& max_vertex_norm_sq() const { return max_norm_sq_; }
    double approx_radius() const { return approx_radius_; }

  private:
    PrototileSet() = default;
    FieldPtr field_;
    int dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Polygon> polys_;
    std::unordered_map<std::string, int> by_name_;
    FieldElem max_norm_sq_;
    double approx_radius_ = 0;
};

using ProtoPtr = std::shared_ptr<const PrototileSet>;

struct PlacedTile {
    int proto;
    Vec shift;

    bool operator==(const PlacedTile& o) const { return proto == o.proto && shift == o.shift; }
    std::size_t hash() const { return hash_combine(std::hash<int>{}(proto), shift.hash()); }
};

// exact deterministic tile order: proto index, then embedding-lex shift
int tile_compare(const PlacedTile& a, const PlacedTile& b);

// Finite set of pairwise interior-disjoint placed tiles, kept sorted.
class Patch {
  public:
    Patch() = default;

    // validates pairwise interior-disjointness; OverlapError names the first
    // offending pair in canonical order
    static Patch build(ProtoPtr protos, std::vector<PlacedTile> tiles);
    // fast path for tile sets already certified disjoint
    static Patch trusted(ProtoPtr protos, std::vector<PlacedTile> tiles);

    const ProtoPtr& protos() const { return protos_; }
    const std::vector<PlacedTile>& tiles() const { return tiles_; }
    int size() const { return static_cast<int>(tiles_.size()); }
    bool empty() const { return tiles_.empty(); }

    bool contains_tile(const PlacedTile& t) const;  // exact (binary search)
    Patch translated(const Vec& v) const;

    std::vector<Placed> placed() const;
    const FieldElem& area2() const { return area2_; }

    std::size_t hash() const;
    bool operator==(const Patch& o) const;

  private:
    ProtoPtr protos_;
    std::vector<PlacedTile> tiles_;
    FieldElem area2_;
    void finish();
};

// Patch translated so its anchor tile (minimal under tile order) sits at the
// origin; anchor_shift is the translation that was removed.
struct CanonicalPatch {
    Patch patch;
    Vec anchor_shift;

    std::size_t hash() const { return patch.hash(); }
    bool operator==(const CanonicalPatch& o) const { return patch == o.patch; }
};

CanonicalPatch canonicalize(const Patch& p);  // EmptyPatch on empty input

struct CanonicalPatchHash {
    std::size_t operator()(const CanonicalPatch& c) const { return c.hash(); }
};

enum class RestrictMode { cap, sqcap };

// P cap B(center, R) keeps tiles inside the open ball; sqcap keeps tiles
// whose closure meets the closed ball.
Patch restrict(const Patch& p, const Vec& center, const FieldElem& r_sq, RestrictMode mode);

class TileGrid;
// restrict() that only inspects grid candidates near the ball
Patch restrict_near(const Patch& p, const TileGrid& grid, const Vec& center,
                    const FieldElem& r_sq, RestrictMode mode);

// grid index over approximate tile positions; candidates only, callers
// re-check exactly
class TileGrid {
  public:
    TileGrid(const Patch& patch, double cell);
    std::vector<int> near_ball(double cx, double cy, double radius) const;
    std::vector<int> near_tile(int idx) const;
    double x(int i) const { return xs_[i]; }
    double y(int i) const { return ys_[i]; }

  private:
    double cell_;
    double pad_;
    std::vector<double> xs_, ys_;
    std::unordered_map<long long, std::vector<int>> cells_;
    long long key(long long cx, long long cy) const { return cx * 2000003LL + cy; }
};

}  // namespace subtile
