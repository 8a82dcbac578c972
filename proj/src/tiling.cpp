#include "subtile/tiling.hpp"

#include <algorithm>
#include <cmath>

namespace subtile {

std::shared_ptr<const PrototileSet> PrototileSet::make(FieldPtr field, int dim,
                                                       std::vector<std::string> names,
                                                       std::vector<Polygon> polys) {
    if (names.size() != polys.size()) throw SchemaError("prototile names/polygons mismatch");
    if (polys.empty()) throw SchemaError("at least one prototile required");
    auto ps = std::shared_ptr<PrototileSet>(new PrototileSet());
    ps->field_ = std::move(field);
    ps->dim_ = dim;
    Vec origin = Vec::zero(ps->field_, dim);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].dim() != dim) throw DimensionError("prototile dimension mismatch");
        if (!polys[i].contains_point(origin, origin, true))
            throw SchemaError("prototile '" + names[i] + "' must contain the origin in its interior");
        if (ps->by_name_.count(names[i]))
            throw SchemaError("duplicate prototile name '" + names[i] + "'");
        ps->by_name_[names[i]] = static_cast<int>(i);
    }
    ps->names_ = std::move(names);
    ps->polys_ = std::move(polys);
    FieldElem mx = FieldElem::zero(ps->field_);
    for (const auto& p : ps->polys_)
        if (compare(p.max_vertex_norm_sq(), mx) > 0) mx = p.max_vertex_norm_sq();
    ps->max_norm_sq_ = mx;
    ps->approx_radius_ = std::sqrt(std::max(0.0, mx.approx())) + 1e-6;
    return ps;
}

int PrototileSet::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw SchemaError("unknown prototile '" + name + "'");
    return it->second;
}

int tile_compare(const PlacedTile& a, const PlacedTile& b) {
    if (a.proto != b.proto) return a.proto < b.proto ? -1 : 1;
    return Vec::lex_compare(a.shift, b.shift);
}

void Patch::finish() {
    std::sort(tiles_.begin(), tiles_.end(),
              [](const PlacedTile& a, const PlacedTile& b) { return tile_compare(a, b) < 0; });
    for (std::size_t i = 0; i + 1 < tiles_.size(); ++i) {
        if (tiles_[i] == tiles_[i + 1])
            throw OverlapError("duplicate tile (" + protos_->name(tiles_[i].proto) + " @ " +
                               tiles_[i].shift.str() + ")");
    }
    area2_ = FieldElem::zero(protos_->field());
    for (const auto& t : tiles_) area2_ = area2_ + protos_->poly(t.proto).area2();
}

Patch Patch::trusted(ProtoPtr protos, std::vector<PlacedTile> tiles) {
    Patch p;
    p.protos_ = std::move(protos);
    p.tiles_ = std::move(tiles);
    p.finish();
    return p;
}

Patch Patch::build(ProtoPtr protos, std::vector<PlacedTile> tiles) {
    Patch p = trusted(std::move(protos), std::move(tiles));
    if (p.size() <= 1) return p;
    const auto& ps = *p.protos_;
    if (ps.dim() == 1) {
        // sorted order makes 1-d overlap a neighbour affair
        for (int i = 0; i + 1 < p.size(); ++i) {
            for (int j = i + 1; j < p.size(); ++j) {
                const auto& a = p.tiles_[i];
                const auto& b = p.tiles_[j];
                if (interiors_overlap(ps.poly(a.proto), a.shift, ps.poly(b.proto), b.shift))
                    throw OverlapError("tiles overlap: (" + ps.name(a.proto) + " @ " +
                                       a.shift.str() + ") and (" + ps.name(b.proto) + " @ " +
                                       b.shift.str() + ")");
                // beyond reach of tile i
                double gap = b.shift[0].approx() - a.shift[0].approx();
                if (gap > 2.0 * ps.approx_radius() + 1.0) break;
            }
        }
        return p;
    }
    TileGrid grid(p, 2.0 * ps.approx_radius() + 1e-3);
    for (int i = 0; i < p.size(); ++i) {
        std::vector<int> cand = grid.near_tile(i);
        std::sort(cand.begin(), cand.end());
        for (int j : cand) {
            if (j <= i) continue;
            const auto& a = p.tiles_[i];
            const auto& b = p.tiles_[j];
            if (interiors_overlap(ps.poly(a.proto), a.shift, ps.poly(b.proto), b.shift))
                throw OverlapError("tiles overlap: (" + ps.name(a.proto) + " @ " + a.shift.str() +
                                   ") and (" + ps.name(b.proto) + " @ " + b.shift.str() + ")");
        }
    }
    return p;
}

bool Patch::contains_tile(const PlacedTile& t) const {
    auto it = std::lower_bound(
        tiles_.begin(), tiles_.end(), t,
        [](const PlacedTile& a, const PlacedTile& b) { return tile_compare(a, b) < 0; });
    return it != tiles_.end() && *it == t;
}

Patch Patch::translated(const Vec& v) const {
    std::vector<PlacedTile> ts;
    ts.reserve(tiles_.size());
    for (const auto& t : tiles_) ts.push_back({t.proto, t.shift + v});
    return Patch::trusted(protos_, std::move(ts));
}

std::vector<Placed> Patch::placed() const {
    std::vector<Placed> out;
    out.reserve(tiles_.size());
    for (const auto& t : tiles_) out.push_back({&protos_->poly(t.proto), t.shift});
    return out;
}

std::size_t Patch::hash() const {
    std::size_t h = 0xa17c3;
    for (const auto& t : tiles_) h = hash_combine(h, t.hash());
    return h;
}

bool Patch::operator==(const Patch& o) const {
    if (tiles_.size() != o.tiles_.size()) return false;
    for (std::size_t i = 0; i < tiles_.size(); ++i)
        if (!(tiles_[i] == o.tiles_[i])) return false;
    return true;
}

CanonicalPatch canonicalize(const Patch& p) {
    if (p.empty()) throw EmptyPatch("cannot canonicalize an empty patch");
    // tiles are sorted, so the anchor is the first tile
    Vec anchor = p.tiles().front().shift;
    return CanonicalPatch{p.translated(-anchor), anchor};
}

Patch restrict(const Patch& p, const Vec& center, const FieldElem& r_sq, RestrictMode mode) {
    if (r_sq.sign() <= 0) throw PreconditionFailed("restrict needs R^2 > 0");
    std::vector<PlacedTile> keep;
    for (const auto& t : p.tiles()) {
        BallRel rel = ball_relation(p.protos()->poly(t.proto), t.shift, center, r_sq);
        bool ok = (rel == BallRel::inside) ||
                  (mode == RestrictMode::sqcap && rel == BallRel::touches);
        if (ok) keep.push_back(t);
    }
    return Patch::trusted(p.protos(), std::move(keep));
}

Patch restrict_near(const Patch& p, const TileGrid& grid, const Vec& center,
                    const FieldElem& r_sq, RestrictMode mode) {
    if (r_sq.sign() <= 0) throw PreconditionFailed("restrict needs R^2 > 0");
    double cx = center[0].approx();
    double cy = p.protos()->dim() == 2 ? center[1].approx() : 0.0;
    double radius = std::sqrt(std::max(0.0, r_sq.approx())) + 1e-6;
    std::vector<int> cand = grid.near_ball(cx, cy, radius);
    std::vector<PlacedTile> keep;
    for (int i : cand) {
        const auto& t = p.tiles()[i];
        BallRel rel = ball_relation(p.protos()->poly(t.proto), t.shift, center, r_sq);
        bool ok = (rel == BallRel::inside) ||
                  (mode == RestrictMode::sqcap && rel == BallRel::touches);
        if (ok) keep.push_back(t);
    }
    return Patch::trusted(p.protos(), std::move(keep));
}

TileGrid::TileGrid(const Patch& patch, double cell) : cell_(cell <= 0 ? 1.0 : cell) {
    pad_ = patch.protos()->approx_radius();
    int n = patch.size();
    xs_.resize(n);
    ys_.resize(n, 0.0);
    bool two = patch.protos()->dim() == 2;
    for (int i = 0; i < n; ++i) {
        xs_[i] = patch.tiles()[i].shift[0].approx();
        if (two) ys_[i] = patch.tiles()[i].shift[1].approx();
        long long cx = static_cast<long long>(std::floor(xs_[i] / cell_));
        long long cy = static_cast<long long>(std::floor(ys_[i] / cell_));
        cells_[key(cx, cy)].push_back(i);
    }
}

std::vector<int> TileGrid::near_ball(double cx, double cy, double radius) const {
    std::vector<int> out;
    double r = radius + pad_ + 1e-6;
    long long x0 = static_cast<long long>(std::floor((cx - r) / cell_));
    long long x1 = static_cast<long long>(std::floor((cx + r) / cell_));
    long long y0 = static_cast<long long>(std::floor((cy - r) / cell_));
    long long y1 = static_cast<long long>(std::floor((cy + r) / cell_));
    for (long long a = x0; a <= x1; ++a)
        for (long long b = y0; b <= y1; ++b) {
            auto it = cells_.find(key(a, b));
            if (it == cells_.end()) continue;
            for (int i : it->second) {
                double dx = xs_[i] - cx, dy = ys_[i] - cy;
                if (std::sqrt(dx * dx + dy * dy) <= r) out.push_back(i);
            }
        }
    return out;
}

std::vector<int> TileGrid::near_tile(int idx) const {
    return near_ball(xs_[idx], ys_[idx], 2 * pad_ + 1e-6);
}

}  // namespace subtile
