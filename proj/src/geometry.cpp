#include "subtile/geometry.hpp"

#include <algorithm>
#include <unordered_map>

namespace subtile {

namespace {

struct P2 {
    FieldElem x, y;
};

P2 placed_vertex(const Vec& v, const Vec& s) { return {v[0] + s[0], v[1] + s[1]}; }
P2 sub(const P2& a, const P2& b) { return {a.x - b.x, a.y - b.y}; }
FieldElem cross(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }
FieldElem dot2(const P2& a, const P2& b) { return a.x * b.x + a.y * b.y; }

int fsign(const FieldElem& e) { return e.sign(); }

int orient(const P2& a, const P2& b, const P2& c) {
    return fsign(cross(sub(b, a), sub(c, a)));
}

bool same_point(const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }

// p on the closed segment ab (segment not degenerate)
bool on_segment_closed(const P2& p, const P2& a, const P2& b) {
    if (orient(a, b, p) != 0) return false;
    FieldElem t = dot2(sub(p, a), sub(b, a));
    if (fsign(t) < 0) return false;
    FieldElem tb = dot2(sub(p, b), sub(a, b));
    return fsign(tb) >= 0;
}

bool on_segment_open(const P2& p, const P2& a, const P2& b) {
    return on_segment_closed(p, a, b) && !same_point(p, a) && !same_point(p, b);
}

bool proper_cross(const P2& a, const P2& b, const P2& c, const P2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

// any common point, endpoints included
bool segments_touch(const P2& a, const P2& b, const P2& c, const P2& d) {
    if (proper_cross(a, b, c, d)) return true;
    return on_segment_closed(c, a, b) || on_segment_closed(d, a, b) ||
           on_segment_closed(a, c, d) || on_segment_closed(b, c, d);
}

// Open sector of directions at a polygon vertex: CCW from d_out to d_in.
struct Sector {
    P2 d_out, d_in;
};

bool same_dir(const P2& a, const P2& b) {
    return fsign(cross(a, b)) == 0 && fsign(dot2(a, b)) > 0;
}

bool sector_contains(const Sector& s, const P2& m) {
    int c = fsign(cross(s.d_out, s.d_in));
    if (c > 0) return fsign(cross(s.d_out, m)) > 0 && fsign(cross(m, s.d_in)) > 0;
    if (c == 0) return fsign(cross(s.d_out, m)) > 0;  // straight vertex
    return fsign(cross(s.d_in, m)) < 0 || fsign(cross(m, s.d_out)) < 0;
}

bool sectors_intersect(const Sector& s, const Sector& t) {
    if (sector_contains(s, t.d_out) || sector_contains(s, t.d_in)) return true;
    if (sector_contains(t, s.d_out) || sector_contains(t, s.d_in)) return true;
    return same_dir(s.d_out, t.d_out) || same_dir(s.d_in, t.d_in);
}

// interior halfplane {m : <n,m> > 0} as a straight sector
Sector halfplane_sector(const P2& n) {
    return Sector{{n.y, -n.x}, {-n.y, n.x}};
}

// placed polygon with vertices materialized once
struct PlacedPoly {
    std::vector<P2> pts;
    PlacedPoly(const Polygon& poly, const Vec& shift) {
        pts.reserve(poly.size());
        for (const auto& v : poly.vertices()) pts.push_back(placed_vertex(v, shift));
    }
    P2 at(int i) const {
        int n = static_cast<int>(pts.size());
        return pts[((i % n) + n) % n];
    }
    int size() const { return static_cast<int>(pts.size()); }
    Sector sector_at(int i) const {
        P2 v = at(i);
        return Sector{sub(at(i + 1), v), sub(at(i - 1), v)};
    }
};

bool point_in_polygon2(const PlacedPoly& pp, const P2& p, bool strict) {
    int n = pp.size();
    for (int i = 0; i < n; ++i) {
        if (on_segment_closed(p, pp.at(i), pp.at(i + 1))) return !strict;
    }
    int cnt = 0;
    for (int i = 0; i < n; ++i) {
        P2 a = pp.at(i), b = pp.at(i + 1);
        int ya = compare(a.y, p.y), yb = compare(b.y, p.y);
        if ((ya > 0) == (yb > 0)) continue;
        FieldElem dy = b.y - a.y;
        FieldElem t = p.y - a.y;
        FieldElem e = (a.x - p.x) * dy + (b.x - a.x) * t;
        if (fsign(e) * fsign(dy) > 0) ++cnt;
    }
    return cnt % 2 == 1;
}

}  // namespace

Polygon Polygon::make(std::vector<Vec> vertices) {
    Polygon p;
    if (vertices.empty()) throw SchemaError("polygon without vertices");
    p.dim_ = vertices[0].dim();
    for (const auto& v : vertices)
        if (v.dim() != p.dim_) throw SchemaError("mixed vertex dimensions");
    p.v_ = std::move(vertices);

    if (p.dim_ == 1) {
        if (p.v_.size() != 2) throw SchemaError("1-d tile needs exactly two endpoints");
        if (compare(p.v_[0][0], p.v_[1][0]) >= 0)
            throw SchemaError("1-d tile endpoints must be increasing");
        p.area2_ = p.v_[1][0] - p.v_[0][0];
        std::vector<FieldElem> mid = {(p.v_[0][0] + p.v_[1][0]) * QQ(1, 2)};
        p.deep_ = Vec(std::move(mid));
        FieldElem m0 = p.v_[0][0] * p.v_[0][0];
        FieldElem m1 = p.v_[1][0] * p.v_[1][0];
        p.max_norm_sq_ = compare(m0, m1) >= 0 ? m0 : m1;
        p.bbox_lo_ = {p.v_[0][0]};
        p.bbox_hi_ = {p.v_[1][0]};
        return p;
    }
    if (p.dim_ != 2) throw DimensionError("tiles must have dimension 1 or 2");
    int n = p.size();
    if (n < 3) throw SchemaError("polygon needs at least 3 vertices");

    Vec zero = Vec::zero(p.v_[0].field(), 2);
    PlacedPoly pp(p, zero);

    for (int i = 0; i < n; ++i) {
        if (same_point(pp.at(i), pp.at(i + 1)))
            throw SchemaError("degenerate zero-length polygon edge");
    }
    for (int i = 0; i < n; ++i) {
        P2 e_prev = sub(pp.at(i), pp.at(i - 1));
        P2 e_next = sub(pp.at(i + 1), pp.at(i));
        if (fsign(cross(e_prev, e_next)) == 0 && fsign(dot2(e_prev, e_next)) < 0)
            throw SchemaError("polygon has a zero-area spike");
    }
    // simplicity: non-adjacent edges may not touch at all
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_touch(pp.at(i), pp.at(i + 1), pp.at(j), pp.at(j + 1)))
                throw SchemaError("polygon is not simple");
        }
    }
    FieldElem area2 = FieldElem::zero(p.v_[0].field());
    for (int i = 0; i < n; ++i) area2 = area2 + cross(pp.at(i), pp.at(i + 1));
    if (fsign(area2) <= 0)
        throw SchemaError("polygon must be counterclockwise with positive area");
    p.area2_ = area2;

    // deep interior point: shoot from the lex-lowest (y, then x) vertex
    // toward the midpoint of its neighbours, stop before the first boundary
    // hit
    int vi = 0;
    for (int i = 1; i < n; ++i) {
        P2 a = pp.at(i), b = pp.at(vi);
        int c = compare(a.y, b.y);
        if (c < 0 || (c == 0 && compare(a.x, b.x) < 0)) vi = i;
    }
    P2 v = pp.at(vi);
    P2 m = {(pp.at(vi - 1).x + pp.at(vi + 1).x) * QQ(1, 2),
            (pp.at(vi - 1).y + pp.at(vi + 1).y) * QQ(1, 2)};
    P2 r = sub(m, v);
    FieldElem tmin = FieldElem::one(p.v_[0].field());
    for (int j = 0; j < n; ++j) {
        if (j == vi || (j + 1) % n == vi) continue;  // incident edges
        P2 a = pp.at(j), b = pp.at(j + 1);
        P2 s = sub(b, a);
        FieldElem den = cross(r, s);
        if (fsign(den) != 0) {
            FieldElem t = cross(sub(a, v), s) / den;
            FieldElem u = cross(sub(a, v), r) / den;
            if (fsign(t) > 0 && compare(t, tmin) < 0 && fsign(u) >= 0 &&
                compare(u, FieldElem::one(t.field())) <= 0)
                tmin = t;
        } else if (fsign(cross(sub(a, v), r)) == 0) {
            // collinear with the ray: nearest positive parameter
            FieldElem rr = dot2(r, r);
            FieldElem ta = dot2(sub(a, v), r) / rr;
            FieldElem tb = dot2(sub(b, v), r) / rr;
            FieldElem lo = compare(ta, tb) <= 0 ? ta : tb;
            if (fsign(lo) > 0 && compare(lo, tmin) < 0) tmin = lo;
        }
    }
    FieldElem t2 = tmin * QQ(1, 2);
    std::vector<FieldElem> dp = {v.x + t2 * r.x, v.y + t2 * r.y};
    p.deep_ = Vec(std::move(dp));

    FieldElem mx = FieldElem::zero(p.v_[0].field());
    for (int i = 0; i < n; ++i) {
        FieldElem nn = p.v_[i].norm_sq();
        if (compare(nn, mx) > 0) mx = nn;
    }
    p.max_norm_sq_ = mx;
    p.bbox_lo_ = {p.v_[0][0], p.v_[0][1]};
    p.bbox_hi_ = {p.v_[0][0], p.v_[0][1]};
    for (int i = 1; i < n; ++i)
        for (int axis = 0; axis < 2; ++axis) {
            if (compare(p.v_[i][axis], p.bbox_lo_[axis]) < 0) p.bbox_lo_[axis] = p.v_[i][axis];
            if (compare(p.v_[i][axis], p.bbox_hi_[axis]) > 0) p.bbox_hi_[axis] = p.v_[i][axis];
        }
    return p;
}

bool Polygon::contains_point(const Vec& shift, const Vec& pt, bool strict) const {
    if (dim_ == 1) {
        FieldElem lo = v_[0][0] + shift[0], hi = v_[1][0] + shift[0];
        int cl = compare(pt[0], lo), ch = compare(pt[0], hi);
        return strict ? (cl > 0 && ch < 0) : (cl >= 0 && ch <= 0);
    }
    PlacedPoly pp(*this, shift);
    return point_in_polygon2(pp, {pt[0], pt[1]}, strict);
}

bool interiors_overlap(const Polygon& p, const Vec& ps, const Polygon& q, const Vec& qs) {
    if (p.dim() == 1) {
        FieldElem lo1 = p.vertices()[0][0] + ps[0], hi1 = p.vertices()[1][0] + ps[0];
        FieldElem lo2 = q.vertices()[0][0] + qs[0], hi2 = q.vertices()[1][0] + qs[0];
        FieldElem lo = compare(lo1, lo2) >= 0 ? lo1 : lo2;
        FieldElem hi = compare(hi1, hi2) <= 0 ? hi1 : hi2;
        return compare(lo, hi) < 0;
    }
    // open bounding boxes must overlap first (cheap exact reject)
    for (int axis = 0; axis < 2; ++axis) {
        FieldElem lo1 = p.bbox_lo(axis) + ps[axis], hi1 = p.bbox_hi(axis) + ps[axis];
        FieldElem lo2 = q.bbox_lo(axis) + qs[axis], hi2 = q.bbox_hi(axis) + qs[axis];
        const FieldElem& lo = compare(lo1, lo2) >= 0 ? lo1 : lo2;
        const FieldElem& hi = compare(hi1, hi2) <= 0 ? hi1 : hi2;
        if (compare(lo, hi) >= 0) return false;
    }

    PlacedPoly P(p, ps), Q(q, qs);
    int np = P.size(), nq = Q.size();

    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nq; ++j)
            if (proper_cross(P.at(i), P.at(i + 1), Q.at(j), Q.at(j + 1))) return true;

    for (int i = 0; i < np; ++i)
        if (point_in_polygon2(Q, P.at(i), true)) return true;
    for (int j = 0; j < nq; ++j)
        if (point_in_polygon2(P, Q.at(j), true)) return true;

    // boundary contacts: local sector analysis
    for (int i = 0; i < np; ++i) {
        P2 v = P.at(i);
        for (int j = 0; j < nq; ++j) {
            if (same_point(v, Q.at(j))) {
                if (sectors_intersect(P.sector_at(i), Q.sector_at(j))) return true;
            } else if (on_segment_open(v, Q.at(j), Q.at(j + 1))) {
                P2 d = sub(Q.at(j + 1), Q.at(j));
                P2 n = {-(d.y), d.x};  // interior side of a CCW edge
                if (sectors_intersect(P.sector_at(i), halfplane_sector(n))) return true;
            }
        }
    }
    for (int j = 0; j < nq; ++j) {
        P2 w = Q.at(j);
        for (int i = 0; i < np; ++i) {
            if (same_point(w, P.at(i))) continue;  // handled above
            if (on_segment_open(w, P.at(i), P.at(i + 1))) {
                P2 d = sub(P.at(i + 1), P.at(i));
                P2 n = {-(d.y), d.x};
                if (sectors_intersect(Q.sector_at(j), halfplane_sector(n))) return true;
            }
        }
    }

    // containment without boundary interpenetration
    Vec dp = p.deep_point() + ps;
    if (point_in_polygon2(Q, {dp[0], dp[1]}, true)) return true;
    Vec dq = q.deep_point() + qs;
    if (point_in_polygon2(P, {dq[0], dq[1]}, true)) return true;
    return false;
}

FieldElem dist_sq_point_segment(const Vec& pt, const Vec& a, const Vec& b) {
    P2 p{pt[0], pt[1]}, A{a[0], a[1]}, B{b[0], b[1]};
    P2 ab = sub(B, A), ap = sub(p, A);
    FieldElem len2 = dot2(ab, ab);
    FieldElem t = dot2(ap, ab);
    if (fsign(t) <= 0) return dot2(ap, ap);
    if (compare(t, len2) >= 0) {
        P2 bp = sub(p, B);
        return dot2(bp, bp);
    }
    return dot2(ap, ap) - t * t / len2;
}

FieldElem dist_sq_point_polygon(const Polygon& poly, const Vec& shift, const Vec& pt) {
    if (poly.dim() == 1) {
        FieldElem lo = poly.vertices()[0][0] + shift[0], hi = poly.vertices()[1][0] + shift[0];
        if (compare(pt[0], lo) >= 0 && compare(pt[0], hi) <= 0)
            return FieldElem::zero(pt.field());
        FieldElem d1 = pt[0] - lo, d2 = pt[0] - hi;
        FieldElem s1 = d1 * d1, s2 = d2 * d2;
        return compare(s1, s2) <= 0 ? s1 : s2;
    }
    if (poly.contains_point(shift, pt, false)) return FieldElem::zero(pt.field());
    const auto& vs = poly.vertices();
    int n = poly.size();
    FieldElem best;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        Vec a = vs[i] + shift, b = vs[(i + 1) % n] + shift;
        FieldElem d = dist_sq_point_segment(pt, a, b);
        if (first || compare(d, best) < 0) {
            best = d;
            first = false;
        }
    }
    return best;
}

BallRel ball_relation(const Polygon& p, const Vec& shift, const Vec& center,
                      const FieldElem& r_sq) {
    // closure inside the open ball <=> every vertex strictly inside
    bool inside = true;
    for (const auto& v : p.vertices()) {
        Vec w = v + shift;
        FieldElem d = (w - center).norm_sq();
        if (compare(d, r_sq) >= 0) {
            inside = false;
            break;
        }
    }
    if (inside) return BallRel::inside;
    FieldElem d = dist_sq_point_polygon(p, shift, center);
    return compare(d, r_sq) <= 0 ? BallRel::touches : BallRel::outside;
}

namespace {

struct LineKey {
    FieldElem a, b, c;  // a x + b y = c, first nonzero of (a, b) equals 1
    bool operator==(const LineKey& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct LineKeyHash {
    std::size_t operator()(const LineKey& k) const {
        return hash_combine(hash_combine(k.a.hash(), k.b.hash()), k.c.hash());
    }
};

struct LineEvent {
    FieldElem t;
    int delta;  // +1 start, -1 end
    int side;   // interior side marker
};

}  // namespace

UnionBoundary union_boundary(const std::vector<Placed>& tiles) {
    UnionBoundary out;
    if (tiles.empty()) return out;
    int dim = tiles[0].poly->dim();
    out.dim = dim;

    if (dim == 1) {
        std::vector<std::pair<FieldElem, int>> events;
        for (const auto& t : tiles) {
            events.push_back({t.poly->vertices()[0][0] + t.shift[0], +1});
            events.push_back({t.poly->vertices()[1][0] + t.shift[0], -1});
        }
        std::sort(events.begin(), events.end(), [](const auto& x, const auto& y) {
            int c = compare(x.first, y.first);
            if (c != 0) return c < 0;
            return x.second > y.second;
        });
        int cov = 0;
        for (std::size_t i = 0; i < events.size();) {
            std::size_t j = i;
            int before = cov;
            while (j < events.size() && events[j].first == events[i].first) {
                cov += events[j].second;
                ++j;
            }
            // coverage counts hold on the open interval up to the next event
            if (cov >= 2 && j < events.size()) throw InvalidUnion("interval tiles overlap");
            if ((before == 0) != (cov == 0)) out.cuts.push_back(events[i].first);
            i = j;
        }
        return out;
    }

    std::unordered_map<LineKey, std::vector<LineEvent>, LineKeyHash> lines;
    for (const auto& t : tiles) {
        const auto& vs = t.poly->vertices();
        int n = t.poly->size();
        for (int i = 0; i < n; ++i) {
            Vec A = vs[i] + t.shift, B = vs[(i + 1) % n] + t.shift;
            FieldElem dx = B[0] - A[0], dy = B[1] - A[1];
            FieldElem na = dy, nb = -dx;  // right normal = exterior side of CCW
            FieldElem cc = na * A[0] + nb * A[1];
            FieldElem k = na.is_zero() ? nb : na;
            int ksgn = k.sign();
            FieldElem kinv = k.inverse();
            LineKey key{na * kinv, nb * kinv, cc * kinv};
            FieldElem ta = -(key.b) * A[0] + key.a * A[1];
            FieldElem tb = -(key.b) * B[0] + key.a * B[1];
            int side = ksgn > 0 ? 0 : 1;
            auto& ev = lines[key];
            if (compare(ta, tb) <= 0) {
                ev.push_back({ta, +1, side});
                ev.push_back({tb, -1, side});
            } else {
                ev.push_back({tb, +1, side});
                ev.push_back({ta, -1, side});
            }
        }
    }

    for (auto& [key, ev] : lines) {
        std::sort(ev.begin(), ev.end(), [](const LineEvent& x, const LineEvent& y) {
            int c = compare(x.t, y.t);
            if (c != 0) return c < 0;
            return x.delta > y.delta;
        });
        FieldElem den = key.a * key.a + key.b * key.b;
        FieldElem deninv = den.inverse();
        auto line_point = [&](const FieldElem& t) {
            std::vector<FieldElem> xy = {(key.a * key.c - key.b * t) * deninv,
                                         (key.b * key.c + key.a * t) * deninv};
            return Vec(std::move(xy));
        };
        int cov[2] = {0, 0};
        FieldElem prev_t;
        bool have_prev = false;
        for (std::size_t i = 0; i < ev.size();) {
            const FieldElem& t = ev[i].t;
            // coverage currently held on the open interval (prev_t, t)
            if (have_prev && compare(prev_t, t) < 0) {
                if (cov[0] >= 2 || cov[1] >= 2)
                    throw InvalidUnion("tile interiors overlap along an edge");
                if (cov[0] + cov[1] == 1)
                    out.segs.push_back({line_point(prev_t), line_point(t)});
            }
            std::size_t j = i;
            while (j < ev.size() && ev[j].t == t) {
                cov[ev[j].side] += ev[j].delta;
                ++j;
            }
            prev_t = t;
            have_prev = true;
            i = j;
        }
    }
    return out;
}

std::optional<FieldElem> UnionBoundary::dist_sq(const Vec& p) const {
    std::optional<FieldElem> best;
    if (dim == 1) {
        for (const auto& c : cuts) {
            FieldElem d = (p[0] - c) * (p[0] - c);
            if (!best || compare(d, *best) < 0) best = d;
        }
        return best;
    }
    for (const auto& s : segs) {
        FieldElem d = dist_sq_point_segment(p, s.a, s.b);
        if (!best || compare(d, *best) < 0) best = d;
    }
    return best;
}

bool segment_touches_polygon(const Polygon& poly, const Vec& shift, const Vec& a, const Vec& b) {
    PlacedPoly pp(poly, shift);
    P2 A{a[0], a[1]}, B{b[0], b[1]};
    int n = pp.size();
    for (int i = 0; i < n; ++i)
        if (segments_touch(A, B, pp.at(i), pp.at(i + 1))) return true;
    // segment might sit entirely inside
    return point_in_polygon2(pp, A, false);
}

bool point_in_union(const std::vector<Placed>& tiles, const Vec& p) {
    for (const auto& t : tiles)
        if (t.poly->contains_point(t.shift, p, false)) return true;
    return false;
}

bool union_contains_ball(const std::vector<Placed>& tiles, const Vec& center,
                         const FieldElem& r_sq) {
    if (r_sq.sign() <= 0) throw PreconditionFailed("contains_ball needs r^2 > 0");
    for (std::size_t i = 0; i < tiles.size(); ++i)
        for (std::size_t j = i + 1; j < tiles.size(); ++j)
            if (interiors_overlap(*tiles[i].poly, tiles[i].shift, *tiles[j].poly,
                                  tiles[j].shift))
                throw InvalidUnion("tiles are not interior-disjoint");
    if (!point_in_union(tiles, center)) return false;
    UnionBoundary ub = union_boundary(tiles);
    auto d = ub.dist_sq(center);
    if (!d) return false;
    return compare(*d, r_sq) >= 0;
}

}  // namespace subtile
