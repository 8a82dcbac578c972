#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subtile/tiling.hpp"

using namespace subtile;

namespace {

FieldPtr QF() { return NumberField::rationals(); }

Vec v2(const QQ& x, const QQ& y) {
    auto f = QF();
    return Vec({FieldElem::from_rational(f, x), FieldElem::from_rational(f, y)});
}

ProtoPtr squares() {
    QQ h(1, 2);
    Polygon sq = Polygon::make({v2(-h, -h), v2(h, -h), v2(h, h), v2(-h, h)});
    Polygon sq2 = Polygon::make({v2(-h, -h), v2(h, -h), v2(h, h), v2(-h, h)});
    return PrototileSet::make(QF(), 2, {"sq", "marked"}, {sq, sq2});
}

FieldElem fe(const QQ& q) { return FieldElem::from_rational(QF(), q); }

std::mt19937 rng(7);

QQ rq() {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 8);
    return frac(num(rng), den(rng));
}

// block of unit squares centered at integer points [0..n) x [0..n)
Patch block(const ProtoPtr& ps, int n) {
    std::vector<PlacedTile> ts;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ts.push_back({0, v2(i, j)});
    return Patch::build(ps, std::move(ts));
}

}  // namespace

TEST_CASE("prototile validation") {
    QQ h(1, 2);
    Polygon off = Polygon::make({v2(1, 1), v2(2, 1), v2(2, 2), v2(1, 2)});
    CHECK_THROWS_AS(
        (void)PrototileSet::make(QF(), 2, {"off"}, {off}),
        SchemaError);  // origin not inside
    (void)h;
}

TEST_CASE("patch build and overlap errors") {
    auto ps = squares();
    CHECK(block(ps, 2).size() == 4);
    CHECK(Patch::build(ps, {}).empty());

    std::vector<PlacedTile> bad = {{0, v2(0, 0)}, {0, v2(frac(1, 2), 0)}};
    CHECK_THROWS_WITH_AS((void)Patch::build(ps, bad),
                         doctest::Contains("tiles overlap"), OverlapError);
    // duplicate tiles
    std::vector<PlacedTile> dup = {{0, v2(0, 0)}, {0, v2(0, 0)}};
    CHECK_THROWS_AS((void)Patch::build(ps, dup), OverlapError);
    // same spot, different label: still an overlap
    std::vector<PlacedTile> lab = {{0, v2(0, 0)}, {1, v2(0, 0)}};
    CHECK_THROWS_AS((void)Patch::build(ps, lab), OverlapError);
}

TEST_CASE("restrict cap and sqcap") {
    auto ps = squares();
    Patch b = block(ps, 5);
    Vec c = v2(2, 2);  // center tile of the block
    // R^2 = 2: only the central square fits strictly inside
    Patch cap = restrict(b, c, fe(2), RestrictMode::cap);
    // brute-force oracle over the 25 tiles
    int expect = 0;
    for (const auto& t : b.tiles()) {
        bool inside = true;
        for (const auto& v : ps->poly(t.proto).vertices()) {
            Vec w = v + t.shift;
            if (compare((w - c).norm_sq(), fe(2)) >= 0) inside = false;
        }
        if (inside) ++expect;
    }
    CHECK(cap.size() == expect);
    CHECK(expect == 1);

    Patch sq = restrict(b, c, fe(2), RestrictMode::sqcap);
    for (const auto& t : cap.tiles()) CHECK(sq.contains_tile(t));
    CHECK(sq.size() >= cap.size());

    Patch e = restrict(Patch::build(ps, {}), c, fe(2), RestrictMode::cap);
    CHECK(e.empty());

    // monotone in R^2
    Patch cap2 = restrict(b, c, fe(3), RestrictMode::cap);
    for (const auto& t : cap.tiles()) CHECK(cap2.contains_tile(t));
}

TEST_CASE("canonicalize") {
    auto ps = squares();
    Patch p = Patch::build(ps, {{0, v2(3, 4)}, {1, v2(4, 4)}, {0, v2(3, 5)}});
    CanonicalPatch c1 = canonicalize(p);
    CHECK(c1.patch.tiles().front().shift.is_zero());
    CHECK(c1.anchor_shift == v2(3, 4));

    // translation invariance, 200 random translations
    for (int i = 0; i < 200; ++i) {
        Vec v = v2(rq(), rq());
        CanonicalPatch c2 = canonicalize(p.translated(v));
        CHECK(c2 == c1);
    }
    // idempotence
    CanonicalPatch c3 = canonicalize(c1.patch);
    CHECK(c3 == c1);
    CHECK(c3.anchor_shift.is_zero());

    // labels distinguish
    Patch q = Patch::build(ps, {{1, v2(3, 4)}, {0, v2(4, 4)}, {1, v2(3, 5)}});
    CHECK(!(canonicalize(q) == c1));

    CHECK_THROWS_AS((void)canonicalize(Patch::build(ps, {})), EmptyPatch);
}

TEST_CASE("grid candidates cover exact neighbours") {
    auto ps = squares();
    Patch b = block(ps, 8);
    TileGrid g(b, 2.0);
    auto cand = g.near_ball(3.0, 3.0, 2.0);
    // every tile within distance 2 of (3,3) must be among candidates
    for (int i = 0; i < b.size(); ++i) {
        Vec d = b.tiles()[i].shift - v2(3, 3);
        if (compare(d.norm_sq(), fe(4)) <= 0)
            CHECK(std::find(cand.begin(), cand.end(), i) != cand.end());
    }
}
