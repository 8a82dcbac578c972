#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "subtile/subst.hpp"

using namespace subtile;

namespace {

RulePtr load(const std::string& name) {
    return rule_load(std::string(SUBTILE_CATALOG_DIR) + "/" + name);
}

RulePtr fixture(const std::string& name) {
    return rule_load(std::string(SUBTILE_FIXTURE_DIR) + "/" + name);
}

std::mt19937 rng(11);

Vec random_vec(const RulePtr& r) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
    std::vector<FieldElem> e;
    for (int i = 0; i < r->dim; ++i) {
        std::vector<QQ> c(r->field->degree(), QQ(0));
        for (int k = 0; k < r->field->degree(); ++k) c[k] = frac(num(rng), den(rng));
        e.push_back(FieldElem(r->field, std::move(c)));
    }
    return Vec(std::move(e));
}

}  // namespace

TEST_CASE("catalog rules parse and validate") {
    CHECK(load("square")->kind == Rule::Kind::substitution);
    CHECK(load("chair")->protos->count() == 4);
    CHECK(load("fibonacci")->dim == 1);
    CHECK(load("non_pisot_1d")->dim == 1);
    RulePtr rob = load("robinson_triangles");
    CHECK(rob->protos->count() == 40);
    CHECK(rob->field->degree() == 4);
    RulePtr ab = load("ammann_beenker");
    CHECK(ab->protos->count() == 12);
    RulePtr shear = fixture("non_flc_shear");
    CHECK(shear->kind == Rule::Kind::pseudo);
    CHECK(shear->support_slack_sq.sign() > 0);
    // true substitutions carry zero slack
    CHECK(load("chair")->support_slack_sq.is_zero());
}

TEST_CASE("malformed rules are rejected") {
    CHECK_THROWS_AS((void)fixture("overlapping_images"), OverlapError);
    CHECK_THROWS_AS((void)rule_parse("{\"kind\":\"substitution\"}"), SchemaError);
    CHECK_THROWS_AS((void)rule_parse("not json"), SchemaError);
    // dimension 3 rejected
    std::string d3 = R"({"kind":"substitution","dim":3,
        "field":{"min_poly":["0","1"],"root_interval":["-1","1"]},
        "prototiles":[],"phi":[],"images":{}})";
    CHECK_THROWS_AS((void)rule_parse(d3), DimensionError);
}

TEST_CASE("substitute basics") {
    RulePtr chair = load("chair");
    Patch one = Patch::trusted(chair->protos, {{0, Vec::zero(chair->field, 2)}});
    Patch img = substitute(one, *chair);
    CHECK(img.size() == 4);

    Patch empty = Patch::build(chair->protos, {});
    CHECK(substitute(empty, *chair).empty());

    // extension law omega(P + x) = omega(P) + phi(x)
    for (int i = 0; i < 25; ++i) {
        Vec v = random_vec(chair);
        Patch lhs = substitute(one.translated(v), *chair);
        Patch rhs = substitute(one, *chair).translated(chair->phi.apply(v));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("composition law on random small patches") {
    for (const char* name : {"chair", "fibonacci"}) {
        RulePtr r = load(name);
        Patch p = Patch::trusted(r->protos, {{0, Vec::zero(r->field, r->dim)}});
        p = substitute_times(p, *r, 2);
        Patch a = substitute_times(p, *r, 3);
        Patch b = substitute_times(substitute_times(p, *r, 1), *r, 2);
        CHECK(a == b);
    }
}

TEST_CASE("support bound with certified operator norm") {
    // supp omega^n(P) inside phi^n(P) + B(0, sum phi_norm^k * L)
    RulePtr shear = fixture("non_flc_shear");
    QQ phi_norm_sq = shear->phi.op_norm_sq_upper();
    CHECK(phi_norm_sq >= 9);  // phi = 3I
    // level-2 support bound: every vertex within distance bound of phi^2(P)
    Patch p = Patch::trusted(shear->protos, {{0, Vec::zero(shear->field, 2)}});
    Patch q = substitute_times(p, *shear, 2);
    // L^2 slack from validation
    FieldElem Lsq = shear->support_slack_sq;
    // bound = (1 + ||phi||) * L, squared via rational upper bounds
    QQ L_up = Lsq.embed(20).hi;
    QQ bound_sq = (QQ(1) + phi_norm_sq) * (QQ(1) + phi_norm_sq) * L_up;  // generous
    Polygon target = Polygon::make({// phi^2(P) for P = centered square, phi=3I
                                    Vec({FieldElem::from_rational(shear->field, frac(-9, 2)),
                                         FieldElem::from_rational(shear->field, frac(-9, 2))}),
                                    Vec({FieldElem::from_rational(shear->field, frac(9, 2)),
                                         FieldElem::from_rational(shear->field, frac(-9, 2))}),
                                    Vec({FieldElem::from_rational(shear->field, frac(9, 2)),
                                         FieldElem::from_rational(shear->field, frac(9, 2))}),
                                    Vec({FieldElem::from_rational(shear->field, frac(-9, 2)),
                                         FieldElem::from_rational(shear->field, frac(9, 2))})});
    Vec zero = Vec::zero(shear->field, 2);
    for (const auto& t : q.tiles()) {
        for (const auto& v : shear->protos->poly(t.proto).vertices()) {
            Vec w = v + t.shift;
            FieldElem d = dist_sq_point_polygon(target, zero, w);
            CHECK(compare(d, FieldElem::from_rational(shear->field, bound_sq)) <= 0);
        }
    }
}

TEST_CASE("primitivity") {
    CHECK(primitivity_check(*load("square")).primitive);
    CHECK(primitivity_check(*load("square")).exponent == 1);
    Primitivity pc = primitivity_check(*load("chair"));
    CHECK(pc.primitive);
    CHECK(pc.exponent == 2);  // each image holds rotations k, k+1, k+3 only
    Primitivity pf = primitivity_check(*load("fibonacci"));
    CHECK(pf.primitive);
    CHECK(pf.exponent == 2);
    CHECK(primitivity_check(*load("robinson_triangles")).primitive);
    CHECK(primitivity_check(*load("ammann_beenker")).primitive);

    // two independent tiles: not primitive
    std::string indep = R"({"kind":"substitution","dim":1,
      "field":{"min_poly":["0","1"],"root_interval":["-1","1"]},
      "prototiles":[{"name":"a","vertices":[[["-1/2"]],[["1/2"]]]},
                    {"name":"b","vertices":[[["-1/2"]],[["1/2"]]]}],
      "phi":[[["2"]]],
      "images":{"a":[{"proto":"a","shift":[["-1/2"]]},{"proto":"a","shift":[["1/2"]]}],
                "b":[{"proto":"b","shift":[["-1/2"]]},{"proto":"b","shift":[["1/2"]]}]}})";
    CHECK(!primitivity_check(*rule_parse(indep)).primitive);
}

TEST_CASE("find_seed") {
    RulePtr sq = load("square");
    Seed s = find_seed(*sq, 3);
    // corner seeds are rejected; the first interior seed solves at n = 2
    CHECK(s.n == 2);
    CHECK(s.proto == 0);
    CHECK(s.x[0].rational_value() == frac(1, 6));
    CHECK(s.x[1].rational_value() == frac(1, 6));

    RulePtr chair = load("chair");
    Seed c = find_seed(*chair, 3);
    CHECK(c.n == 2);
    CHECK(c.proto == 0);
    CHECK(c.x[0].rational_value() == frac(1, 6));

    RulePtr fib = load("fibonacci");
    Seed fs = find_seed(*fib, 4);
    CHECK(fs.n == 3);
    // fixed point: P + x in omega^n(P + x), re-verified here
    Patch tile = Patch::trusted(fib->protos, {{fs.proto, fs.x}});
    Patch img = substitute_times(tile, *fib, fs.n);
    CHECK(img.contains_tile({fs.proto, fs.x}));

    CHECK_THROWS_AS((void)find_seed(*fib, 1), NoSeedFound);
}

TEST_CASE("grow and nesting") {
    RulePtr sq = load("square");
    Seed s = find_seed(*sq, 3);
    Approximant ap = grow(sq, s, 3);
    CHECK(ap.level(0).size() == 1);
    CHECK(ap.level(1).size() == 16);      // n=2 per level: 4^2
    CHECK(ap.level(2).size() == 256);
    CHECK(ap.level(3).size() == 4096);
    CHECK(ap.depth(3) == 6);
    // nesting
    for (unsigned m = 0; m < 3; ++m)
        for (const auto& t : ap.level(m).tiles()) CHECK(ap.level(m + 1).contains_tile(t));
    // coverage grows
    CHECK(compare(ap.coverage_radius_sq(1), ap.coverage_radius_sq(2)) < 0);

    RulePtr chair = load("chair");
    Approximant ca = grow(chair, find_seed(*chair, 3), 2);
    CHECK(ca.level(1).size() == 16);
    CHECK(ca.level(2).size() == 256);
}

TEST_CASE("expanding_check") {
    RulePtr sq = load("square");
    Approximant ap = grow(sq, find_seed(*sq, 3), 4);
    ExpandingReport rep = expanding_check(ap, 4);
    REQUIRE(rep.r_sq.size() == 4);
    CHECK(rep.strictly_increasing);
    for (const auto& r : rep.r_sq) CHECK(r.sign() > 0);

    RulePtr chair = load("chair");
    Approximant ca = grow(chair, find_seed(*chair, 3), 3);
    ExpandingReport crep = expanding_check(ca, 3);
    CHECK(crep.strictly_increasing);
}

TEST_CASE("pseudo rule grows without overlap (iteratable)") {
    RulePtr shear = fixture("non_flc_shear");
    Patch p = Patch::trusted(shear->protos, {{0, Vec::zero(shear->field, 2)}});
    Patch q = substitute_times(p, *shear, 3);
    CHECK(q.size() == 729);
}

TEST_CASE("flc probe: square stabilizes, shear grows") {
    RulePtr sq = load("square");
    FlcProbe ps = rule_flc_probe(*sq, {QQ(4)}, 4);
    REQUIRE(ps.radii.size() == 1);
    CHECK(ps.radii[0].stabilized_at >= 1);

    RulePtr shear = fixture("non_flc_shear");
    FlcProbe pf = rule_flc_probe(*shear, {QQ(4)}, 4);
    CHECK(pf.radii[0].stabilized_at == -1);
    auto& counts = pf.radii[0].cumulative_counts;
    for (std::size_t i = 0; i + 1 < counts.size(); ++i) CHECK(counts[i] < counts[i + 1]);
}

TEST_CASE("robinson and ammann-beenker iterate cleanly") {
    RulePtr rob = load("robinson_triangles");
    Patch p = Patch::trusted(rob->protos, {{0, Vec::zero(rob->field, 2)}});
    Patch q = substitute_times(p, *rob, 3);
    CHECK(q.size() > 10);

    RulePtr ab = load("ammann_beenker");
    Patch a = Patch::trusted(ab->protos, {{0, Vec::zero(ab->field, 2)}});
    Patch b = substitute_times(a, *ab, 2);
    // rhombus image: 3 rhombi + 4 triangles; counts follow the incidence matrix
    CHECK(substitute(a, *ab).size() == 7);
    CHECK(b.size() > 7);
}

TEST_CASE("rule source hash is stable") {
    std::ifstream in(resolve_rule_path(std::string(SUBTILE_CATALOG_DIR) + "/chair"));
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(load("chair")->source_hash == fnv1a_hex(ss.str()));
    CHECK(!load("chair")->source_hash.empty());
}
