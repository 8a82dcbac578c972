#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subtile/numberfield.hpp"
#include "subtile/polynomial.hpp"
#include "subtile/vec.hpp"

using namespace subtile;

namespace {

FieldPtr golden() { return NumberField::make({-1, -1, 1}, QQ(1), QQ(2)); }

FieldElem tau(const FieldPtr& f) { return FieldElem::generator(f); }

// independent bisection oracle on x^2 - x - 1 over (1,2), pure rationals
QInterval bisect_tau(int steps) {
    QQ lo = 1, hi = 2;
    auto f = [](const QQ& x) -> QQ { return x * x - x - 1; };
    for (int i = 0; i < steps; ++i) {
        QQ mid = (lo + hi) / 2;
        if (sign(f(mid)) == sign(f(lo)))
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

std::mt19937 rng(20240817);

QQ random_rational() {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    return frac(num(rng), den(rng));
}

FieldElem random_elem(const FieldPtr& f) {
    std::vector<QQ> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(random_rational());
    return FieldElem(f, std::move(c));
}

}  // namespace

TEST_CASE("defining relations in Q(sqrt5)/Q(tau)") {
    auto f5 = NumberField::make({-5, 0, 1}, QQ(2), QQ(3));
    FieldElem r5 = FieldElem::generator(f5);
    CHECK(r5 * r5 == FieldElem::from_rational(f5, QQ(5)));

    auto f = golden();
    FieldElem t = tau(f);
    CHECK(t * t == t + QQ(1));
    CHECK(t.inverse() == t - QQ(1));  // 1/tau = tau - 1
    CHECK((t.inverse() * t) == FieldElem::one(f));
}

TEST_CASE("embed certification") {
    auto f = golden();
    FieldElem t = tau(f);
    QInterval iv = t.embed(20);
    CHECK(iv.width() <= pow2_neg(20));
    // oracle bracket computed independently
    QInterval oracle = bisect_tau(40);
    CHECK(iv.lo >= frac(16180, 10000));
    CHECK(iv.hi <= frac(16181, 10000));
    CHECK(iv.lo <= oracle.hi);
    CHECK(iv.hi >= oracle.lo);

    CHECK(FieldElem::zero(f).embed(5).is_point());
    QInterval r = FieldElem::from_rational(f, frac(3, 2)).embed(4);
    CHECK(r.is_point());
    CHECK(r.lo == frac(3, 2));
}

TEST_CASE("embed monotone in precision") {
    auto f = golden();
    FieldElem x = tau(f) * frac(7, 3) - QQ(2);
    QInterval a = x.embed(10);
    QInterval b = x.embed(30);
    CHECK(b.lo >= a.lo);
    CHECK(b.hi <= a.hi);
}

TEST_CASE("sign") {
    auto f = golden();
    FieldElem t = tau(f);
    CHECK((t - QQ(1)).sign() == 1);
    CHECK(FieldElem::zero(f).sign() == 0);
    CHECK((-t + QQ(1)).sign() == -1);
    // sign agrees with embed midpoint
    for (int i = 0; i < 50; ++i) {
        FieldElem x = random_elem(f);
        if (x.is_zero()) continue;
        CHECK(x.sign() == sign(x.embed(64).mid()));
    }
}

TEST_CASE("ring laws on random elements") {
    auto f = NumberField::make({5, 0, -5, 1}, frac(1, 2), frac(3, 2));  // x^3-5x^2+5
    for (int i = 0; i < 60; ++i) {
        FieldElem a = random_elem(f), b = random_elem(f), c = random_elem(f);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a + (b + c) == (a + b) + c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == FieldElem::one(f));
    }
}

TEST_CASE("irreducibility checks") {
    CHECK(irreducible_over_q({-1, -1, 1}));       // x^2-x-1
    CHECK(irreducible_over_q({5, 0, -5, 0, 1}));  // x^4-5x^2+5
    CHECK(irreducible_over_q({-3, -1, 1}));       // x^2-x-3
    CHECK(!irreducible_over_q({1, 2, 1}));        // (x+1)^2
    CHECK(!irreducible_over_q({-1, 0, 0, 0, 1})); // x^4-1
    CHECK(!irreducible_over_q({2, 3, 1}));        // (x+1)(x+2)
    CHECK_THROWS_AS((void)NumberField::make({1, 2, 1}, QQ(-2), QQ(0)), FieldError);
    CHECK_THROWS_AS((void)NumberField::make({-1, -1, 1}, QQ(-1), QQ(2)), FieldError);  // two roots? no: isolates? (-1,2) contains both roots? roots: 1.618, -0.618: yes both -> reject
}

TEST_CASE("circle metric") {
    auto f = golden();
    auto cp = [&](const QQ& q) { return CirclePoint(FieldElem::from_rational(f, q)); };
    CHECK(circle_dist(cp(QQ(0)), cp(frac(1, 2))).rational_value() == frac(1, 2));
    CHECK(circle_dist(cp(frac(9, 10)), cp(frac(1, 10))).rational_value() == frac(1, 5));
    CHECK(circle_dist(cp(frac(7, 3)), cp(frac(7, 3))).rational_value() == 0);
    // wrap-around reduction
    CHECK(cp(frac(7, 3)).theta().rational_value() == frac(1, 3));
    CHECK(cp(frac(-1, 4)).theta().rational_value() == frac(3, 4));
    // irrational representative reduces as well: tau mod 1 = tau - 1
    CirclePoint ct{tau(f)};
    CHECK(ct.theta() == tau(f) - QQ(1));

    // metric axioms on a random sample
    std::vector<CirclePoint> pts;
    for (int i = 0; i < 12; ++i) pts.push_back(cp(random_rational()));
    for (const auto& a : pts)
        for (const auto& b : pts) {
            FieldElem dab = circle_dist(a, b);
            CHECK(dab.sign() >= 0);
            CHECK(compare(dab, FieldElem::from_rational(f, frac(1, 2))) <= 0);
            CHECK(dab == circle_dist(b, a));
            for (const auto& c : pts) {
                FieldElem lhs = circle_dist(a, c);
                FieldElem rhs = circle_dist(a, b) + circle_dist(b, c);
                CHECK(compare(lhs, rhs) <= 0);
            }
        }
}

TEST_CASE("character") {
    auto f = golden();
    auto v = [&](const QQ& x, const QQ& y) {
        return Vec({FieldElem::from_rational(f, x), FieldElem::from_rational(f, y)});
    };
    CHECK(character(v(frac(1, 2), 0), v(1, 0)).theta().rational_value() == frac(1, 2));
    CHECK(character(v(frac(1, 2), 0), v(0, 0)).is_zero());
    CHECK(character(v(frac(1, 2), 0), v(2, 5)).is_zero());
    // homomorphism: chi_a(x+y) = chi_a(x) + chi_a(y) on the circle
    for (int i = 0; i < 40; ++i) {
        Vec a = v(random_rational(), random_rational());
        Vec x = v(random_rational(), random_rational());
        Vec y = v(random_rational(), random_rational());
        CHECK(character(a, x + y) == character(a, x) + character(a, y));
    }
}

TEST_CASE("root isolation and refinement") {
    // x^2 - x - 3: roots (1 +- sqrt13)/2 ~ 2.3028, -1.3028
    QPoly p = to_qpoly({-3, -1, 1});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    QInterval neg = refine_root(p, roots[0], QQ(1, 1 << 20));
    QInterval pos = refine_root(p, roots[1], QQ(1, 1 << 20));
    CHECK(neg.hi < frac(-13028, 10000) + frac(1, 1000));
    CHECK(neg.lo > frac(-13029, 10000) - frac(1, 1000));
    CHECK(pos.lo > frac(23027, 10000) - frac(1, 1000));
    CHECK(pos.hi < frac(23029, 10000) + frac(1, 1000));

    CHECK(count_real_roots_total(to_qpoly({5, 0, -5, 0, 1})) == 4);
    CHECK(count_real_roots_total(to_qpoly({1, 0, 1})) == 0);  // x^2+1
}

TEST_CASE("matrix basics") {
    auto f = golden();
    Mat m = Mat::scalar(f, 2, tau(f));
    Vec x({FieldElem::from_rational(f, QQ(2)), tau(f)});
    Vec y = m.apply(x);
    CHECK(y[0] == tau(f) * QQ(2));
    CHECK(y[1] == tau(f) * tau(f));
    Mat inv = m.inverse();
    Vec z = inv.apply(y);
    CHECK(z == x);
    CHECK(m.det() == tau(f) * tau(f));
    CHECK(m.pow(3).at(0, 0) == tau(f) * tau(f) * tau(f));
}

TEST_CASE("decimal rendering round-half-even") {
    CHECK(decimal_string(frac(1, 2), 0) == "0");
    CHECK(decimal_string(frac(3, 2), 0) == "2");
    CHECK(decimal_string(frac(1, 3), 4) == "0.3333");
    CHECK(decimal_string(frac(-1, 8), 2) == "-0.12");
    CHECK(decimal_string(frac(25, 1000), 2) == "0.02");
    CHECK(decimal_string(frac(35, 1000), 2) == "0.04");
}
