#pragma once

#include "subtile/rational.hpp"

namespace subtile {

// Closed rational interval. All certified numerics flow through this.
struct QInterval {
    QQ lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(QQ a, QQ b) : lo(std::move(a)), hi(std::move(b)) {}
    static QInterval point(const QQ& v) { return {v, v}; }

    QQ width() const { return hi - lo; }
    QQ mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool is_point() const { return lo == hi; }

    // sign if determined, 0 if the interval straddles zero
    int determined_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        return 0;
    }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator-() const { return {-hi, -lo}; }
    QInterval operator*(const QInterval& o) const;
    QInterval operator+(const QQ& c) const { return {lo + c, hi + c}; }
    QInterval operator*(const QQ& c) const {
        return sign(c) >= 0 ? QInterval{lo * c, hi * c} : QInterval{hi * c, lo * c};
    }
};

QInterval square(const QInterval& x);

}  // namespace subtile
