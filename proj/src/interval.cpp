#include "subtile/interval.hpp"

#include <algorithm>

namespace subtile {

QInterval QInterval::operator*(const QInterval& o) const {
    QQ a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    QQ mn = std::min(std::min(a, b), std::min(c, d));
    QQ mx = std::max(std::max(a, b), std::max(c, d));
    return {mn, mx};
}

QInterval square(const QInterval& x) {
    if (sign(x.lo) >= 0) return {x.lo * x.lo, x.hi * x.hi};
    if (sign(x.hi) <= 0) return {x.hi * x.hi, x.lo * x.lo};
    QQ m = std::max(QQ(-x.lo), x.hi);
    return {QQ(0), m * m};
}

}  // namespace subtile
