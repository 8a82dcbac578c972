#include "subtile/polynomial.hpp"

#include <algorithm>

namespace subtile {

QPoly to_qpoly(const ZPoly& p) {
    QPoly q;
    q.reserve(p.size());
    for (const auto& c : p) q.emplace_back(c);
    normalize(q);
    return q;
}

void normalize(QPoly& p) {
    while (!p.empty() && sign(p.back()) == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const ZPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && sign(p[d]) == 0) --d;
    return d;
}

QQ eval(const QPoly& p, const QQ& x) {
    QQ acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QInterval eval(const QPoly& p, const QInterval& x) {
    QInterval acc = QInterval::point(QQ(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * QQ(static_cast<long>(i)));
    normalize(d);
    return d;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), QQ(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    normalize(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), QQ(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    normalize(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, QQ(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    normalize(r);
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    rem = a;
    normalize(rem);
    quot.assign(a.size(), QQ(0));
    int db = degree(b);
    if (db < 0) throw DivisionByZero("polynomial division by zero");
    const QQ& lead = b[db];
    while (degree(rem) >= db) {
        int dr = degree(rem);
        QQ f = rem[dr] / lead;
        quot[dr - db] = f;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b[i];
        rem[dr] = 0;
        normalize(rem);
    }
    normalize(quot);
}

static QPoly make_monic(QPoly p) {
    normalize(p);
    if (p.empty()) return p;
    QQ l = p.back();
    for (auto& c : p) c /= l;
    return p;
}

QPoly gcd(QPoly a, QPoly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

QPoly squarefree_part(const QPoly& p) {
    QPoly g = gcd(p, derivative(p));
    if (degree(g) <= 0) return make_monic(p);
    QPoly q, r;
    divmod(p, g, q, r);
    return make_monic(q);
}

SturmChain::SturmChain(const QPoly& p) {
    QPoly p0 = p;
    normalize(p0);
    chain.push_back(p0);
    QPoly p1 = derivative(p0);
    if (!p1.empty()) chain.push_back(p1);
    while (chain.size() >= 2 && !chain.back().empty() && degree(chain.back()) > 0) {
        QPoly q, r;
        divmod(chain[chain.size() - 2], chain.back(), q, r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(r);
    }
}

int SturmChain::variations(const QQ& x) const {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign(eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::count_roots(const QQ& a, const QQ& b) const {
    return variations(a) - variations(b);
}

int count_real_roots(const QPoly& p, const QQ& lo, const QQ& hi) {
    SturmChain s(squarefree_part(p));
    return s.count_roots(lo, hi);
}

QQ root_bound(const QPoly& p) {
    int d = degree(p);
    if (d <= 0) return QQ(1);
    QQ m = 0;
    for (int i = 0; i < d; ++i) m = std::max(m, abs_q(p[i] / p[d]));
    return m + 1;
}

int count_real_roots_total(const QPoly& p) {
    QQ b = root_bound(p);
    return count_real_roots(p, -b, b);
}

std::vector<QInterval> isolate_real_roots(const QPoly& p) {
    QPoly sf = squarefree_part(p);
    std::vector<QInterval> out;
    if (degree(sf) <= 0) return out;
    SturmChain chain(sf);
    QQ b = root_bound(sf);
    // endpoints of the initial box are not roots (strictly beyond the bound)
    struct Item {
        QQ lo, hi;
        int n;
    };
    std::vector<Item> work{{-b, b, chain.count_roots(-b, b)}};
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.n == 0) continue;
        if (it.n == 1) {
            out.push_back({it.lo, it.hi});
            continue;
        }
        QQ mid = (it.lo + it.hi) / 2;
        // nudge off a root if we hit one exactly
        while (sign(eval(sf, mid)) == 0) mid += (it.hi - it.lo) / 64;
        int left = chain.count_roots(it.lo, mid);
        work.push_back({it.lo, mid, left});
        work.push_back({mid, it.hi, it.n - left});
    }
    std::sort(out.begin(), out.end(),
              [](const QInterval& a, const QInterval& b2) { return a.lo < b2.lo; });
    return out;
}

QInterval refine_root(const QPoly& p, QInterval iv, const QQ& target_width) {
    QPoly sf = squarefree_part(p);
    int slo = sign(eval(sf, iv.lo));
    int shi = sign(eval(sf, iv.hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw FieldError("refine_root: not a sign-isolating interval");
    while (iv.width() > target_width) {
        QQ mid = iv.mid();
        int sm = sign(eval(sf, mid));
        if (sm == 0) {
            // exact rational root: collapse
            return QInterval::point(mid);
        }
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

namespace {

// all monic integer polynomials of degree k whose constant term divides a0
// and whose coefficients fit Mignotte-style bounds, tested as divisors
bool has_monic_factor_of_degree(const ZPoly& p, int k) {
    int d = degree(p);
    QPoly pq = to_qpoly(p);
    // coefficient bound: binomial(k,i) * (||p||_1 + 1)
    ZZ norm1 = 0;
    for (const auto& c : p) norm1 += abs(c);
    std::vector<ZZ> bound(k);
    for (int i = 0; i < k; ++i) {
        ZZ binom;
        mpz_bin_uiui(binom.get_mpz_t(), k, i);
        bound[i] = binom * (norm1 + 1);
    }
    // divisors of the constant term (with sign)
    std::vector<ZZ> divs;
    ZZ a0 = abs(p[0]);
    for (ZZ t = 1; t * t <= a0; ++t) {
        if (a0 % t == 0) {
            divs.push_back(t);
            divs.push_back(-t);
            ZZ u = a0 / t;
            if (u != t) {
                divs.push_back(u);
                divs.push_back(-u);
            }
        }
    }
    std::vector<ZZ> coef(k);  // g = x^k + coef[k-1] x^{k-1} + ... + coef[0]
    std::vector<ZZ> mid(k - 1 > 0 ? k - 1 : 0);
    // iterate over constant term choices, then inner coefficients
    for (const ZZ& c0 : divs) {
        if (abs(c0) > bound[0]) continue;
        std::vector<ZZ> idx(k - 1, 0);
        bool carry = false;
        // odometer over coef[1..k-1] in [-bound, bound]
        std::vector<ZZ> cur(k - 1);
        for (int i = 0; i < k - 1; ++i) cur[i] = -bound[i + 1];
        while (!carry) {
            QPoly g(k + 1, QQ(0));
            g[0] = QQ(c0);
            for (int i = 1; i < k; ++i) g[i] = QQ(cur[i - 1]);
            g[k] = 1;
            QPoly quot, rem;
            divmod(pq, g, quot, rem);
            if (rem.empty()) return true;
            // increment odometer
            int pos = 0;
            while (pos < k - 1) {
                cur[pos] += 1;
                if (cur[pos] <= bound[pos + 1]) break;
                cur[pos] = -bound[pos + 1];
                ++pos;
            }
            if (pos == k - 1) carry = true;
            if (k == 1) carry = true;
        }
    }
    (void)mid;
    (void)coef;
    return false;
}

}  // namespace

bool irreducible_over_q(const ZPoly& p) {
    int d = degree(p);
    if (d <= 0) return false;
    if (p[d] != 1) throw FieldError("min_poly must be monic");
    if (d == 1) return true;
    if (sign(p[0]) == 0) return false;  // x divides
    if (d > 7) throw FieldError("field degree > 7 unsupported");
    for (int k = 1; k <= d / 2; ++k) {
        if (has_monic_factor_of_degree(p, k)) return false;
    }
    return true;
}

}  // namespace subtile
