#include "subtile/vec.hpp"

#include <algorithm>
#include <sstream>

namespace subtile {

Vec Vec::zero(const FieldPtr& f, int dim) {
    std::vector<FieldElem> e(dim, FieldElem::zero(f));
    return Vec(std::move(e));
}

Vec Vec::operator+(const Vec& o) const {
    std::vector<FieldElem> r;
    r.reserve(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.push_back(e_[i] + o.e_[i]);
    return Vec(std::move(r));
}

Vec Vec::operator-(const Vec& o) const {
    std::vector<FieldElem> r;
    r.reserve(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.push_back(e_[i] - o.e_[i]);
    return Vec(std::move(r));
}

Vec Vec::operator-() const {
    std::vector<FieldElem> r;
    r.reserve(e_.size());
    for (const auto& x : e_) r.push_back(-x);
    return Vec(std::move(r));
}

Vec Vec::operator*(const QQ& k) const {
    std::vector<FieldElem> r;
    r.reserve(e_.size());
    for (const auto& x : e_) r.push_back(x * k);
    return Vec(std::move(r));
}

bool Vec::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

FieldElem Vec::dot(const Vec& o) const {
    FieldElem acc = e_[0] * o.e_[0];
    for (std::size_t i = 1; i < e_.size(); ++i) acc = acc + e_[i] * o.e_[i];
    return acc;
}

std::size_t Vec::hash() const {
    std::size_t h = 0x5ec7a11;
    for (const auto& x : e_) h = hash_combine(h, x.hash());
    return h;
}

std::string Vec::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) os << '|';
        os << e_[i].str();
    }
    return os.str();
}

int Vec::lex_compare(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.dim(); ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

Mat Mat::identity(const FieldPtr& f, int dim) {
    return scalar(f, dim, FieldElem::one(f));
}

Mat Mat::scalar(const FieldPtr& f, int dim, const FieldElem& s) {
    std::vector<FieldElem> m(dim * dim, FieldElem::zero(f));
    for (int i = 0; i < dim; ++i) m[i * dim + i] = s;
    return Mat(dim, std::move(m));
}

Vec Mat::apply(const Vec& v) const {
    std::vector<FieldElem> r;
    r.reserve(d_);
    for (int i = 0; i < d_; ++i) {
        FieldElem acc = at(i, 0) * v[0];
        for (int j = 1; j < d_; ++j) acc = acc + at(i, j) * v[j];
        r.push_back(acc);
    }
    return Vec(std::move(r));
}

Mat Mat::operator*(const Mat& o) const {
    std::vector<FieldElem> r;
    r.reserve(d_ * d_);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) {
            FieldElem acc = at(i, 0) * o.at(0, j);
            for (int k = 1; k < d_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.push_back(acc);
        }
    return Mat(d_, std::move(r));
}

Mat Mat::operator-(const Mat& o) const {
    std::vector<FieldElem> r;
    r.reserve(d_ * d_);
    for (int i = 0; i < d_ * d_; ++i) r.push_back(m_[i] - o.m_[i]);
    return Mat(d_, std::move(r));
}

Mat Mat::pow(unsigned n) const {
    Mat acc = identity(m_[0].field(), d_);
    Mat base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Mat Mat::transpose() const {
    std::vector<FieldElem> r;
    r.reserve(d_ * d_);
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) r.push_back(at(j, i));
    return Mat(d_, std::move(r));
}

FieldElem Mat::det() const {
    if (d_ == 1) return at(0, 0);
    return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
}

FieldElem Mat::trace() const {
    FieldElem acc = at(0, 0);
    for (int i = 1; i < d_; ++i) acc = acc + at(i, i);
    return acc;
}

Mat Mat::inverse() const {
    FieldElem dte = det();
    if (dte.is_zero()) throw DivisionByZero("singular matrix");
    FieldElem inv = dte.inverse();
    if (d_ == 1) return Mat(1, {inv});
    std::vector<FieldElem> r = {at(1, 1) * inv, (-at(0, 1)) * inv,
                                (-at(1, 0)) * inv, at(0, 0) * inv};
    return Mat(2, std::move(r));
}

QQ Mat::op_norm_sq_upper() const {
    auto abs_upper = [](const FieldElem& x) {
        QInterval v = x.embed(32);
        return std::max(abs_q(v.lo), abs_q(v.hi));
    };
    QQ norm1 = 0, normInf = 0;
    for (int j = 0; j < d_; ++j) {
        QQ col = 0;
        for (int i = 0; i < d_; ++i) col += abs_upper(at(i, j));
        norm1 = std::max(norm1, col);
    }
    for (int i = 0; i < d_; ++i) {
        QQ row = 0;
        for (int j = 0; j < d_; ++j) row += abs_upper(at(i, j));
        normInf = std::max(normInf, row);
    }
    return norm1 * normInf;
}

namespace {

// integer n with theta - n in [0,1), decided exactly
ZZ floor_of(const FieldElem& theta) {
    if (theta.is_rational()) return floor_q(theta.rational_value());
    unsigned prec = 16;
    while (true) {
        QInterval v = theta.embed(prec);
        ZZ flo = floor_q(v.lo), fhi = floor_q(v.hi);
        if (flo == fhi) return flo;
        // interval straddles an integer; equal exactly?
        FieldElem diff = theta - QQ(fhi);
        if (diff.is_zero()) return fhi;
        prec *= 2;
    }
}

}  // namespace

CirclePoint::CirclePoint(FieldElem theta) {
    ZZ n = floor_of(theta);
    theta_ = theta - QQ(n);
}

FieldElem circle_dist_zero(const CirclePoint& p) {
    // theta in [0,1): distance to 0 is min(theta, 1-theta)
    const FieldElem& t = p.theta();
    FieldElem flipped = -t + QQ(1);
    int c = compare(t, flipped);
    return c <= 0 ? t : flipped;
}

FieldElem circle_dist(const CirclePoint& p, const CirclePoint& q) {
    return circle_dist_zero(p - q);
}

CirclePoint character(const Vec& a, const Vec& x) {
    if (a.dim() != x.dim()) throw DimensionError("character: dimension mismatch");
    return CirclePoint(a.dot(x));
}

}  // namespace subtile
