#include "subtile/numberfield.hpp"

#include <sstream>

namespace subtile {

NumberField::NumberField(ZPoly mp, QQ lo, QQ hi)
    : min_poly_(std::move(mp)),
      min_poly_q_(to_qpoly(min_poly_)),
      root_lo_(std::move(lo)),
      root_hi_(std::move(hi)),
      degree_(::subtile::degree(min_poly_)),
      cache_(root_lo_, root_hi_) {}

std::shared_ptr<const NumberField> NumberField::make(ZPoly min_poly, QQ lo, QQ hi) {
    int d = ::subtile::degree(min_poly);
    if (d < 1) throw FieldError("min_poly must have degree >= 1");
    min_poly.resize(d + 1);
    if (min_poly[d] != 1) throw FieldError("min_poly must be monic");
    if (!irreducible_over_q(min_poly)) throw FieldError("min_poly is reducible over Q");
    if (!(lo < hi)) throw FieldError("root_interval is empty");
    QPoly q = to_qpoly(min_poly);
    if (d > 1) {
        if (::subtile::sign(eval(q, lo)) == 0 || ::subtile::sign(eval(q, hi)) == 0)
            throw FieldError("root_interval endpoint is a root");
        if (count_real_roots(q, lo, hi) != 1)
            throw FieldError("root_interval must isolate exactly one real root");
    } else {
        // degree 1: root is rational, -a0; interval must contain it
        QQ r = -q[0];
        if (!(lo <= r && r <= hi)) throw FieldError("root_interval does not contain the root");
    }
    return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly), std::move(lo), std::move(hi)));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    static std::shared_ptr<const NumberField> q =
        std::shared_ptr<const NumberField>(new NumberField(ZPoly{0, 1}, QQ(-1), QQ(1)));
    return q;
}

QInterval NumberField::root_interval(const QQ& target_width) const {
    if (degree_ == 1) return QInterval::point(QQ(-min_poly_q_[0]));
    std::lock_guard<std::mutex> g(mu_);
    if (cache_.width() > target_width)
        cache_ = refine_root(min_poly_q_, cache_, target_width);
    return cache_;
}

FieldElem::FieldElem(FieldPtr field, std::vector<QQ> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (!field_) throw FieldError("null field");
    if (static_cast<int>(c_.size()) != field_->degree())
        throw FieldError("coefficient vector length must equal field degree");
}

FieldElem FieldElem::from_rational(const FieldPtr& field, const QQ& value) {
    std::vector<QQ> c(field->degree(), QQ(0));
    c[0] = value;
    return FieldElem(field, std::move(c));
}

FieldElem FieldElem::generator(const FieldPtr& field) {
    if (field->degree() == 1)
        throw FieldError("the rational field has no irrational generator");
    std::vector<QQ> c(field->degree(), QQ(0));
    c[1] = 1;
    return FieldElem(field, std::move(c));
}

bool FieldElem::is_zero() const {
    for (const auto& x : c_)
        if (::subtile::sign(x) != 0) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (::subtile::sign(c_[i]) != 0) return false;
    return true;
}

QQ FieldElem::rational_value() const {
    if (!is_rational()) throw FieldError("element is not rational");
    return c_[0];
}

void FieldElem::check_same_field(const FieldElem& o) const {
    if (!field_ || !o.field_ || !field_->same_field(*o.field_))
        throw FieldError("mixed-field arithmetic");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(o);
    std::vector<QQ> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_field(o);
    std::vector<QQ> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-() const {
    std::vector<QQ> r(c_);
    for (auto& x : r) x = -x;
    return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator*(const QQ& k) const {
    std::vector<QQ> r(c_);
    for (auto& x : r) x *= k;
    return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator+(const QQ& k) const {
    std::vector<QQ> r(c_);
    r[0] += k;
    return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-(const QQ& k) const { return *this + QQ(-k); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(o);
    int d = field_->degree();
    if (d == 1) {
        return FieldElem(field_, {c_[0] * o.c_[0]});
    }
    std::vector<QQ> prod(2 * d - 1, QQ(0));
    for (int i = 0; i < d; ++i) {
        if (::subtile::sign(c_[i]) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (::subtile::sign(o.c_[j]) == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    // reduce modulo the (monic) minimal polynomial
    const ZPoly& mp = field_->min_poly();
    for (int k = 2 * d - 2; k >= d; --k) {
        if (::subtile::sign(prod[k]) == 0) continue;
        QQ f = prod[k];
        prod[k] = 0;
        for (int i = 0; i < d; ++i) prod[k - d + i] -= f * QQ(mp[i]);
    }
    prod.resize(d);
    return FieldElem(field_, std::move(prod));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    int d = field_->degree();
    if (d == 1) return FieldElem(field_, {QQ(1) / c_[0]});
    // extended euclid: find u with u * this == 1 (mod min_poly)
    QPoly a = to_qpoly(field_->min_poly());
    QPoly b(c_);
    normalize(b);
    QPoly u0 = {}, u1 = {QQ(1)};  // coefficients of b in the running identity
    while (degree(b) > 0) {
        QPoly q, r;
        divmod(a, b, q, r);
        QPoly u2 = sub(u0, mul(q, u1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        if (b.empty()) break;
    }
    // b is a nonzero constant: min_poly is irreducible and this != 0, so the
    // remainder chain cannot terminate at zero before reaching degree 0
    if (b.empty()) throw FieldError("inverse: degenerate gcd");
    QQ cst = b[0];
    if (::subtile::sign(cst) == 0) throw FieldError("inverse: degenerate gcd");
    std::vector<QQ> r(d, QQ(0));
    for (std::size_t i = 0; i < u1.size() && i < r.size(); ++i) r[i] = u1[i] / cst;
    return FieldElem(field_, std::move(r));
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (!field_->same_field(*o.field_)) return false;
    return c_ == o.c_;
}

QInterval FieldElem::embed(unsigned precision_bits) const {
    if (is_rational()) return QInterval::point(c_[0]);
    QQ target = pow2_neg(precision_bits);
    QPoly p(c_);
    normalize(p);
    QQ width = field_->initial_interval().width();
    while (true) {
        QInterval root = field_->root_interval(width);
        QInterval v = eval(p, root);
        if (v.width() <= target) return v;
        width /= 16;
    }
}

int FieldElem::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return ::subtile::sign(c_[0]);
    unsigned prec = 16;
    while (true) {
        QInterval v = embed(prec);
        int s = v.determined_sign();
        if (s != 0) return s;
        prec *= 2;
        // terminates: the element is exactly nonzero, so the interval
        // eventually excludes zero
    }
}

double FieldElem::approx() const { return to_double(embed(40).mid()); }

std::size_t FieldElem::hash() const {
    std::size_t h = 0x8082fa71;
    for (const auto& x : c_) h = hash_combine(h, hash_mpq(x));
    return h;
}

std::string FieldElem::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ';';
        os << to_string(c_[i]);
    }
    return os.str();
}

}  // namespace subtile
