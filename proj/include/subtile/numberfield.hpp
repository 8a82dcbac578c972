#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "subtile/polynomial.hpp"

namespace subtile {

// A designated real algebraic number field Q(theta): monic irreducible
// integer minimal polynomial plus a rational interval isolating one real
// root. The degree-1 field (min_poly = x, root 0) is plain Q.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    static std::shared_ptr<const NumberField> make(ZPoly min_poly, QQ root_lo, QQ root_hi);
    static std::shared_ptr<const NumberField> rationals();

    const ZPoly& min_poly() const { return min_poly_; }
    int degree() const { return degree_; }
    QInterval initial_interval() const { return {root_lo_, root_hi_}; }

    // Certified interval for the designated root with width <= target.
    QInterval root_interval(const QQ& target_width) const;

    bool same_field(const NumberField& o) const { return this == &o; }

  private:
    NumberField(ZPoly mp, QQ lo, QQ hi);
    ZPoly min_poly_;
    QPoly min_poly_q_;
    QQ root_lo_, root_hi_;
    int degree_;
    mutable std::mutex mu_;
    mutable QInterval cache_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of the field in the power basis of the root. Immutable value type.
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(FieldPtr field, std::vector<QQ> coeffs);
    static FieldElem from_rational(const FieldPtr& field, const QQ& value);
    static FieldElem zero(const FieldPtr& field) { return from_rational(field, QQ(0)); }
    static FieldElem one(const FieldPtr& field) { return from_rational(field, QQ(1)); }
    static FieldElem generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<QQ>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    QQ rational_value() const;  // requires is_rational()

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator*(const QQ& c) const;
    FieldElem operator+(const QQ& c) const;
    FieldElem operator-(const QQ& c) const;
    FieldElem inverse() const;  // DivisionByZero on zero
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // Certified interval of the real embedding, width <= 2^-precision_bits.
    // Exact zero and rationals yield point intervals.
    QInterval embed(unsigned precision_bits) const;

    // Exact sign: -1, 0, +1.
    int sign() const;

    double approx() const;

    std::size_t hash() const;
    std::string str() const;  // coefficient list "c0;c1;..."

  private:
    void check_same_field(const FieldElem& o) const;
    FieldPtr field_;
    std::vector<QQ> c_;
};

// exact comparison under the real embedding
inline int compare(const FieldElem& a, const FieldElem& b) {
    if (a.is_rational() && b.is_rational()) {
        return mpq_cmp(a.coeffs()[0].get_mpq_t(), b.coeffs()[0].get_mpq_t());
    }
    if (a == b) return 0;
    return (a - b).sign();
}

}  // namespace subtile
