#pragma once

#include <vector>

#include "subtile/numberfield.hpp"

namespace subtile {

// Point/vector of R^d with exact field coordinates, d in {1, 2}.
class Vec {
  public:
    Vec() = default;
    explicit Vec(std::vector<FieldElem> e) : e_(std::move(e)) {}
    static Vec zero(const FieldPtr& f, int dim);

    int dim() const { return static_cast<int>(e_.size()); }
    const FieldElem& operator[](int i) const { return e_[i]; }
    FieldElem& operator[](int i) { return e_[i]; }
    const FieldPtr& field() const { return e_.at(0).field(); }

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    Vec operator*(const QQ& k) const;

    bool operator==(const Vec& o) const { return e_ == o.e_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }
    bool is_zero() const;

    FieldElem dot(const Vec& o) const;
    FieldElem norm_sq() const { return dot(*this); }

    std::size_t hash() const;
    std::string str() const;  // "x|y" with coefficient lists
    double approx(int i) const { return e_[i].approx(); }

    // exact lexicographic comparison under the real embedding
    static int lex_compare(const Vec& a, const Vec& b);

  private:
    std::vector<FieldElem> e_;
};

// Square matrix (d x d) over the field, row-major.
class Mat {
  public:
    Mat() = default;
    Mat(int dim, std::vector<FieldElem> entries) : d_(dim), m_(std::move(entries)) {}
    static Mat identity(const FieldPtr& f, int dim);
    static Mat scalar(const FieldPtr& f, int dim, const FieldElem& s);

    int dim() const { return d_; }
    const FieldElem& at(int r, int c) const { return m_[r * d_ + c]; }

    Vec apply(const Vec& v) const;
    Mat operator*(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat pow(unsigned n) const;
    Mat transpose() const;
    FieldElem det() const;
    FieldElem trace() const;
    Mat inverse() const;  // DivisionByZero when singular

    // certified upper bound for the operator 2-norm: sqrt(norm1 * normInf)
    // returned squared to stay in the field of rationals
    QQ op_norm_sq_upper() const;

  private:
    int d_ = 0;
    std::vector<FieldElem> m_;
};

// character value <a,x> viewed on the circle R/Z
class CirclePoint {
  public:
    CirclePoint() = default;
    explicit CirclePoint(FieldElem theta);

    const FieldElem& theta() const { return theta_; }  // representative in [0,1)
    bool is_zero() const { return theta_.is_zero(); }

    CirclePoint operator+(const CirclePoint& o) const { return CirclePoint(theta_ + o.theta_); }
    CirclePoint operator-(const CirclePoint& o) const { return CirclePoint(theta_ - o.theta_); }
    bool operator==(const CirclePoint& o) const { return theta_ == o.theta_; }

  private:
    FieldElem theta_;
};

// rho_T: min over integers n of |theta_p - theta_q + n|, exact, <= 1/2
FieldElem circle_dist(const CirclePoint& p, const CirclePoint& q);
FieldElem circle_dist_zero(const CirclePoint& p);

CirclePoint character(const Vec& a, const Vec& x);

}  // namespace subtile
