#pragma once

#include <vector>

#include "subtile/interval.hpp"
#include "subtile/rational.hpp"

namespace subtile {

// Univariate polynomials, coefficient order: constant term first.
// Degrees stay tiny (minimal polynomials and their derived chains), so the
// implementations favour clarity over asymptotics.
using QPoly = std::vector<QQ>;
using ZPoly = std::vector<ZZ>;

QPoly to_qpoly(const ZPoly& p);
void normalize(QPoly& p);  // drop trailing zeros
int degree(const QPoly& p);
int degree(const ZPoly& p);

QQ eval(const QPoly& p, const QQ& x);
QInterval eval(const QPoly& p, const QInterval& x);
QPoly derivative(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
// euclidean division, requires b != 0
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
QPoly gcd(QPoly a, QPoly b);   // monic gcd
QPoly squarefree_part(const QPoly& p);

// Sturm machinery. The chain is built once per polynomial.
struct SturmChain {
    std::vector<QPoly> chain;
    explicit SturmChain(const QPoly& squarefree);
    int variations(const QQ& x) const;
    // number of roots in (a, b]
    int count_roots(const QQ& a, const QQ& b) const;
};

int count_real_roots(const QPoly& p, const QQ& lo, const QQ& hi);
int count_real_roots_total(const QPoly& p);

// Cauchy-style bound: all real roots lie in (-B, B)
QQ root_bound(const QPoly& p);

// Isolating intervals for distinct real roots of p, strictly ordered, with
// endpoints that are not roots.
std::vector<QInterval> isolate_real_roots(const QPoly& p);

// Shrinks an isolating interval (p has exactly one root there, endpoints not
// roots) until its width is <= target.
QInterval refine_root(const QPoly& p, QInterval iv, const QQ& target_width);

// Irreducibility over Q for monic integer polynomials of degree <= 7
// (rational-root test plus bounded trial factorization). Throws FieldError
// above degree 7.
bool irreducible_over_q(const ZPoly& p);

}  // namespace subtile
