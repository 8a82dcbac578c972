#include "subtile/spectrum.hpp"

#include <algorithm>

namespace subtile {

namespace {

// Gaussian elimination kernel search: returns the monic dependency of
// x^k on lower powers for the least such k.
QPoly min_poly_via_powers(const FieldElem& x) {
    int d = x.field()->degree();
    // rows: coefficient vectors of 1, x, x^2, ...
    std::vector<std::vector<QQ>> pows;
    FieldElem cur = FieldElem::one(x.field());
    for (int k = 0; k <= d; ++k) {
        pows.push_back(cur.coeffs());
        cur = cur * x;
    }
    for (int k = 1; k <= d; ++k) {
        // solve sum_{i<k} c_i pow_i = pow_k
        std::vector<std::vector<QQ>> m(d, std::vector<QQ>(k + 1, QQ(0)));
        for (int r = 0; r < d; ++r) {
            for (int i = 0; i < k; ++i) m[r][i] = pows[i][r];
            m[r][k] = pows[k][r];
        }
        // eliminate
        int rank = 0;
        std::vector<int> pivot_col;
        for (int col = 0; col < k && rank < d; ++col) {
            int pr = -1;
            for (int r = rank; r < d; ++r)
                if (sign(m[r][col]) != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(m[rank], m[pr]);
            QQ inv = 1 / m[rank][col];
            for (int c = col; c <= k; ++c) m[rank][c] *= inv;
            for (int r = 0; r < d; ++r) {
                if (r == rank || sign(m[r][col]) == 0) continue;
                QQ f = m[r][col];
                for (int c = col; c <= k; ++c) m[r][c] -= f * m[rank][c];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        // consistent iff no row with zero lhs and nonzero rhs
        bool consistent = true;
        for (int r = rank; r < d; ++r)
            if (sign(m[r][k]) != 0) consistent = false;
        if (!consistent) continue;
        QPoly mp(k + 1, QQ(0));
        mp[k] = 1;
        for (int i = 0; i < rank; ++i) mp[pivot_col[i]] = -m[i][k];
        return mp;
    }
    throw FieldError("min_poly_over_q: no dependency found");
}

bool integral(const QPoly& p, ZPoly& out) {
    out.clear();
    for (const auto& c : p) {
        if (c.get_den() != 1) return false;
        out.push_back(c.get_num());
    }
    return true;
}

bool poly_eq(const ZPoly& a, const ZPoly& b) {
    if (degree(a) != degree(b)) return false;
    for (int i = 0; i <= degree(a); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// m reciprocal up to sign: x^n m(1/x) == +- m(x)
bool reciprocal_up_to_sign(const ZPoly& m) {
    int n = degree(m);
    bool plus = true, minus = true;
    for (int i = 0; i <= n; ++i) {
        if (m[i] != m[n - i]) plus = false;
        if (m[i] != -m[n - i]) minus = false;
    }
    return plus || minus;
}

struct RootAnalysis {
    std::vector<ConjugateInfo> outside;
    bool all_decided = true;
    bool all_small = true;  // every outside conjugate has modulus < 1
};

// spectrum_values: exact field eigenvalues sharing this min poly
RootAnalysis analyze_min_poly(const ZPoly& mp, const std::vector<FieldElem>& spectrum_values,
                              unsigned precision_bits) {
    RootAnalysis ra;
    QPoly q = to_qpoly(mp);
    int deg = degree(q);
    QQ target = pow2_neg(precision_bits);
    auto roots = isolate_real_roots(q);
    int pairs = (deg - static_cast<int>(roots.size())) / 2;

    // match real roots to spectrum values
    std::vector<bool> in_spec(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        roots[i] = refine_root(q, roots[i], target);
        for (const auto& ev : spectrum_values) {
            // exact: ev inside the isolating interval
            int cl = compare(ev, FieldElem::from_rational(ev.field(), roots[i].lo));
            int ch = compare(ev, FieldElem::from_rational(ev.field(), roots[i].hi));
            if (cl >= 0 && ch <= 0) in_spec[i] = true;
        }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (in_spec[i]) continue;
        ConjugateInfo ci;
        ci.min_poly = mp;
        ci.kind = "real";
        QInterval iv = roots[i];
        // refine until |root| vs 1 is decided (terminates: +-1 cannot be a
        // root of an irreducible polynomial of degree >= 2)
        while (true) {
            QQ alo = std::min(abs_q(iv.lo), abs_q(iv.hi));
            QQ ahi = std::max(abs_q(iv.lo), abs_q(iv.hi));
            if (iv.contains_zero()) alo = 0;
            if (ahi < 1) {
                ci.vs_one = -1;
                ci.mod_lo = alo;
                ci.mod_hi = ahi;
                break;
            }
            if (alo > 1) {
                ci.vs_one = +1;
                ci.mod_lo = alo;
                ci.mod_hi = ahi;
                break;
            }
            if (iv.is_point()) {  // exact rational root with |.| == 1
                ci.vs_one = 0;
                ci.mod_lo = ci.mod_hi = 1;
                break;
            }
            iv = refine_root(q, iv, iv.width() / 16);
        }
        ci.mod_sq_lo = ci.mod_lo * ci.mod_lo;
        ci.mod_sq_hi = ci.mod_hi * ci.mod_hi;
        if (ci.vs_one >= 0) ra.all_small = false;
        ra.outside.push_back(std::move(ci));
    }

    if (pairs == 1) {
        // |alpha|^2 = |a0| / prod |real roots|, certified by intervals
        ConjugateInfo ci;
        ci.min_poly = mp;
        ci.kind = "complex-pair";
        QQ c0 = abs_q(q[0] / q[deg]);
        std::vector<QInterval> rs = roots;
        while (true) {
            QInterval prod = QInterval::point(QQ(1));
            bool zero_risk = false;
            for (auto& r : rs) {
                QQ alo = std::min(abs_q(r.lo), abs_q(r.hi));
                QQ ahi = std::max(abs_q(r.lo), abs_q(r.hi));
                if (r.contains_zero()) zero_risk = true;
                prod = prod * QInterval{alo, ahi};
            }
            if (!zero_risk && sign(prod.lo) > 0) {
                QInterval msq{c0 / prod.hi, c0 / prod.lo};
                if (msq.hi < 1) {
                    ci.vs_one = -1;
                    ci.mod_sq_lo = msq.lo;
                    ci.mod_sq_hi = msq.hi;
                    break;
                }
                if (msq.lo > 1) {
                    ci.vs_one = +1;
                    ci.mod_sq_lo = msq.lo;
                    ci.mod_sq_hi = msq.hi;
                    break;
                }
                if (reciprocal_up_to_sign(mp)) {
                    // irreducible reciprocal with one complex pair: the pair
                    // sits exactly on the unit circle
                    ci.vs_one = 0;
                    ci.mod_sq_lo = ci.mod_sq_hi = 1;
                    break;
                }
            }
            for (auto& r : rs)
                if (!r.is_point()) r = refine_root(q, r, r.width() / 16);
        }
        ci.mod_lo = 0;  // modulus itself left unsquared for complex pairs
        ci.mod_hi = 0;
        if (ci.vs_one >= 0) ra.all_small = false;
        ra.outside.push_back(std::move(ci));
    } else if (pairs > 1) {
        ra.all_decided = false;
    }
    return ra;
}

}  // namespace

QPoly min_poly_over_q(const FieldElem& x) { return min_poly_via_powers(x); }

SpectrumReport spectrum_analyze(const Mat& phi, unsigned precision_bits) {
    SpectrumReport rep;
    rep.dim = phi.dim();
    const FieldPtr& F = phi.at(0, 0).field();
    int d = phi.dim();

    // exact in-field eigenvalues with multiplicities
    std::vector<std::pair<FieldElem, int>> eigs;
    bool eigs_known = false;

    if (d == 1) {
        eigs = {{phi.at(0, 0), 1}};
        eigs_known = true;
        rep.squarefree = true;
        rep.diagonalizable = true;
        rep.diagonalizable_known = true;
    } else {
        const FieldElem& b = phi.at(0, 1);
        const FieldElem& c = phi.at(1, 0);
        FieldElem tr = phi.trace();
        FieldElem det = phi.det();
        FieldElem disc = tr * tr - det * QQ(4);
        rep.squarefree = !disc.is_zero();
        if (b.is_zero() || c.is_zero()) {
            FieldElem l1 = phi.at(0, 0), l2 = phi.at(1, 1);
            if (l1 == l2) {
                eigs = {{l1, 2}};
                bool scalar = b.is_zero() && c.is_zero();
                rep.diagonalizable = scalar;
                rep.diagonalizable_known = true;
            } else {
                eigs = {{l1, 1}, {l2, 1}};
                rep.diagonalizable = true;
                rep.diagonalizable_known = true;
            }
            eigs_known = true;
        } else if (disc.is_zero()) {
            FieldElem lambda = tr * QQ(1, 2);
            eigs = {{lambda, 2}};
            eigs_known = true;
            // equal eigenvalues with nonzero off-diagonal entries: a Jordan
            // block, not diagonalizable
            rep.diagonalizable = false;
            rep.diagonalizable_known = true;
        } else if (tr.is_rational() && det.is_rational()) {
            // eigenvalues are the two roots of x^2 - tr x + det
            QPoly cp = {det.rational_value(), -tr.rational_value(), QQ(1)};
            ZPoly cpz;
            if (integral(cp, cpz)) {
                rep.char_poly_int = cpz;
                if (irreducible_over_q(cpz)) {
                    // both roots form one conjugacy class entirely inside the
                    // spectrum: no outside conjugates at all
                    rep.same_multiplicity = true;
                    rep.same_multiplicity_known = true;
                    rep.diagonalizable = true;
                    rep.diagonalizable_known = true;
                    rep.pisot_family = true;  // vacuous
                    rep.pisot_known = true;
                    EigenvalueInfo e1;
                    e1.value = FieldElem::zero(F);
                    e1.multiplicity = 2;  // the pair, reported jointly
                    e1.min_poly = cpz;
                    e1.algebraic_integer = true;
                    rep.eigenvalues.push_back(e1);
                    // expansive: both |roots| > 1
                    auto roots = isolate_real_roots(cp);
                    if (roots.empty()) {
                        // complex pair: |lambda|^2 = det
                        rep.expansive = det.rational_value() > 1;
                    } else {
                        bool exp_ok = true;
                        for (auto r : roots) {
                            while (true) {
                                QQ alo = std::min(abs_q(r.lo), abs_q(r.hi));
                                if (r.contains_zero()) alo = 0;
                                QQ ahi = std::max(abs_q(r.lo), abs_q(r.hi));
                                if (ahi < 1 || alo > 1) {
                                    exp_ok = exp_ok && alo > 1;
                                    break;
                                }
                                r = refine_root(cp, r, r.width() / 16);
                            }
                        }
                        rep.expansive = exp_ok;
                    }
                    rep.notes = "eigenvalues form one full conjugate pair";
                    return rep;
                }
                // reducible: rational eigenvalues, fall through via roots
                QQ disc_q = tr.rational_value() * tr.rational_value() - 4 * det.rational_value();
                // rational roots: (tr +- s)/2 with s^2 = disc_q
                // find s by checking the square root of the numerator/denominator
                ZZ num = disc_q.get_num(), den = disc_q.get_den();
                ZZ sn, sd;
                mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
                mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
                if (sn * sn == num && sd * sd == den) {
                    QQ s(sn, sd);
                    s.canonicalize();
                    QQ l1 = (tr.rational_value() + s) / 2;
                    QQ l2 = (tr.rational_value() - s) / 2;
                    if (l1 == l2) {
                        eigs = {{FieldElem::from_rational(F, l1), 2}};
                        rep.diagonalizable_known = false;
                    } else {
                        eigs = {{FieldElem::from_rational(F, l1), 1},
                                {FieldElem::from_rational(F, l2), 1}};
                        rep.diagonalizable = true;
                        rep.diagonalizable_known = true;
                    }
                    eigs_known = true;
                }
            } else {
                rep.notes = "characteristic polynomial is not integral; eigenvalues are not algebraic integers";
                rep.pisot_family = false;
                rep.pisot_known = true;
                return rep;
            }
        }
        if (!eigs_known) {
            rep.notes = "eigenvalues not representable exactly in this field; analysis inconclusive";
            return rep;
        }
    }

    // minimal polynomials and integrality
    bool all_integral = true;
    std::vector<ZPoly> min_polys;
    for (auto& [val, mult] : eigs) {
        EigenvalueInfo info;
        info.value = val;
        info.multiplicity = mult;
        QPoly mp = min_poly_over_q(val);
        ZPoly mpz_;
        info.algebraic_integer = integral(mp, mpz_);
        if (info.algebraic_integer) {
            info.min_poly = mpz_;
            bool seen = false;
            for (const auto& m : min_polys) seen = seen || poly_eq(m, mpz_);
            if (!seen) min_polys.push_back(mpz_);
        } else {
            all_integral = false;
        }
        rep.eigenvalues.push_back(info);
    }

    // expansive: every eigenvalue has |lambda| > 1, exact via lambda^2 - 1
    rep.expansive = true;
    for (const auto& [val, mult] : eigs) {
        FieldElem m2 = val * val - QQ(1);
        if (m2.sign() <= 0) rep.expansive = false;
    }

    // same multiplicity: all eigenvalues share one minimal polynomial and one
    // multiplicity
    if (!rep.same_multiplicity_known) {
        bool same_mp = min_polys.size() <= 1 && all_integral;
        bool same_mult = true;
        for (const auto& [val, mult] : eigs) same_mult = same_mult && mult == eigs[0].second;
        rep.same_multiplicity = same_mp && same_mult;
        rep.same_multiplicity_known = all_integral;
    }

    if (!all_integral) {
        rep.pisot_family = false;
        rep.pisot_known = true;
        rep.notes = "some eigenvalue is not an algebraic integer";
        return rep;
    }

    std::vector<FieldElem> values;
    for (const auto& [val, mult] : eigs) values.push_back(val);
    bool all_small = true, all_decided = true;
    for (const auto& mp : min_polys) {
        RootAnalysis ra = analyze_min_poly(mp, values, precision_bits);
        for (auto& c : ra.outside) rep.conjugates.push_back(c);
        all_small = all_small && ra.all_small;
        all_decided = all_decided && ra.all_decided;
    }
    rep.pisot_known = all_decided;
    rep.pisot_family = all_decided && all_small;
    if (!all_decided) rep.notes = "minimal polynomial has several complex pairs; moduli undecided";

    if (d == 1) {
        ZPoly cp;
        QPoly cpq = {-eigs[0].first.coeffs()[0], QQ(1)};
        if (eigs[0].first.is_rational() && integral(cpq, cp)) rep.char_poly_int = cp;
    }
    return rep;
}

}  // namespace subtile
