#pragma once

#include <string>
#include <vector>

#include "subtile/vec.hpp"

namespace subtile {

// minimal polynomial of a field element over Q, monic with rational
// coefficients (degree divides the field degree)
QPoly min_poly_over_q(const FieldElem& x);

struct EigenvalueInfo {
    FieldElem value;      // exact (all supported cases carry field eigenvalues)
    int multiplicity;
    ZPoly min_poly;       // monic integer when the value is an algebraic integer
    bool algebraic_integer;
};

struct ConjugateInfo {
    ZPoly min_poly;       // which spectrum minimal polynomial it belongs to
    std::string kind;     // "real" or "complex-pair"
    QQ mod_lo, mod_hi;    // certified modulus interval (real roots only)
    QQ mod_sq_lo, mod_sq_hi;  // certified modulus^2 interval
    int vs_one;           // -1: |.| < 1, +1: |.| > 1, 0: |.| == 1 exactly
};

struct SpectrumReport {
    int dim = 0;
    bool expansive = false;
    bool squarefree = false;
    bool diagonalizable = false;
    bool diagonalizable_known = false;
    bool same_multiplicity = false;
    bool same_multiplicity_known = false;
    bool pisot_family = false;
    bool pisot_known = false;
    std::vector<EigenvalueInfo> eigenvalues;   // distinct values
    std::vector<ConjugateInfo> conjugates;     // roots of min polys outside spec(phi)
    ZPoly char_poly_int;                       // set when char poly is rational
    std::string notes;
};

// Exact spectrum/Pisot-family analysis of an expansion matrix.
// Handles d=1 and d=2 with in-field eigenvalues (scalar, triangular,
// discriminant-zero) plus rational characteristic polynomials; reports
// inconclusive honestly otherwise. Moduli are certified to width <=
// 2^-precision_bits.
SpectrumReport spectrum_analyze(const Mat& phi, unsigned precision_bits = 20);

}  // namespace subtile
