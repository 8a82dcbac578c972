#!/usr/bin/env python3
"""Regenerates the rule catalog with exact field coordinates.

Every coordinate is an element of the rule's number field written as a list
of rational coefficient strings in the power basis of the field generator.
Run from the repository root:  python3 tools/gen_catalog.py
"""

import json
import os
from fractions import Fraction as Fr

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# ---------------------------------------------------------------- field ops
class Field:
    """Q[x]/(m(x)), m monic integer, coefficients constant-first."""

    def __init__(self, min_poly, root_interval, approx_root):
        self.m = [Fr(c) for c in min_poly]
        self.deg = len(min_poly) - 1
        self.root_interval = root_interval
        self.approx_root = approx_root

    def el(self, *coeffs):
        c = [Fr(x) for x in coeffs]
        assert len(c) <= self.deg
        return tuple(c + [Fr(0)] * (self.deg - len(c)))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, a, k):
        k = Fr(k)
        return tuple(x * k for x in a)

    def mul(self, a, b):
        prod = [Fr(0)] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                prod[i + j] += x * y
        for k in range(2 * self.deg - 2, self.deg - 1, -1):
            f = prod[k]
            if f == 0:
                continue
            prod[k] = Fr(0)
            for i in range(self.deg):
                prod[k - self.deg + i] -= f * self.m[i]
        return tuple(prod[: self.deg])

    def approx(self, a):
        r = self.approx_root
        return float(sum(float(c) * r**i for i, c in enumerate(a)))

    def fmt(self, a):
        return [str(c) for c in a]


def vec_fmt(F, v):
    return [F.fmt(c) for c in v]


def vadd(F, a, b):
    return tuple(F.add(x, y) for x, y in zip(a, b))


def vsub(F, a, b):
    return tuple(F.sub(x, y) for x, y in zip(a, b))


def vscale(F, v, k):
    return tuple(F.scale(x, k) for x in v)


def vmul(F, v, s):  # multiply every coordinate by field element s
    return tuple(F.mul(x, s) for x in v)


def mat_apply(F, M, v):
    return tuple(
        F.add(F.mul(M[i][0], v[0]), F.mul(M[i][1], v[1])) for i in range(2)
    )


def centroid(F, pts):
    n = len(pts)
    acc = pts[0]
    for p in pts[1:]:
        acc = vadd(F, acc, p)
    return vscale(F, acc, Fr(1, n))


def write_rule(path, doc):
    out = os.path.join(ROOT, path)
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    print("wrote", path)


# ------------------------------------------------------------------ square
def gen_square():
    F = Field([0, 1], ("-1", "1"), 0.0)
    h = Fr(1, 2)
    verts = [(-h, -h), (h, -h), (h, h), (-h, h)]
    shifts = [(-h, -h), (h, -h), (-h, h), (h, h)]
    doc = {
        "schema": 1,
        "name": "square",
        "kind": "substitution",
        "dim": 2,
        "metadata": {"non_periodic": False},
        "field": {"min_poly": ["0", "1"], "root_interval": ["-1", "1"]},
        "prototiles": [
            {"name": "sq", "vertices": [[[str(x)], [str(y)]] for x, y in verts]}
        ],
        "phi": [[["2"], ["0"]], [["0"], ["2"]]],
        "images": {
            "sq": [
                {"proto": "sq", "shift": [[str(x)], [str(y)]]} for x, y in shifts
            ]
        },
    }
    write_rule("catalog/square.json", doc)


# ------------------------------------------------------------------- chair
def gen_chair():
    # corner-frame chairs C_k: [0,2]^2 minus quadrant q_k, CCW
    corner = {
        0: [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)],
        1: [(0, 0), (2, 0), (2, 2), (1, 2), (1, 1), (0, 1)],
        2: [(1, 0), (2, 0), (2, 2), (0, 2), (0, 1), (1, 1)],
        3: [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)],
    }
    # centers of the inner-corner unit squares: prototile anchor points
    cc = {0: (Fr(1, 2), Fr(1, 2)), 1: (Fr(3, 2), Fr(1, 2)),
          2: (Fr(3, 2), Fr(3, 2)), 3: (Fr(1, 2), Fr(3, 2))}

    def rot_pt(s):  # rotate about (1,1) by +90
        return (Fr(1) + (Fr(1) - Fr(s[1])), Fr(1) + (Fr(s[0]) - Fr(1)))

    # master decomposition of C_0 in the corner frame
    master = [(0, (0, 0)), (0, (1, 1)), (1, (2, 0)), (3, (0, 2))]
    images = {}
    for k in range(4):
        kids = []
        for (j, s) in master:
            sj = (Fr(s[0]), Fr(s[1]))
            for _ in range(k):
                sj = rot_pt(sj)
            child = (j + k) % 4
            # centered frame: shift = s - 2*cc[k] + cc[child]
            sx = sj[0] - 2 * cc[k][0] + cc[child][0]
            sy = sj[1] - 2 * cc[k][1] + cc[child][1]
            kids.append({"proto": f"chair{child}", "shift": [[str(sx)], [str(sy)]]})
        images[f"chair{k}"] = kids

    protos = []
    for k in range(4):
        vs = [(Fr(x) - cc[k][0], Fr(y) - cc[k][1]) for x, y in corner[k]]
        protos.append(
            {"name": f"chair{k}", "vertices": [[[str(x)], [str(y)]] for x, y in vs]}
        )
    doc = {
        "schema": 1,
        "name": "chair",
        "kind": "substitution",
        "dim": 2,
        "metadata": {"non_periodic": True},
        "field": {"min_poly": ["0", "1"], "root_interval": ["-1", "1"]},
        "prototiles": protos,
        "phi": [[["2"], ["0"]], [["0"], ["2"]]],
        "images": images,
    }
    write_rule("catalog/chair.json", doc)


# --------------------------------------------------------------- fibonacci
def gen_fibonacci():
    # field Q(tau), tau^2 = tau + 1; lengths: a = tau, b = 1, phi = tau
    doc = {
        "schema": 1,
        "name": "fibonacci",
        "kind": "substitution",
        "dim": 1,
        "metadata": {"non_periodic": True},
        "field": {"min_poly": ["-1", "-1", "1"], "root_interval": ["1", "2"]},
        "prototiles": [
            {"name": "a", "vertices": [[["0", "-1/2"]], [["0", "1/2"]]]},
            {"name": "b", "vertices": [[["-1/2", "0"]], [["1/2", "0"]]]},
        ],
        "phi": [[["0", "1"]]],
        "images": {
            "a": [
                {"proto": "a", "shift": [["-1/2", "0"]]},
                {"proto": "b", "shift": [["0", "1/2"]]},
            ],
            "b": [{"proto": "a", "shift": [["0", "0"]]}],
        },
    }
    write_rule("catalog/fibonacci.json", doc)


def gen_non_pisot():
    # a -> a b b b, b -> a; lambda^2 = lambda + 3 (non-Pisot conjugate)
    doc = {
        "schema": 1,
        "name": "non_pisot_1d",
        "kind": "substitution",
        "dim": 1,
        "metadata": {"non_periodic": True},
        "field": {"min_poly": ["-3", "-1", "1"], "root_interval": ["2", "5/2"]},
        "prototiles": [
            {"name": "a", "vertices": [[["0", "-1/2"]], [["0", "1/2"]]]},
            {"name": "b", "vertices": [[["-1/2", "0"]], [["1/2", "0"]]]},
        ],
        "phi": [[["0", "1"]]],
        "images": {
            "a": [
                {"proto": "a", "shift": [["-3/2", "0"]]},
                {"proto": "b", "shift": [["-1", "1/2"]]},
                {"proto": "b", "shift": [["0", "1/2"]]},
                {"proto": "b", "shift": [["1", "1/2"]]},
            ],
            "b": [{"proto": "a", "shift": [["0", "0"]]}],
        },
    }
    write_rule("catalog/non_pisot_1d.json", doc)


# ------------------------------------------------------- word substitutions
def gen_words():
    write_rule(
        "catalog/fibonacci_word.json",
        {
            "schema": 1,
            "name": "fibonacci_word",
            "kind": "word",
            "alphabet": ["a", "b"],
            "images": {"a": "ab", "b": "a"},
        },
    )
    write_rule(
        "catalog/periodic_word.json",
        {
            "schema": 1,
            "name": "periodic_word",
            "kind": "word",
            "alphabet": ["a", "b"],
            "images": {"a": "ab", "b": "ab"},
        },
    )


# ----------------------------------------------------------------- fixtures
def gen_fixtures():
    # non-FLC shear: 3x inflation of a unit square, middle row offset by
    # tau - 1 (pseudo: the shifted row leaves phi(P))
    a = "tau-1"
    del a
    shifts = []
    for j, dy in ((0, "-1"), (2, "1")):
        del j
        for dx in ("-1", "0", "1"):
            shifts.append(([dx, "0"], [dy, "0"]))
    # middle row: x = k + (tau - 1)  ->  coefficients [k - 1, 1]
    for k in (-1, 0, 1):
        shifts.append(([str(k - 1), "1"], ["0", "0"]))
    doc = {
        "schema": 1,
        "name": "non_flc_shear",
        "kind": "pseudo",
        "dim": 2,
        "metadata": {"non_periodic": True},
        "field": {"min_poly": ["-1", "-1", "1"], "root_interval": ["1", "2"]},
        "prototiles": [
            {
                "name": "sq",
                "vertices": [
                    [["-1/2", "0"], ["-1/2", "0"]],
                    [["1/2", "0"], ["-1/2", "0"]],
                    [["1/2", "0"], ["1/2", "0"]],
                    [["-1/2", "0"], ["1/2", "0"]],
                ],
            }
        ],
        "phi": [[["3", "0"], ["0", "0"]], [["0", "0"], ["3", "0"]]],
        "images": {"sq": [{"proto": "sq", "shift": [sx, sy]} for sx, sy in shifts]},
    }
    write_rule("tests/fixtures/non_flc_shear.json", doc)

    bad = {
        "schema": 1,
        "name": "overlapping_images",
        "kind": "substitution",
        "dim": 2,
        "field": {"min_poly": ["0", "1"], "root_interval": ["-1", "1"]},
        "prototiles": [
            {
                "name": "sq",
                "vertices": [
                    [["-1/2"], ["-1/2"]],
                    [["1/2"], ["-1/2"]],
                    [["1/2"], ["1/2"]],
                    [["-1/2"], ["1/2"]],
                ],
            }
        ],
        "phi": [[["2"], ["0"]], [["0"], ["2"]]],
        "images": {
            "sq": [
                {"proto": "sq", "shift": [["-1/2"], ["-1/2"]]},
                {"proto": "sq", "shift": [["0"], ["-1/2"]]},
                {"proto": "sq", "shift": [["-1/2"], ["1/2"]]},
                {"proto": "sq", "shift": [["1/2"], ["1/2"]]},
            ]
        },
    }
    write_rule("tests/fixtures/overlapping_images.json", bad)


# ------------------------------------------------------ robinson triangles
def gen_robinson():
    # field Q(u), u = 2 sin 36, u^4 - 5u^2 + 5 = 0, u in (1, 3/2)
    F = Field([5, 0, -5, 0, 1], ("1", "3/2"), 1.1755705045849463)
    tau = F.el(3, 0, -1, 0)
    cos36 = F.scale(tau, Fr(1, 2))
    sin36 = F.el(0, Fr(1, 2), 0, 0)
    cos72 = F.scale(F.sub(tau, F.el(1)), Fr(1, 2))
    sin72 = F.scale(F.mul(F.el(0, 1, 0, 0), tau), Fr(1, 2))
    zero = F.el(0)

    R36 = [[cos36, F.neg(sin36)], [sin36, cos36]]

    def rot(v, k):
        for _ in range(k % 10):
            v = mat_apply(F, R36, v)
        return v

    def refl(v):
        return (v[0], F.neg(v[1]))

    # base poses: ordered triples (apex, leg1-end, leg2-end)
    O = (zero, zero)
    A_pose = (O, vmul(F, (cos72, sin72), tau), vmul(F, (F.neg(cos72), sin72), tau))
    G_pose = (O, (cos36, sin36), (F.neg(cos36), sin36))

    protos = []  # (name, triple, polygon_vertices)

    def add_proto(shape, e, k, pose):
        tri = tuple(rot(refl(v) if e else v, k) for v in pose)
        cen = centroid(F, tri)
        tri0 = tuple(vsub(F, v, cen) for v in tri)
        name = f"{shape}{k}{'m' if e else ''}"
        # polygon must be CCW; reflected triples are CW
        poly = list(tri0) if not e else list(reversed(tri0))
        protos.append((name, tri0, poly))

    for shape, pose in (("acute", A_pose), ("gnomon", G_pose)):
        for e in (0, 1):
            for k in range(10):
                add_proto(shape, e, k, pose)

    def identify(triple):
        # orientation-preserving match only: leg order carries the chirality
        # label, so the swapped ordering must never be tried
        a, v, w = triple
        for name, t, _ in protos:
            sh = vsub(F, a, t[0])
            if vsub(F, v, t[1]) == sh and vsub(F, w, t[2]) == sh:
                return name, sh
        raise AssertionError("child triangle matches no prototile")

    # master decompositions in pose coordinates (children of tau * pose)
    P, B, C = A_pose
    tB, tC = vmul(F, B, tau), vmul(F, C, tau)
    master_A = [
        (tC, B, tB),   # acute, apex at tau*C
        (P, B, C),     # acute, the unrotated copy at the apex
        (C, B, tC),    # gnomon, apex at C
    ]
    Pg, Bg, Cg = G_pose
    tBg, tCg = vmul(F, Bg, tau), vmul(F, Cg, tau)
    Fp = vadd(F, vmul(F, Bg, F.sub(tau, F.el(1))), Cg)  # (tau-1) Bg + Cg
    master_G = [
        (tBg, Pg, Fp),  # acute, apex at tau*Bg
        (Fp, Pg, tCg),  # gnomon, apex at Fp
    ]

    images = {}
    for shape, pose, master in (
        ("acute", A_pose, master_A),
        ("gnomon", G_pose, master_G),
    ):
        for e in (0, 1):
            for k in range(10):
                name = f"{shape}{k}{'m' if e else ''}"
                cen = centroid(F, tuple(rot(refl(v) if e else v, k) for v in pose))
                tcen = vmul(F, cen, tau)
                kids = []
                for child in master:
                    placed = tuple(
                        vsub(F, rot(refl(v) if e else v, k), tcen) for v in child
                    )
                    cname, sh = identify(placed)
                    kids.append({"proto": cname, "shift": vec_fmt(F, sh)})
                images[name] = kids

    doc = {
        "schema": 1,
        "name": "robinson_triangles",
        "kind": "substitution",
        "dim": 2,
        "metadata": {"non_periodic": True},
        "field": {"min_poly": ["5", "0", "-5", "0", "1"], "root_interval": ["1", "3/2"]},
        "prototiles": [
            {"name": n, "vertices": [vec_fmt(F, v) for v in poly]}
            for n, _, poly in protos
        ],
        "phi": [
            [F.fmt(tau), F.fmt(zero)],
            [F.fmt(zero), F.fmt(tau)],
        ],
        "images": images,
    }
    write_rule("catalog/robinson_triangles.json", doc)


# -------------------------------------------------------- ammann-beenker
def gen_ammann_beenker():
    F = Field([-2, 0, 1], ("1", "3/2"), 2**0.5)
    s2 = F.el(0, 1)
    c = F.el(0, Fr(1, 2))   # sqrt2/2
    one = F.el(1)
    delta = F.el(1, 1)      # 1 + sqrt2
    zero = F.el(0)
    R45 = [[c, F.neg(c)], [c, c]]

    def rot(v, k):
        for _ in range(k % 8):
            v = mat_apply(F, R45, v)
        return v

    O = (zero, zero)
    e = [rot((one, zero), k) for k in range(8)]

    # rhombus pose: acute corner first, CCW
    rh_pose = (O, e[0], vadd(F, e[0], e[1]), e[1])
    # half-square pose: right angle first, then x-leg end, y-leg end
    tr_pose = (O, (one, zero), (zero, one))

    protos = []

    def add_proto(name, tup, poly_ccw):
        cen = centroid(F, tup)
        tup0 = tuple(vsub(F, v, cen) for v in tup)
        poly0 = [vsub(F, v, cen) for v in poly_ccw]
        protos.append((name, tup0, poly0))

    for k in range(4):
        tup = tuple(rot(v, k) for v in rh_pose)
        add_proto(f"rhomb{k}", tup, list(tup))
    for k in range(8):
        tup = tuple(rot(v, k) for v in tr_pose)
        add_proto(f"tri{k}", tup, list(tup))

    def cross(a, b):
        return F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))

    def identify_tri(a, v, w):
        # order legs positively
        if F.approx(cross(vsub(F, v, a), vsub(F, w, a))) < 0:
            v, w = w, v
        for name, t, _ in protos:
            if not name.startswith("tri"):
                continue
            sh = vsub(F, a, t[0])
            if vsub(F, v, t[1]) == sh and vsub(F, w, t[2]) == sh:
                return name, sh
        raise AssertionError("triangle child matches no prototile")

    def identify_rh(tup):
        cands = [tup, (tup[2], tup[3], tup[0], tup[1])]
        for name, t, _ in protos:
            if not name.startswith("rhomb"):
                continue
            for cand in cands:
                sh = vsub(F, cand[0], t[0])
                if all(vsub(F, cand[i], t[i]) == sh for i in (1, 2, 3)):
                    return name, sh
        raise AssertionError("rhombus child matches no prototile")

    # --- rhombus master (children of delta * rh_pose) ---
    A = vmul(F, e[0], delta)                      # (delta, 0)
    Cc = vmul(F, e[1], delta)                     # delta * e1
    diag = vadd(F, e[0], e[1])
    r2shift = vmul(F, diag, s2)                   # (sqrt2+1, 1)
    center2 = vmul(F, diag, delta)                # 2 * center
    t1 = ((vadd(F, e[0], e[1])), e[0], A)         # right angle at e0+e1
    t2 = (vadd(F, e[0], e[1]), Cc, e[1])          # right angle same point
    t3 = tuple(vsub(F, center2, v) for v in t1)
    t4 = tuple(vsub(F, center2, v) for v in t2)
    master_rh = {
        "rhombi": [rh_pose, tuple(vadd(F, v, r2shift) for v in rh_pose),
                   tuple(vadd(F, rot(v, 2), A) for v in rh_pose)],
        "tris": [t1, t2, t3, t4],
    }

    # --- triangle master (children of delta * tr_pose) ---
    cc = (c, c)
    sq2x = vmul(F, e[0], s2)                      # (sqrt2, 0)
    sq2y = vmul(F, e[2], s2)                      # (0, sqrt2)
    dA = vmul(F, e[0], delta)
    dB = vmul(F, e[2], delta)
    ra = (dA, vadd(F, dA, e[3]), vadd(F, vadd(F, dA, e[3]), e[4]),
          vadd(F, dA, e[4]))
    rb = (dB, vadd(F, dB, e[6]), vadd(F, vadd(F, dB, e[6]), e[7]),
          vadd(F, dB, e[7]))
    master_tr = {
        "rhombi": [ra, rb],
        "tris": [
            (cc, O, sq2x),
            (cc, sq2y, O),
            (cc, vadd(F, cc, e[0]), vadd(F, cc, e[2])),
        ],
    }

    images = {}
    for k in range(4):
        cen = centroid(F, tuple(rot(v, k) for v in rh_pose))
        dcen = vmul(F, cen, delta)
        kids = []
        for tup in master_rh["rhombi"]:
            placed = tuple(vsub(F, rot(v, k), dcen) for v in tup)
            nm, sh = identify_rh(placed)
            kids.append({"proto": nm, "shift": vec_fmt(F, sh)})
        for tup in master_rh["tris"]:
            placed = tuple(vsub(F, rot(v, k), dcen) for v in tup)
            nm, sh = identify_tri(*placed)
            kids.append({"proto": nm, "shift": vec_fmt(F, sh)})
        images[f"rhomb{k}"] = kids
    for k in range(8):
        cen = centroid(F, tuple(rot(v, k) for v in tr_pose))
        dcen = vmul(F, cen, delta)
        kids = []
        for tup in master_tr["rhombi"]:
            placed = tuple(vsub(F, rot(v, k), dcen) for v in tup)
            nm, sh = identify_rh(placed)
            kids.append({"proto": nm, "shift": vec_fmt(F, sh)})
        for tup in master_tr["tris"]:
            placed = tuple(vsub(F, rot(v, k), dcen) for v in tup)
            nm, sh = identify_tri(*placed)
            kids.append({"proto": nm, "shift": vec_fmt(F, sh)})
        images[f"tri{k}"] = kids

    doc = {
        "schema": 1,
        "name": "ammann_beenker",
        "kind": "substitution",
        "dim": 2,
        "metadata": {"non_periodic": True},
        "field": {"min_poly": ["-2", "0", "1"], "root_interval": ["1", "3/2"]},
        "prototiles": [
            {"name": n, "vertices": [vec_fmt(F, v) for v in poly]}
            for n, _, poly in protos
        ],
        "phi": [[F.fmt(delta), F.fmt(zero)], [F.fmt(zero), F.fmt(delta)]],
        "images": images,
    }
    write_rule("catalog/ammann_beenker.json", doc)


if __name__ == "__main__":
    gen_square()
    gen_chair()
    gen_fibonacci()
    gen_non_pisot()
    gen_words()
    gen_fixtures()
    gen_robinson()
    gen_ammann_beenker()
