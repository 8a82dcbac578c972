#include "subtile/subst.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace subtile {

using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

namespace {

const json& need(const json& j, const char* key) {
    if (!j.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
    return j.at(key);
}

QQ rational_at(const json& j) {
    if (!j.is_string()) throw SchemaError("rationals must be strings like \"-1/2\"");
    return parse_rational(j.get<std::string>());
}

FieldElem coeffs_at(const FieldPtr& f, const json& j) {
    if (!j.is_array()) throw SchemaError("field coefficients must be an array of strings");
    if (static_cast<int>(j.size()) != f->degree())
        throw FieldError("coefficient list length must equal the field degree");
    std::vector<QQ> c;
    for (const auto& e : j) c.push_back(rational_at(e));
    return FieldElem(f, std::move(c));
}

Vec vec_at(const FieldPtr& f, int dim, const json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw SchemaError("coordinate must be an array of length dim");
    std::vector<FieldElem> e;
    for (const auto& comp : j) e.push_back(coeffs_at(f, comp));
    return Vec(std::move(e));
}

// phi(P̄) as a polygon (affine image; vertex order fixed for orientation)
Polygon transformed_polygon(const Polygon& p, const Mat& phi) {
    std::vector<Vec> vs;
    for (const auto& v : p.vertices()) vs.push_back(phi.apply(v));
    if (p.dim() == 1) {
        if (compare(vs[0][0], vs[1][0]) > 0) std::swap(vs[0], vs[1]);
        return Polygon::make(std::move(vs));
    }
    if (phi.det().sign() < 0) std::reverse(vs.begin(), vs.end());
    return Polygon::make(std::move(vs));
}

WordSubstitution parse_word(const json& j) {
    WordSubstitution w;
    const json& alpha = need(j, "alphabet");
    if (!alpha.is_array() || alpha.empty()) throw SchemaError("alphabet must be a nonempty array");
    for (const auto& s : alpha) {
        std::string sym = s.get<std::string>();
        if (sym.size() != 1) throw SchemaError("alphabet symbols must be single characters");
        if (w.alphabet.find(sym[0]) != std::string::npos)
            throw SchemaError("duplicate alphabet symbol");
        w.alphabet += sym[0];
    }
    const json& imgs = need(j, "images");
    bool lengthens = false;
    for (char a : w.alphabet) {
        std::string key(1, a);
        if (!imgs.contains(key)) throw SchemaError("missing image for symbol '" + key + "'");
        std::string img = imgs.at(key).get<std::string>();
        if (img.empty()) throw SchemaError("images must be nonempty words");
        for (char c : img)
            if (w.alphabet.find(c) == std::string::npos)
                throw SchemaError("image uses a symbol outside the alphabet");
        if (img.size() >= 2) lengthens = true;
        w.images[a] = img;
    }
    if (!lengthens) throw SchemaError("word substitution never lengthens any symbol");
    return w;
}

}  // namespace

RulePtr rule_parse(const std::string& text, const std::string& name_hint) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("rule file is not valid JSON: ") + e.what());
    }
    auto rule = std::make_shared<Rule>();
    rule->source_hash = fnv1a_hex(text);
    rule->name = j.value("name", name_hint);
    if (j.contains("metadata") && j.at("metadata").is_object())
        rule->declared_non_periodic = j.at("metadata").value("non_periodic", false);

    std::string kind = need(j, "kind").get<std::string>();
    if (kind == "word") {
        rule->kind = Rule::Kind::word;
        rule->word = parse_word(j);
        return rule;
    }
    if (kind == "substitution")
        rule->kind = Rule::Kind::substitution;
    else if (kind == "pseudo")
        rule->kind = Rule::Kind::pseudo;
    else
        throw SchemaError("kind must be one of substitution|pseudo|word");

    int dim = need(j, "dim").get<int>();
    if (dim != 1 && dim != 2)
        throw DimensionError("only dimensions 1 and 2 are supported");
    rule->dim = dim;

    const json& fj = need(j, "field");
    ZPoly mp;
    for (const auto& c : need(fj, "min_poly")) {
        QQ q = rational_at(c);
        if (q.get_den() != 1) throw FieldError("min_poly coefficients must be integers");
        mp.push_back(q.get_num());
    }
    QQ rlo = rational_at(need(fj, "root_interval").at(0));
    QQ rhi = rational_at(need(fj, "root_interval").at(1));
    rule->field = NumberField::make(mp, rlo, rhi);

    const json& pj = need(j, "prototiles");
    if (!pj.is_array() || pj.empty()) throw SchemaError("prototiles must be a nonempty array");
    std::vector<std::string> names;
    std::vector<Polygon> polys;
    for (const auto& pt : pj) {
        names.push_back(need(pt, "name").get<std::string>());
        std::vector<Vec> vs;
        for (const auto& v : need(pt, "vertices")) vs.push_back(vec_at(rule->field, dim, v));
        polys.push_back(Polygon::make(std::move(vs)));
    }
    rule->protos = PrototileSet::make(rule->field, dim, std::move(names), std::move(polys));

    const json& phij = need(j, "phi");
    if (!phij.is_array() || static_cast<int>(phij.size()) != dim)
        throw SchemaError("phi must be a dim x dim matrix");
    std::vector<FieldElem> entries;
    for (const auto& row : phij) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw SchemaError("phi must be a dim x dim matrix");
        for (const auto& e : row) entries.push_back(coeffs_at(rule->field, e));
    }
    rule->phi = Mat(dim, std::move(entries));
    rule->spectrum = spectrum_analyze(rule->phi);
    if (!rule->spectrum.expansive)
        throw SchemaError("phi is not certified expansive");

    const json& ij = need(j, "images");
    const auto& protos = *rule->protos;
    rule->images.resize(protos.count());
    rule->incidence.assign(protos.count(), std::vector<long>(protos.count(), 0));
    for (int p = 0; p < protos.count(); ++p) {
        const std::string& pname = protos.name(p);
        if (!ij.contains(pname)) throw SchemaError("missing image for prototile '" + pname + "'");
        std::vector<PlacedTile> tiles;
        for (const auto& child : ij.at(pname)) {
            int q = protos.index_of(need(child, "proto").get<std::string>());
            Vec shift = vec_at(rule->field, dim, need(child, "shift"));
            tiles.push_back({q, std::move(shift)});
            rule->incidence[q][p] += 1;
        }
        if (tiles.empty()) throw SchemaError("image of '" + pname + "' is empty");
        Patch img = Patch::build(rule->protos, std::move(tiles));
        rule->images[p] = img.tiles();
    }

    // support checks
    FieldElem det = rule->phi.det();
    FieldElem abs_det = det.sign() < 0 ? -det : det;
    FieldElem slack = FieldElem::zero(rule->field);
    for (int p = 0; p < protos.count(); ++p) {
        Polygon target = transformed_polygon(protos.poly(p), rule->phi);
        FieldElem img_area = FieldElem::zero(rule->field);
        for (const auto& t : rule->images[p]) img_area = img_area + protos.poly(t.proto).area2();
        FieldElem want = abs_det * protos.poly(p).area2();
        Vec zero = Vec::zero(rule->field, dim);
        if (rule->kind == Rule::Kind::substitution) {
            if (img_area != want)
                throw SchemaError("image of '" + protos.name(p) +
                                  "' violates support equality (area mismatch)");
            for (const auto& t : rule->images[p]) {
                for (const auto& v : protos.poly(t.proto).vertices()) {
                    Vec w = v + t.shift;
                    if (!target.contains_point(zero, w, false))
                        throw SchemaError("image of '" + protos.name(p) +
                                          "' violates support equality (vertex outside phi(P))");
                }
            }
        } else {
            for (const auto& t : rule->images[p]) {
                for (const auto& v : protos.poly(t.proto).vertices()) {
                    Vec w = v + t.shift;
                    FieldElem d = dist_sq_point_polygon(target, zero, w);
                    if (compare(d, slack) > 0) slack = d;
                }
            }
        }
    }
    rule->support_slack_sq = slack;
    return rule;
}

std::string resolve_rule_path(const std::string& path) {
    std::ifstream probe(path);
    if (probe.good()) return path;
    std::string alt = path + ".json";
    std::ifstream probe2(alt);
    if (probe2.good()) return alt;
    throw SchemaError("rule file not found: " + path);
}

RulePtr rule_load(const std::string& path) {
    std::string resolved = resolve_rule_path(path);
    std::ifstream in(resolved);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string name_hint = resolved;
    auto slash = name_hint.find_last_of('/');
    if (slash != std::string::npos) name_hint = name_hint.substr(slash + 1);
    auto dot = name_hint.find_last_of('.');
    if (dot != std::string::npos) name_hint = name_hint.substr(0, dot);
    return rule_parse(ss.str(), name_hint);
}

Patch substitute(const Patch& p, const Rule& rule) {
    if (!rule.geometric()) throw SchemaError("substitute needs a geometric rule");
    if (p.protos() != rule.protos)
        throw SchemaError("patch tiles are not translates of this rule's prototiles");
    std::vector<PlacedTile> out;
    for (const auto& t : p.tiles()) {
        Vec moved = rule.phi.apply(t.shift);
        for (const auto& child : rule.images[t.proto])
            out.push_back({child.proto, child.shift + moved});
    }
    return Patch::build(rule.protos, std::move(out));
}

Patch substitute_times(Patch p, const Rule& rule, unsigned times) {
    unsigned long cap = Approximant::tile_cap();
    for (unsigned i = 0; i < times; ++i) {
        p = substitute(p, rule);
        if (static_cast<unsigned long>(p.size()) > cap)
            throw ResourceLimit("tile cap exceeded during substitution (" +
                                std::to_string(p.size()) + " tiles; set AL_TILE_CAP to raise)");
    }
    return p;
}

Primitivity primitivity_check(const Rule& rule) {
    if (!rule.geometric()) throw SchemaError("primitivity_check needs a geometric rule");
    int n = rule.protos->count();
    int bound = (n - 1) * (n - 1) + 1;
    std::vector<std::vector<unsigned char>> b(n, std::vector<unsigned char>(n, 0)),
        acc(n, std::vector<unsigned char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = rule.incidence[i][j] > 0 ? 1 : 0;
    acc = b;
    for (int k = 1; k <= bound; ++k) {
        bool all = true;
        for (int i = 0; i < n && all; ++i)
            for (int j = 0; j < n && all; ++j) all = acc[i][j] != 0;
        if (all) return {true, k};
        // acc = acc * b (boolean)
        std::vector<std::vector<unsigned char>> nxt(n, std::vector<unsigned char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (acc[i][l])
                    for (int j = 0; j < n; ++j)
                        if (b[l][j]) nxt[i][j] = 1;
        acc = std::move(nxt);
    }
    return {false, -1};
}

namespace {

// P + x strictly inside the support of its own level-1 supertile
bool seed_is_interior(const Rule& rule, int proto, const Vec& x, const Patch& supertile) {
    UnionBoundary ub = union_boundary(supertile.placed());
    const Polygon& tile = rule.protos->poly(proto);
    if (rule.dim == 1) {
        FieldElem lo = tile.vertices()[0][0] + x[0];
        FieldElem hi = tile.vertices()[1][0] + x[0];
        for (const auto& c : ub.cuts)
            if (compare(c, lo) >= 0 && compare(c, hi) <= 0) return false;
        return true;
    }
    for (const auto& s : ub.segs)
        if (segment_touches_polygon(tile, x, s.a, s.b)) return false;
    return true;
}

}  // namespace

Seed find_seed(const Rule& rule, unsigned max_n) {
    if (!rule.geometric()) throw SchemaError("find_seed needs a geometric rule");
    Mat ident = Mat::identity(rule.field, rule.dim);
    for (unsigned n = 1; n <= max_n; ++n) {
        Mat phin = rule.phi.pow(n);
        Mat a = ident - phin;
        Mat a_inv = a.inverse();  // phi expansive => 1 not an eigenvalue of phi^n
        for (int p = 0; p < rule.protos->count(); ++p) {
            Patch tile0 = Patch::trusted(rule.protos, {{p, Vec::zero(rule.field, rule.dim)}});
            Patch image = substitute_times(tile0, rule, n);
            for (const auto& child : image.tiles()) {
                if (child.proto != p) continue;
                Vec x = a_inv.apply(child.shift);
                Patch around = image.translated(phin.apply(x));
                PlacedTile fixed{p, x};
                if (!around.contains_tile(fixed)) continue;  // exactness guard
                if (!seed_is_interior(rule, p, x, around)) continue;
                return Seed{p, x, n};
            }
        }
    }
    throw NoSeedFound("no interior fixed seed up to n = " + std::to_string(max_n));
}

Approximant::Approximant(RulePtr rule, Seed seed) : rule_(std::move(rule)), seed_(std::move(seed)) {
    Patch base = Patch::trusted(rule_->protos, {{seed_.proto, seed_.x}});
    levels_.push_back(std::move(base));
    bounds_.emplace_back();
    coverage_.emplace_back();
    grids_.push_back(nullptr);
}

const Patch& Approximant::level(unsigned m) {
    while (levels_.size() <= m) {
        Patch next = substitute_times(levels_.back(), *rule_, seed_.n);
        // nesting: the previous level sits inside the next one
        levels_.push_back(std::move(next));
        bounds_.emplace_back();
        coverage_.emplace_back();
        grids_.push_back(nullptr);
    }
    return levels_[m];
}

const UnionBoundary& Approximant::boundary(unsigned m) {
    level(m);
    if (!bounds_[m]) bounds_[m] = union_boundary(levels_[m].placed());
    return *bounds_[m];
}

const FieldElem& Approximant::coverage_radius_sq(unsigned m) {
    if (!coverage_[m + 0]) {
        level(m);
        const UnionBoundary& ub = boundary(m);
        auto d = ub.dist_sq(seed_.x);
        if (!d) throw InsufficientCoverage("approximant has no boundary?");
        coverage_[m] = *d;
    }
    return *coverage_[m];
}

const TileGrid& Approximant::grid(unsigned m) {
    level(m);
    if (!grids_[m]) {
        double cell = std::max(1.0, 2.0 * rule_->protos->approx_radius());
        grids_[m] = std::make_shared<TileGrid>(levels_[m], cell);
    }
    return *grids_[m];
}

unsigned long Approximant::tile_cap() {
    if (const char* e = std::getenv("AL_TILE_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 5000000ul;
}

Approximant grow(RulePtr rule, const Seed& seed, unsigned m) {
    Approximant ap(std::move(rule), seed);
    ap.level(m);
    return ap;
}

namespace {

FieldElem dist_sq_segments(const Vec& a1, const Vec& b1, const Vec& a2, const Vec& b2) {
    FieldElem d1 = dist_sq_point_segment(a1, a2, b2);
    FieldElem d2 = dist_sq_point_segment(b1, a2, b2);
    FieldElem d3 = dist_sq_point_segment(a2, a1, b1);
    FieldElem d4 = dist_sq_point_segment(b2, a1, b1);
    FieldElem m = d1;
    if (compare(d2, m) < 0) m = d2;
    if (compare(d3, m) < 0) m = d3;
    if (compare(d4, m) < 0) m = d4;
    return m;
}

}  // namespace

ExpandingReport expanding_check(Approximant& ap, unsigned levels) {
    ExpandingReport rep;
    const Rule& rule = ap.rule();
    const Polygon& tile = rule.protos->poly(ap.seed().proto);
    const Vec& x = ap.seed().x;
    for (unsigned m = 1; m <= levels; ++m) {
        const UnionBoundary& ub = ap.boundary(m);
        std::optional<FieldElem> best;
        if (rule.dim == 1) {
            FieldElem lo = tile.vertices()[0][0] + x[0];
            FieldElem hi = tile.vertices()[1][0] + x[0];
            for (const auto& c : ub.cuts) {
                FieldElem d;
                if (compare(c, lo) >= 0 && compare(c, hi) <= 0)
                    d = FieldElem::zero(rule.field);
                else {
                    FieldElem dl = c - lo, dh = c - hi;
                    FieldElem sl = dl * dl, sh = dh * dh;
                    d = compare(sl, sh) <= 0 ? sl : sh;
                }
                if (!best || compare(d, *best) < 0) best = d;
            }
        } else {
            int n = tile.size();
            for (const auto& s : ub.segs) {
                for (int i = 0; i < n; ++i) {
                    Vec a = tile.vertices()[i] + x;
                    Vec b = tile.vertices()[(i + 1) % n] + x;
                    FieldElem d = dist_sq_segments(a, b, s.a, s.b);
                    if (!best || compare(d, *best) < 0) best = d;
                }
            }
        }
        rep.r_sq.push_back(best ? *best : FieldElem::zero(rule.field));
    }
    rep.strictly_increasing = true;
    for (std::size_t i = 0; i + 1 < rep.r_sq.size(); ++i)
        if (compare(rep.r_sq[i], rep.r_sq[i + 1]) >= 0) rep.strictly_increasing = false;
    return rep;
}

FlcProbe rule_flc_probe(const Rule& rule, const std::vector<QQ>& r_sq_list, unsigned depth) {
    if (!rule.geometric()) throw SchemaError("rule_flc_probe needs a geometric rule");
    FlcProbe probe;
    for (const QQ& r_sq : r_sq_list) {
        FlcProbe::PerRadius pr;
        pr.r_sq = r_sq;
        std::unordered_set<CanonicalPatch, CanonicalPatchHash> seen;
        FieldElem rs = FieldElem::from_rational(rule.field, r_sq);
        std::vector<Patch> pats;
        for (int p = 0; p < rule.protos->count(); ++p)
            pats.push_back(Patch::trusted(rule.protos, {{p, Vec::zero(rule.field, rule.dim)}}));
        for (unsigned n = 1; n <= depth; ++n) {
            for (auto& pat : pats) pat = substitute(pat, rule);
            for (const auto& pat : pats) {
                double cell = std::max(1.0, 2.0 * rule.protos->approx_radius());
                TileGrid grid(pat, cell);
                for (const auto& t : pat.tiles()) {
                    Patch w = restrict_near(pat, grid, t.shift, rs, RestrictMode::sqcap);
                    if (w.empty()) continue;
                    seen.insert(canonicalize(w));
                }
            }
            pr.cumulative_counts.push_back(seen.size());
            std::size_t k = pr.cumulative_counts.size();
            if (pr.stabilized_at < 0 && k >= 2 &&
                pr.cumulative_counts[k - 1] == pr.cumulative_counts[k - 2])
                pr.stabilized_at = static_cast<int>(n);
        }
        probe.radii.push_back(std::move(pr));
    }
    return probe;
}

}  // namespace subtile
