#pragma once

#include <map>
#include <optional>

#include "subtile/spectrum.hpp"
#include "subtile/tiling.hpp"

namespace subtile {

struct WordSubstitution {
    std::string alphabet;  // ordered symbols
    std::map<char, std::string> images;
};

// Parsed and validated rule: a geometric (pseudo-)substitution or a word
// substitution, depending on kind.
class Rule {
  public:
    enum class Kind { substitution, pseudo, word };

    Kind kind = Kind::substitution;
    std::string name;
    std::string source_hash;
    bool declared_non_periodic = false;

    // geometric payload
    FieldPtr field;
    int dim = 0;
    ProtoPtr protos;
    Mat phi;
    std::vector<std::vector<PlacedTile>> images;   // per prototile
    FieldElem support_slack_sq;  // exact max dist^2 of image points beyond phi(P̄)
    SpectrumReport spectrum;     // validation-time expansion analysis
    std::vector<std::vector<long>> incidence;      // M[q][p]: q-tiles in omega(P_p)

    // word payload
    std::optional<WordSubstitution> word;

    bool geometric() const { return kind != Kind::word; }
};

using RulePtr = std::shared_ptr<const Rule>;

RulePtr rule_parse(const std::string& text, const std::string& name_hint = "");
RulePtr rule_load(const std::string& path);
// resolves "catalog/chair" to "catalog/chair.json" when needed
std::string resolve_rule_path(const std::string& path);

// omega extended to patches; validates the result is a patch
Patch substitute(const Patch& p, const Rule& rule);
Patch substitute_times(Patch p, const Rule& rule, unsigned times);

struct Primitivity {
    bool primitive = false;
    int exponent = -1;  // least K with M^K > 0
};
Primitivity primitivity_check(const Rule& rule);

struct Seed {
    int proto = 0;
    Vec x;
    unsigned n = 0;
};

// First seed (in deterministic search order) whose tile lies strictly inside
// its level-1 supertile support: P + x in omega^n(P + x) with positive
// boundary margin. NoSeedFound otherwise.
Seed find_seed(const Rule& rule, unsigned max_n);

// Nested supertile approximants omega^{n m}(P + x) with cached levels,
// support boundaries and exact coverage radii.
class Approximant {
  public:
    Approximant(RulePtr rule, Seed seed);

    const Rule& rule() const { return *rule_; }
    const RulePtr& rule_ptr() const { return rule_; }
    const Seed& seed() const { return seed_; }

    const Patch& level(unsigned m);
    unsigned depth(unsigned m) const { return seed_.n * m; }
    // exact largest r^2 with the closed ball B(x, r) inside the support
    const FieldElem& coverage_radius_sq(unsigned m);
    const UnionBoundary& boundary(unsigned m);
    const TileGrid& grid(unsigned m);

    static unsigned long tile_cap();

  private:
    RulePtr rule_;
    Seed seed_;
    std::vector<Patch> levels_;
    std::vector<std::optional<UnionBoundary>> bounds_;
    std::vector<std::optional<FieldElem>> coverage_;
    std::vector<std::shared_ptr<TileGrid>> grids_;
};

Approximant grow(RulePtr rule, const Seed& seed, unsigned m);

// exact r_m lower bounds (squared) per level 1..M about the seed anchor
struct ExpandingReport {
    std::vector<FieldElem> r_sq;   // largest certified r^2 per level
    bool strictly_increasing = false;
};
ExpandingReport expanding_check(Approximant& ap, unsigned levels);

struct FlcProbe {
    struct PerRadius {
        QQ r_sq;
        std::vector<std::size_t> cumulative_counts;  // distinct windows up to depth n
        int stabilized_at = -1;  // least n with count(n) == count(n-1)
    };
    std::vector<PerRadius> radii;
};
FlcProbe rule_flc_probe(const Rule& rule, const std::vector<QQ>& r_sq_list, unsigned depth);

std::string fnv1a_hex(const std::string& data);

}  // namespace subtile
