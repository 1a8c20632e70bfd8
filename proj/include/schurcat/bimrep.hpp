#pragma once

#include "schurcat/diagram.hpp"
#include "schurcat/mpoly.hpp"
#include "schurcat/report.hpp"
#include "schurcat/supersym.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace schurcat {

/// The image of a 2-morphism under F_Bim, recorded on the normal-form module
/// basis of its source.  Elements of the source bimodule are polynomials in
/// the bottom-boundary variables z_1..z_d plus one variable per thin edge,
/// with the edge variable exponents below their bounds; the basis consists
/// of the edge-variable monomials.  Images are written in the standardized
/// target edge variables.
struct EvaluatedMap {
    bool zero = true;
    int n = 0, d = 0;
    OneMorphism src, tgt;
    std::vector<int> src_bounds;  // exponent bound per source letter
    std::vector<int> tgt_bounds;
    std::vector<MPoly> images;    // one per source basis monomial, mixed radix
    std::optional<int> raw_degree;  // homogeneous polynomial-degree shift

    size_t basis_size() const {
        size_t s = 1;
        for (int b : src_bounds) s *= (size_t)b;
        return s;
    }
    /// exponents of basis element k in mixed radix (first letter fastest)
    std::vector<int> basis_exponents(size_t k) const {
        std::vector<int> e(src_bounds.size());
        for (size_t j = 0; j < src_bounds.size(); ++j) {
            e[j] = (int)(k % src_bounds[j]);
            k /= src_bounds[j];
        }
        return e;
    }
};

/// Evaluate a diagram word as an exact map on normal forms; zero-by-label
/// words give the zero map.
EvaluatedMap eval_diagram(const DiagramWord& w);

EvaluatedMap map_add(const EvaluatedMap& a, const EvaluatedMap& b);
EvaluatedMap map_scale(const Rat& c, EvaluatedMap a);
EvaluatedMap map_compose(const EvaluatedMap& second, const EvaluatedMap& first);

/// exact equality on the module basis plus a seeded random-point panel
bool maps_equal(const EvaluatedMap& f, const EvaluatedMap& g,
                uint64_t panel_seed = 12345, int panel_size = 3);

/// standardized edge-variable names used by eval_diagram: "s<k>!" on the
/// source and "t<k>!" on the target, one per letter
Var standard_source_var(size_t k);
Var standard_target_var(size_t k);

/// apply a map to an arbitrary element written in the bottom variables and
/// the standard source variables
MPoly apply_map_to(const EvaluatedMap& f, const MPoly& p);

/// canonical normal form of p with respect to the 1-morphism x, written in
/// the standard target (or source) edge variables
MPoly normalize_element(const OneMorphism& x, int n, int d, const MPoly& p,
                        bool target_names);

/// formal linear combination of diagram words; evaluated term by term
struct LinComb {
    struct Term {
        Rat c;
        DiagramWord w;
    };
    std::vector<Term> terms;
    void add(const Rat& c, DiagramWord w) { terms.push_back({c, std::move(w)}); }
};

/// nullopt when every term is zero-by-label and structures are unknown
std::optional<EvaluatedMap> eval_lincomb(const LinComb& lc);

/// checks lhs == rhs where zero-by-label sides count as the zero map
bool lincombs_equal(const LinComb& lhs, const LinComb& rhs, uint64_t panel_seed = 12345);

/// Closed-form value of the (possibly fake) dotted bubble of color i with r
/// dots in the region lambda: multiplication by a supersymmetric polynomial
/// in the standard bottom alphabets of 1_lambda.  Returns 0 below threshold.
MPoly bubble_value(bool cw, int r, int color, const GlWeight& lambda, int n, int d);

/// Giambelli determinant of thin bubbles: the thickness-m bubble labeled by
/// the partition (clockwise: beta, counterclockwise: alpha).
MPoly thick_bubble(bool cw, int m, const Partition& part, int color,
                   const GlWeight& lambda, int n, int d);

/// the standard bottom alphabets of F(1_lambda): strand j of thickness
/// lambda_j gets z_{k_{j-1}+1} .. z_{k_j}
std::vector<Alphabet> region_alphabets(const GlWeight& lambda, int d);

/// Internal grading shift of the bimodule attached to a 1-morphism: the
/// per-letter shifts {1 + k_{i-1} + k_i - k_{i+1}} and {1 - k_i} composed at
/// each letter's weight, with a correction of -1 per ordered letter pair
/// whose colors step down by one (weighted by the orientation signs).  With
/// this normalization every generator's polynomial-degree shift equals its
/// table degree: raw = degree + shift(src) - shift(tgt).
int one_morphism_shift(const OneMorphism& x);

/// relation families of the defining list plus the derived ones
enum class RelFamily {
    Biadjoint,
    CyclicDot,
    CyclicCross,
    BubbleValues,
    ReduceToBubbles,
    EFDecomp,
    InfGrass,
    NilHecke,
    NilDotSlide,
    DownUp,
    R2,
    DotSlide,
    R3Easy,
    R3Hard,
    BubbleSlides,
    OtherR3,
    R3Extra,
    Signs,
    SidewaysExpansion,
    All,
};

Report relation_suite(int n, int d, RelFamily family = RelFamily::All, int threads = 0,
                      uint64_t seed = 12345, int max_degree = 6);

/// idempotency, the vanishing criteria, and (m = 2) the graded multiplicity
/// [m]! of the divided-power image
Report divided_power_check(int n, int d, int max_m = 2);

} // namespace schurcat
