#pragma once

#include "schurcat/rational.hpp"
#include "schurcat/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schurcat {

/// One letter of a signed sequence: E_{+i} (sign +1) or E_{-i} (sign -1).
struct SLetter {
    int sign;
    int color;
    bool operator==(const SLetter& o) const { return sign == o.sign && color == o.color; }
};

using SignedSeq = std::vector<SLetter>;

/// (i)_Lambda shift of a single letter on a gl-weight
inline GlWeight apply_letter(GlWeight w, const SLetter& L) {
    return shift_weight(std::move(w), L.color, L.sign);
}

/// 1-morphism E_{i_1} ... E_{i_m} 1_lambda {shift}; lambda is the rightmost
/// region label, the rightmost letter acts first.
struct OneMorphism {
    SignedSeq seq;
    GlWeight lambda;
    int shift = 0;

    /// region labels right to left: regions[m] = lambda (rightmost),
    /// regions[g] = weight between strands g and g+1, regions[0] = leftmost.
    std::vector<GlWeight> regions() const {
        int m = (int)seq.size();
        std::vector<GlWeight> r(m + 1);
        r[m] = lambda;
        for (int g = m - 1; g >= 0; --g) r[g] = apply_letter(r[g + 1], seq[g]);
        return r;
    }
    GlWeight target() const { return regions().front(); }
    bool operator==(const OneMorphism& o) const {
        return seq == o.seq && lambda == o.lambda && shift == o.shift;
    }
};

enum class AtomKind {
    DotUp,    // r dots on an upward strand, color i
    DotDown,
    CrossUU,  // both up; colors (i = left, j = right) at the bottom
    CrossDD,  // both down
    CrossLR,  // bottom (+i, -j): up strand left, down strand right
    CrossRL,  // bottom (-i, +j)
    CupEF,    // 1 => E_{-i} E_{+i}, degree 1 + lambda_bar_i
    CupFE,    // 1 => E_{+i} E_{-i}, degree 1 - lambda_bar_i
    CapEF,    // E_{-i} E_{+i} => 1, degree 1 + lambda_bar_i
    CapFE,    // E_{+i} E_{-i} => 1, degree 1 - lambda_bar_i
    Bubble,   // closed-form dotted bubble (may be fake: dots < 0)
};

/// One elementary event.  `pos` is the 1-based index of the leftmost strand
/// the atom touches; cups and bubbles use the gap index 0..m (0 = far left).
struct Atom {
    AtomKind kind;
    int pos = 1;
    int i = 0;        // primary color
    int j = 0;        // secondary color (crossings)
    int dots = 0;     // dot count (DotUp/DotDown), dot label for Bubble
    bool cw = false;  // Bubble orientation

    int bottom_arity() const;
    int top_arity() const;
    /// bottom boundary letters consumed (empty for cups/bubbles)
    SignedSeq bottom_letters() const;
    SignedSeq top_letters() const;
};

/// A 2-morphism of S(n,d) as a vertical list of events, bottom to top, with
/// an overall rational prefactor.  Source is the bottom 1-morphism.
struct DiagramWord {
    int n = 0, d = 0;
    OneMorphism source;
    std::vector<Atom> slices;
    Rat coeff = Rat(1);

    /// boundary sequences between slices: boundary(0) = source.seq, one per
    /// slice above; throws on mismatched atoms
    std::vector<SignedSeq> boundaries() const;
    OneMorphism target() const;

    /// total diagram degree (sum of atom degrees at their local weights)
    int degree() const;

    /// all region labels of the whole diagram
    std::vector<GlWeight> all_regions() const;
    /// zero in S(n,d): some region leaves Lambda(n,d), or a real bubble has
    /// negative degree
    bool is_zero_by_label() const;

    DiagramWord rotated180() const;
    /// the sl_n -> gl_n sign of Psi_{n,d}: product of (-1)^{lambda_{i+1}+1}
    /// over left cups (CupFE) and (-1)^{lambda_{i+1}} over left caps (CapEF)
    int sl_sign() const;

    std::string text() const;
    static DiagramWord parse(const std::string& text);
};

DiagramWord compose_v(const DiagramWord& bottom, const DiagramWord& top);
DiagramWord compose_h(const DiagramWord& left, const DiagramWord& right);
DiagramWord identity_word(int n, int d, const OneMorphism& x);

/// the staircase-dotted longest-crossing idempotent e_{+-i,m,lambda}
DiagramWord divided_power_idempotent(int n, int d, int color, int sign, int m,
                                     const GlWeight& lambda);

/// replace every sideways crossing by its defining cup/crossing/cap
/// composite (the twist choice fixed by the defining relations)
DiagramWord expand_sideways(const DiagramWord& w);

/// the projection 2-functor: relabel every region by lambda - (k^n) where
/// d' = d + n k, with a sign (-1)^k per left cup and left cap
DiagramWord pi_functor(const DiagramWord& w, int dprime, int d);

/// the inclusion 2-functor: re-embed labels of Lambda(n,d) into Lambda(m,d)
DiagramWord iota_functor(const DiagramWord& w, int m);

/// degree of a single atom when the region right of it is `mu`
int atom_degree(const Atom& a, const GlWeight& mu);

} // namespace schurcat
