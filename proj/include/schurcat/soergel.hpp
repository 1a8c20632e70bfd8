#pragma once

#include "schurcat/bimrep.hpp"
#include "schurcat/mpoly.hpp"
#include "schurcat/report.hpp"

#include <string>
#include <vector>

namespace schurcat {

/// object of SC_1(n): a sequence of colors in 1..n-1
using SoergelObject = std::vector<int>;

enum class SoergelKind {
    EndDot,    // (i) => empty, degree 1
    StartDot,  // empty => (i), degree 1
    Merge,     // (i,i) => (i), degree -1
    Split,     // (i) => (i,i), degree -1
    FourVertex,   // (i,j) => (j,i), distant, degree 0
    SixVertexU,   // (j,i,j) => (i,j,i) with j = i+1, degree 0
    SixVertexD,   // (i,j,i) => (j,i,j) with j = i+1, degree 0
    Box,       // region decoration, SC'_1 only, degree 2 per box
};

/// one event; `pos` = leftmost strand touched (gap index for StartDot/Box)
struct SoergelAtom {
    SoergelKind kind;
    int pos = 1;
    int i = 0;
    int j = 0;
    MPoly box;  // polynomial in the box variables, Box only

    int bottom_arity() const;
    int top_arity() const;
};

struct SoergelWord {
    int n = 0;  // ambient color bound: colors in 1..n-1
    SoergelObject source;
    std::vector<SoergelAtom> slices;
    Rat coeff = Rat(1);
    bool boxes_allowed = false;  // SC'_1 when true

    std::vector<SoergelObject> boundaries() const;
    SoergelObject target() const;
    int degree() const;
    std::string text() const;
};

/// global box variables, 1-based color
Var box_var(int i);

/// f = P_i(f) + box_i * d_i f with P_i(f) symmetric in boxes i and i+1
std::pair<MPoly, MPoly> box_normalize(const MPoly& f, int i);

/// Sigma_{n,d}: SC_1(n) (d = n, no boxes) or SC'_1(d) (d < n) into the
/// endomorphisms of 1_{(1^d)}.  The result is a linear combination because
/// box polynomials expand into bubble stacks.
LinComb sigma(const SoergelWord& w, int n, int d);

/// all relations of the one-, two- and three-color lists, pushed through
/// Sigma and verified under the bimodule evaluation; includes the box
/// relations when d < n
Report soergel_relation_suite(int n, int d, int threads = 0);

/// Lemma-of-comm generator-level oracle: F_Bim(Sigma(gen)) against the
/// directly coded Elias-Khovanov bimodule maps
Report soergel_ek_oracle(int n, int d);

} // namespace schurcat
