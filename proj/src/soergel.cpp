// Diagrammatic Soergel categories and the functor Sigma into the
// string-diagram category at the weight (1^d).

#include "schurcat/soergel.hpp"
#include "schurcat/ek_bimodule.hpp"

#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace schurcat {

int SoergelAtom::bottom_arity() const {
    switch (kind) {
        case SoergelKind::EndDot: return 1;
        case SoergelKind::StartDot: return 0;
        case SoergelKind::Merge: return 2;
        case SoergelKind::Split: return 1;
        case SoergelKind::FourVertex: return 2;
        case SoergelKind::SixVertexU:
        case SoergelKind::SixVertexD: return 3;
        case SoergelKind::Box: return 0;
    }
    return 0;
}

int SoergelAtom::top_arity() const {
    switch (kind) {
        case SoergelKind::EndDot: return 0;
        case SoergelKind::StartDot: return 1;
        case SoergelKind::Merge: return 1;
        case SoergelKind::Split: return 2;
        case SoergelKind::FourVertex: return 2;
        case SoergelKind::SixVertexU:
        case SoergelKind::SixVertexD: return 3;
        case SoergelKind::Box: return 0;
    }
    return 0;
}

std::vector<SoergelObject> SoergelWord::boundaries() const {
    std::vector<SoergelObject> out;
    SoergelObject cur = source;
    out.push_back(cur);
    for (const SoergelAtom& a : slices) {
        int m = (int)cur.size();
        int ba = a.bottom_arity();
        int from = ba == 0 ? a.pos : a.pos - 1;
        if (from < 0 || from + ba > m) throw std::invalid_argument("soergel atom out of range");
        SoergelObject next(cur.begin(), cur.begin() + from);
        switch (a.kind) {
            case SoergelKind::EndDot:
                if (cur[from] != a.i) throw std::invalid_argument("EndDot color mismatch");
                break;
            case SoergelKind::StartDot: next.push_back(a.i); break;
            case SoergelKind::Merge:
                if (cur[from] != a.i || cur[from + 1] != a.i)
                    throw std::invalid_argument("Merge color mismatch");
                next.push_back(a.i);
                break;
            case SoergelKind::Split:
                if (cur[from] != a.i) throw std::invalid_argument("Split color mismatch");
                next.push_back(a.i);
                next.push_back(a.i);
                break;
            case SoergelKind::FourVertex:
                if (cur[from] != a.i || cur[from + 1] != a.j)
                    throw std::invalid_argument("FourVertex color mismatch");
                next.push_back(a.j);
                next.push_back(a.i);
                break;
            case SoergelKind::SixVertexU:
                // (j,i,j) -> (i,j,i) with j = i+1
                if (cur[from] != a.j || cur[from + 1] != a.i || cur[from + 2] != a.j)
                    throw std::invalid_argument("SixVertexU color mismatch");
                next.push_back(a.i);
                next.push_back(a.j);
                next.push_back(a.i);
                break;
            case SoergelKind::SixVertexD:
                if (cur[from] != a.i || cur[from + 1] != a.j || cur[from + 2] != a.i)
                    throw std::invalid_argument("SixVertexD color mismatch");
                next.push_back(a.j);
                next.push_back(a.i);
                next.push_back(a.j);
                break;
            case SoergelKind::Box: break;
        }
        next.insert(next.end(), cur.begin() + from + ba, cur.end());
        cur = std::move(next);
        out.push_back(cur);
    }
    return out;
}

SoergelObject SoergelWord::target() const { return boundaries().back(); }

int SoergelWord::degree() const {
    int deg = 0;
    for (const SoergelAtom& a : slices) {
        switch (a.kind) {
            case SoergelKind::EndDot:
            case SoergelKind::StartDot: deg += 1; break;
            case SoergelKind::Merge:
            case SoergelKind::Split: deg -= 1; break;
            case SoergelKind::FourVertex:
            case SoergelKind::SixVertexU:
            case SoergelKind::SixVertexD: break;
            case SoergelKind::Box: deg += 2 * a.box.total_degree(); break;
        }
    }
    return deg;
}

std::string SoergelWord::text() const {
    std::ostringstream os;
    os << "n=" << n << " source:";
    for (int c : source) os << " " << c;
    os << "\n";
    for (auto& a : slices) {
        switch (a.kind) {
            case SoergelKind::EndDot: os << "enddot(" << a.i << ")@" << a.pos; break;
            case SoergelKind::StartDot: os << "startdot(" << a.i << ")@" << a.pos; break;
            case SoergelKind::Merge: os << "merge(" << a.i << ")@" << a.pos; break;
            case SoergelKind::Split: os << "split(" << a.i << ")@" << a.pos; break;
            case SoergelKind::FourVertex:
                os << "4v(" << a.i << "," << a.j << ")@" << a.pos;
                break;
            case SoergelKind::SixVertexU:
                os << "6vU(" << a.i << "," << a.j << ")@" << a.pos;
                break;
            case SoergelKind::SixVertexD:
                os << "6vD(" << a.i << "," << a.j << ")@" << a.pos;
                break;
            case SoergelKind::Box: os << "box[" << a.box.str() << "]@" << a.pos; break;
        }
        os << "\n";
    }
    return os.str();
}

Var box_var(int i) { return intern_var("B" + std::to_string(i) + "]"); }

std::pair<MPoly, MPoly> box_normalize(const MPoly& f, int i) {
    MPoly df = divided_diff(f, box_var(i), box_var(i + 1));
    MPoly p = f - MPoly::var(box_var(i)) * df;
    return {p, df};
}

namespace {

GlWeight ones_weight(int n, int d) {
    GlWeight w(n, 0);
    for (int k = 0; k < d; ++k) w[k] = 1;
    return w;
}

Atom gx(const SignedSeq& boundary, int pos) {
    const SLetter& L = boundary[pos - 1];
    const SLetter& R = boundary[pos];
    if (L.sign > 0 && R.sign > 0) return {AtomKind::CrossUU, pos, L.color, R.color};
    if (L.sign < 0 && R.sign < 0) return {AtomKind::CrossDD, pos, L.color, R.color};
    if (L.sign > 0) return {AtomKind::CrossLR, pos, L.color, R.color};
    return {AtomKind::CrossRL, pos, L.color, R.color};
}

/// append a generic crossing and update the boundary
void push_cross(std::vector<Atom>& atoms, SignedSeq& b, int pos) {
    atoms.push_back(gx(b, pos));
    std::swap(b[pos - 1], b[pos]);
}

/// gl-atoms of the upward six-vertex movie; q is the gl position of the
/// first block strand: source Sigma(j,i,j), target Sigma(i,j,i), j = i+1
std::vector<Atom> six_vertex_up_atoms(SignedSeq& b, int q, int i_col, int j_col) {
    std::vector<Atom> atoms;
    auto cross = [&](int rel) { push_cross(atoms, b, q + rel); };
    cross(3);  // (+i, -j)
    cross(1);  // (+j, -i)
    {  // capFE(j) on the (+j,-j) pair
        atoms.push_back({AtomKind::CapFE, q + 2, j_col});
        b.erase(b.begin() + (q + 1), b.begin() + (q + 3));
    }
    {  // cupEF(i) inserted between the -i, +i pair
        atoms.push_back({AtomKind::CupEF, q + 1, i_col});
        b.insert(b.begin() + (q + 1), {{-1, i_col}, {+1, i_col}});
    }
    cross(1);
    cross(0);
    cross(3);
    cross(4);
    cross(2);
    cross(1);
    cross(3);
    return atoms;
}

/// the downward six-vertex is the 180-degree rotation of the upward one
std::vector<Atom> six_vertex_down_atoms(int n, int d, int i_col, int j_col) {
    DiagramWord up;
    up.n = n;
    up.d = d;
    up.source.lambda = ones_weight(n, d);
    for (int c : {j_col, i_col, j_col}) {
        up.source.seq.push_back({-1, c});
        up.source.seq.push_back({+1, c});
    }
    SignedSeq b = up.source.seq;
    up.slices = six_vertex_up_atoms(b, 1, i_col, j_col);
    return up.rotated180().slices;
}

} // namespace

LinComb sigma(const SoergelWord& w, int n, int d) {
    if (!w.boxes_allowed && d != n)
        throw std::invalid_argument("sigma: SC_1 maps into S(n,n); use boxes_allowed for d<n");
    for (int c : w.source)
        if (c > d - 1 && d < n)
            throw std::invalid_argument("sigma: colors must be <= d-1 when d<n");

    GlWeight lam = ones_weight(n, d);
    auto bds = w.boundaries();

    // start: one diagram word on the doubled sequence
    DiagramWord base;
    base.n = n;
    base.d = d;
    base.source.lambda = lam;
    for (int c : w.source) {
        base.source.seq.push_back({-1, c});
        base.source.seq.push_back({+1, c});
    }
    base.coeff = w.coeff;
    LinComb acc;
    acc.add(1, base);

    for (size_t s = 0; s < w.slices.size(); ++s) {
        const SoergelAtom& a = w.slices[s];
        if (a.kind == SoergelKind::Box) {
            // expand the box polynomial into stacks of closed-form bubbles:
            // box_i -> sum_{j=i}^{d-1} (0-dot j-bubble) - ((-1)-dot d-bubble)
            if (!w.boxes_allowed) throw std::invalid_argument("boxes need SC'_1");
            int gap = 2 * a.pos;
            LinComb fixed;
            for (auto& term : acc.terms) {
                for (auto& [mon, coef] : a.box.terms()) {
                    std::vector<std::pair<Rat, std::vector<Atom>>> cur{{coef, {}}};
                    for (auto& [bv, e] : mon.exps) {
                        int color = -1;
                        for (int c = 1; c <= n; ++c)
                            if (box_var(c) == bv) color = c;
                        if (color < 0) throw std::invalid_argument("box poly: unknown variable");
                        for (int rep = 0; rep < e; ++rep) {
                            std::vector<std::pair<Rat, std::vector<Atom>>> nxt;
                            for (auto& p : cur) {
                                for (int j = color; j <= d - 1; ++j) {
                                    auto q = p;
                                    q.second.push_back({AtomKind::Bubble, gap, j, 0, 0, false});
                                    nxt.push_back(q);
                                }
                                auto q = p;
                                q.first = -q.first;
                                q.second.push_back({AtomKind::Bubble, gap, d, 0, -1, false});
                                nxt.push_back(q);
                            }
                            cur = std::move(nxt);
                        }
                    }
                    for (auto& p : cur) {
                        DiagramWord t = term.w;
                        for (auto& bb : p.second) t.slices.push_back(bb);
                        fixed.add(term.c * p.first, t);
                    }
                }
            }
            acc = std::move(fixed);
            continue;
        }
        // non-box atoms: fixed gl-slice lists appended to every term
        const SoergelObject& below = bds[s];
        int from = a.bottom_arity() == 0 ? a.pos : a.pos - 1;
        int q = 2 * from + 1;  // gl position of the first affected strand
        std::vector<Atom> atoms;
        SignedSeq glb;
        for (int c : below) {
            glb.push_back({-1, c});
            glb.push_back({+1, c});
        }
        switch (a.kind) {
            case SoergelKind::EndDot:
                atoms.push_back({AtomKind::CapEF, q, a.i});
                break;
            case SoergelKind::StartDot:
                atoms.push_back({AtomKind::CupEF, 2 * a.pos, a.i});
                break;
            case SoergelKind::Merge:
                atoms.push_back({AtomKind::CapFE, q + 1, a.i});
                break;
            case SoergelKind::Split:
                atoms.push_back({AtomKind::CupFE, q, a.i});
                break;
            case SoergelKind::FourVertex: {
                SignedSeq b = glb;
                push_cross(atoms, b, q + 1);
                push_cross(atoms, b, q);
                push_cross(atoms, b, q + 2);
                push_cross(atoms, b, q + 1);
                break;
            }
            case SoergelKind::SixVertexU: {
                SignedSeq b = glb;
                auto sv = six_vertex_up_atoms(b, q, a.i, a.j);
                atoms.insert(atoms.end(), sv.begin(), sv.end());
                break;
            }
            case SoergelKind::SixVertexD: {
                auto sv = six_vertex_down_atoms(n, d, a.i, a.j);
                for (Atom at : sv) {
                    at.pos += q - 1;
                    atoms.push_back(at);
                }
                break;
            }
            case SoergelKind::Box: break;
        }
        for (auto& term : acc.terms)
            for (auto& at : atoms) term.w.slices.push_back(at);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// transport between the tensor presentation and the module normal forms

namespace {

/// boundary variable assignments at each tensor slot: stage[k][j] = the
/// value of x_{j+1} at the boundary above the k-th digon (stage[0] = z's).
std::vector<std::vector<MPoly>> boundary_stages(const SoergelObject& word, int d,
                                                bool target_names) {
    std::vector<std::vector<MPoly>> stages;
    std::vector<MPoly> bv;
    for (int j = 1; j <= d; ++j) bv.push_back(MPoly::var(intern_var("z" + std::to_string(j))));
    stages.push_back(bv);
    for (size_t k = 0; k < word.size(); ++k) {
        int c = word[k];
        // the +c letter of the k-th digon is gl letter 2k+1 (0-based)
        Var u = target_names ? standard_target_var(2 * k + 1) : standard_source_var(2 * k + 1);
        std::vector<MPoly> nxt = bv;
        nxt[c - 1] = bv[c - 1] + bv[c] - MPoly::var(u);
        nxt[c] = MPoly::var(u);
        bv = nxt;
        stages.push_back(bv);
    }
    return stages;
}

/// a Bott-Samelson element as a polynomial in the bottom and edge variables
MPoly transport_bs(const BSElement& el, const SoergelObject& word, int d, bool target_names) {
    auto stages = boundary_stages(word, d, target_names);
    MPoly acc;
    for (size_t mask = 0; mask < el.comp.size(); ++mask) {
        if (el.comp[mask].is_zero()) continue;
        MPoly term = el.comp[mask];
        for (int j = d; j >= 1; --j)
            term = term.subst(intern_var("x" + std::to_string(j)),
                              MPoly::var(intern_var("z" + std::to_string(j))));
        for (size_t k = 0; k < word.size(); ++k)
            if (mask & ((size_t)1 << k)) term = term * stages[k + 1][word[k] - 1];
        acc += term;
    }
    return acc;
}

/// F_Bim(Sigma(w)) against the tensor-side map, compared on the tensor basis
bool ek_matches_bim(const EKMap& ek, const EvaluatedMap& fb, const SoergelWord& sw, int n,
                    int d) {
    SoergelObject src = sw.source;
    SoergelObject tgt = sw.target();
    auto src_stages = boundary_stages(src, d, false);
    for (size_t mask = 0; mask < ((size_t)1 << src.size()); ++mask) {
        MPoly p(1);
        for (size_t k = 0; k < src.size(); ++k)
            if (mask & ((size_t)1 << k)) p *= src_stages[k + 1][src[k] - 1];
        MPoly via_bim = apply_map_to(fb, p);
        MPoly via_ek = transport_bs(ek.images[mask], tgt, d, true);
        OneMorphism tgt1m = fb.tgt;
        via_ek = normalize_element(tgt1m, n, d, via_ek, true);
        if (!(via_bim == via_ek)) return false;
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// relation corpus

namespace {

struct SCase {
    std::string id;
    std::string rel;
    std::vector<std::pair<Rat, SoergelWord>> lhs, rhs;
};

SoergelWord sword(int n, SoergelObject src, std::vector<SoergelAtom> sl, bool boxes,
                  Rat coeff = Rat(1)) {
    SoergelWord w;
    w.n = n;
    w.source = std::move(src);
    w.slices = std::move(sl);
    w.boxes_allowed = boxes;
    w.coeff = coeff;
    return w;
}

SoergelAtom s_ed(int p, int i) { return {SoergelKind::EndDot, p, i}; }
SoergelAtom s_sd(int g, int i) { return {SoergelKind::StartDot, g, i}; }
SoergelAtom s_mg(int p, int i) { return {SoergelKind::Merge, p, i}; }
SoergelAtom s_sp(int p, int i) { return {SoergelKind::Split, p, i}; }
SoergelAtom s_4v(int p, int i, int j) { return {SoergelKind::FourVertex, p, i, j}; }
SoergelAtom s_6u(int p, int i, int j) { return {SoergelKind::SixVertexU, p, i, j}; }
SoergelAtom s_6d(int p, int i, int j) { return {SoergelKind::SixVertexD, p, i, j}; }
SoergelAtom s_box(int g, const MPoly& f) {
    SoergelAtom a{SoergelKind::Box, g, 0, 0};
    a.box = f;
    return a;
}

void one_color_cases(int n, bool boxes, std::vector<SCase>& out) {
    for (int i = 1; i <= n - 1; ++i) {
        std::string si = std::to_string(i);
        // eq:adj
        out.push_back({"sc/adj/" + si + "/a", "eq:adj",
                       {{1, sword(n, {i}, {s_sd(1, i), s_sp(2, i), s_mg(1, i), s_ed(1, i)}, boxes)}},
                       {{1, sword(n, {i}, {}, boxes)}}});
        out.push_back({"sc/adj/" + si + "/b", "eq:adj",
                       {{1, sword(n, {i}, {s_sd(0, i), s_sp(1, i), s_mg(2, i), s_ed(2, i)}, boxes)}},
                       {{1, sword(n, {i}, {}, boxes)}}});
        // eq:curldot
        out.push_back({"sc/curldot/" + si + "/a", "eq:curldot",
                       {{1, sword(n, {i}, {s_sd(0, i), s_mg(1, i), s_ed(1, i)}, boxes)}},
                       {{1, sword(n, {i}, {s_ed(1, i)}, boxes)}}});
        out.push_back({"sc/curldot/" + si + "/b", "eq:curldot",
                       {{1, sword(n, {i}, {s_sd(1, i), s_mg(1, i), s_ed(1, i)}, boxes)}},
                       {{1, sword(n, {i}, {s_ed(1, i)}, boxes)}}});
        // eq:v3rot
        out.push_back({"sc/v3rot/" + si + "/a", "eq:v3rot",
                       {{1, sword(n, {i, i}, {s_sp(1, i), s_mg(2, i), s_ed(2, i)}, boxes)}},
                       {{1, sword(n, {i, i}, {s_mg(1, i)}, boxes)}}});
        out.push_back({"sc/v3rot/" + si + "/b", "eq:v3rot",
                       {{1, sword(n, {i, i}, {s_sp(2, i), s_mg(1, i), s_ed(1, i)}, boxes)}},
                       {{1, sword(n, {i, i}, {s_mg(1, i)}, boxes)}}});
        // eq:dumbrot
        out.push_back({"sc/dumbrot/" + si, "eq:dumbrot",
                       {{1, sword(n, {}, {s_sd(0, i), s_ed(1, i)}, boxes)}},
                       {{1, sword(n, {}, {s_sd(0, i), s_sd(1, i), s_mg(1, i), s_ed(1, i)}, boxes)}}});
        // eq:lollipop
        out.push_back({"sc/lollipop/" + si, "eq:lollipop",
                       {{1, sword(n, {i}, {s_sp(1, i), s_mg(1, i), s_ed(1, i)}, boxes)}},
                       {}});
        // eq:deltam
        out.push_back({"sc/deltam/" + si, "eq:deltam",
                       {{1, sword(n, {i}, {s_sd(0, i), s_ed(1, i)}, boxes)},
                        {1, sword(n, {i}, {s_sd(1, i), s_ed(2, i)}, boxes)}},
                       {{2, sword(n, {i}, {s_ed(1, i), s_sd(0, i)}, boxes)}}});
    }
}

void distant_cases(int n, bool boxes, std::vector<SCase>& out) {
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            if (cartan(i, j) != 0 || i == j) continue;
            std::string sij = std::to_string(i) + "," + std::to_string(j);
            out.push_back({"sc/reid2/" + sij, "eq:reid2dist",
                           {{1, sword(n, {i, j}, {s_4v(1, i, j), s_4v(1, j, i)}, boxes)}},
                           {{1, sword(n, {i, j}, {}, boxes)}}});
            out.push_back({"sc/dotdist/" + sij, "eq:slidedotdist",
                           {{1, sword(n, {j}, {s_sd(0, i), s_4v(1, i, j)}, boxes)}},
                           {{1, sword(n, {j}, {s_sd(1, i)}, boxes)}}});
            out.push_back({"sc/slide3v/" + sij, "eq:slide3v",
                           {{1, sword(n, {i, j},
                                      {s_sp(1, i), s_4v(2, i, j), s_4v(1, i, j)}, boxes)}},
                           {{1, sword(n, {i, j}, {s_4v(1, i, j), s_sp(2, i)}, boxes)}}});
        }
}

void adjacent_cases(int n, bool boxes, std::vector<SCase>& out) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
        int j = i + 1;
        std::string sij = std::to_string(i) + "," + std::to_string(j);
        // eq:reid3, both color patterns
        out.push_back({"sc/reid3/" + sij, "eq:reid3",
                       {{1, sword(n, {i, j, i}, {s_6d(1, i, j), s_6u(1, i, j)}, boxes)}},
                       {{1, sword(n, {i, j, i}, {}, boxes)},
                        {1, sword(n, {i, j, i},
                                  {s_ed(2, j), s_mg(1, i), s_sp(1, i), s_sd(1, j)}, boxes)}}});
        out.push_back({"sc/reid3/" + std::to_string(j) + "," + std::to_string(i), "eq:reid3",
                       {{1, sword(n, {j, i, j}, {s_6u(1, i, j), s_6d(1, i, j)}, boxes)}},
                       {{1, sword(n, {j, i, j}, {}, boxes)},
                        {1, sword(n, {j, i, j},
                                  {s_ed(2, i), s_mg(1, j), s_sp(1, j), s_sd(1, i)}, boxes)}}});
        // eq:slidenext, barbells of the adjacent color across an i-strand
        for (auto [a, b] : {std::pair<int, int>{i, j}, std::pair<int, int>{j, i}}) {
            out.push_back({"sc/slidenext/" + std::to_string(a) + "on" + std::to_string(b),
                           "eq:slidenext",
                           {{1, sword(n, {b}, {s_sd(0, a), s_ed(1, a)}, boxes)},
                            {-1, sword(n, {b}, {s_sd(1, a), s_ed(2, a)}, boxes)}},
                           {{rat(1, 2), sword(n, {b}, {s_sd(1, b), s_ed(2, b)}, boxes)},
                            {rat(-1, 2), sword(n, {b}, {s_sd(0, b), s_ed(1, b)}, boxes)}}});
        }
        // eq:dot6v: the six-vertex with a StartDot entering its right leg
        out.push_back({"sc/dot6v/" + sij, "eq:dot6v",
                       {{1, sword(n, {i, j}, {s_sd(2, i), s_6d(1, i, j)}, boxes)}},
                       {{1, sword(n, {i, j}, {s_sd(0, j)}, boxes)},
                        {1, sword(n, {i, j},
                                  {s_ed(1, i), s_sp(1, j), s_sd(1, i)}, boxes)}}});
        // and with the colors switched
        out.push_back({"sc/dot6v/" + std::to_string(j) + "," + std::to_string(i), "eq:dot6v",
                       {{1, sword(n, {j, i}, {s_sd(2, j), s_6u(1, i, j)}, boxes)}},
                       {{1, sword(n, {j, i}, {s_sd(0, i)}, boxes)},
                        {1, sword(n, {j, i},
                                  {s_ed(1, j), s_sp(1, i), s_sd(1, j)}, boxes)}}});
    }
}

void box_cases(int n, int d, std::vector<SCase>& out) {
    // SC'_1(d) box relations, colors up to d-1, boxes colored up to d
    for (int i = 1; i <= d - 1; ++i) {
        MPoly bi = MPoly::var(box_var(i));
        MPoly bi1 = MPoly::var(box_var(i + 1));
        std::string si = std::to_string(i);
        out.push_back({"sc/box1/" + si, "eq:box1",
                       {{1, sword(n, {}, {s_sd(0, i), s_ed(1, i)}, true)}},
                       {{1, sword(n, {}, {s_box(0, bi - bi1)}, true)}}});
        out.push_back({"sc/box2/" + si, "eq:box2",
                       {{1, sword(n, {i}, {s_box(0, bi + bi1)}, true)}},
                       {{1, sword(n, {i}, {s_box(1, bi + bi1)}, true)}}});
        out.push_back({"sc/box3/" + si, "eq:box3",
                       {{1, sword(n, {i}, {s_box(0, bi * bi1)}, true)}},
                       {{1, sword(n, {i}, {s_box(1, bi * bi1)}, true)}}});
        for (int jj = 1; jj <= d; ++jj) {
            if (jj == i || jj == i + 1) continue;
            MPoly bj = MPoly::var(box_var(jj));
            out.push_back({"sc/box4/" + si + "/" + std::to_string(jj), "eq:box4",
                           {{1, sword(n, {i}, {s_box(0, bj)}, true)}},
                           {{1, sword(n, {i}, {s_box(1, bj)}, true)}}});
        }
    }
}

void three_color_cases(int n, bool boxes, std::vector<SCase>& out) {
    // eq:slide6v and eq:slide4v require a color distant from a pair; present
    // only for n >= 5, kept generic here
    for (int i = 1; i + 1 <= n - 1; ++i) {
        int j = i + 1;
        for (int k = 1; k <= n - 1; ++k) {
            if (cartan(k, i) != 0 || cartan(k, j) != 0 || k == i || k == j) continue;
            std::string s = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
            out.push_back(
                {"sc/slide6v/" + s, "eq:slide6v",
                 {{1, sword(n, {j, i, j, k},
                            {s_6u(1, i, j), s_4v(3, i, k), s_4v(2, j, k), s_4v(1, i, k)},
                            boxes)}},
                 {{1, sword(n, {j, i, j, k},
                            {s_4v(3, j, k), s_4v(2, i, k), s_4v(1, j, k), s_6u(2, i, j)},
                            boxes)}}});
        }
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            for (int k = 1; k <= n - 1; ++k) {
                bool dist = cartan(i, j) == 0 && cartan(i, k) == 0 && cartan(j, k) == 0 &&
                            i != j && i != k && j != k;
                if (!dist) continue;
                std::string s = std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k);
                out.push_back({"sc/slide4v/" + s, "eq:slide4v",
                               {{1, sword(n, {i, j, k},
                                          {s_4v(1, i, j), s_4v(2, i, k), s_4v(1, j, k)}, boxes)}},
                               {{1, sword(n, {i, j, k},
                                          {s_4v(2, j, k), s_4v(1, i, k), s_4v(2, i, j)}, boxes)}}});
            }
    // dumbbell squares: a barbell of an adjacent color inside a circle
    // collapses to the negated barbell of the circle color, and a three
    // color rotation symmetry of the same square shape
    for (int i = 1; i + 1 <= n - 1; ++i) {
        int j = i + 1;
        for (auto [a, b] : {std::pair<int, int>{i, j}, std::pair<int, int>{j, i}}) {
            out.push_back(
                {"sc/dumbsq/" + std::to_string(b) + "circ" + std::to_string(a), "eq:dumbsq",
                 {{1, sword(n, {},
                            {s_sd(0, b), s_sp(1, b), s_sd(1, a), s_ed(2, a), s_mg(1, b),
                             s_ed(1, b)},
                            boxes)}},
                 {{-1, sword(n, {}, {s_sd(0, b), s_ed(1, b)}, boxes)}}});
        }
    }
    for (int i = 1; i + 2 <= n - 1; ++i) {
        int j = i + 1, k = i + 2;
        std::string s = std::to_string(i);
        out.push_back(
            {"sc/dumbdumbsq/" + s, "eq:dumbdumbsquare",
             {{1, sword(n, {},
                        {s_sd(0, j), s_sp(1, j), s_sd(1, i), s_ed(2, i), s_mg(1, j), s_ed(1, j)},
                        boxes)}},
             {{1, sword(n, {},
                        {s_sd(0, j), s_sp(1, j), s_sd(1, k), s_ed(2, k), s_mg(1, j), s_ed(1, j)},
                        boxes)}}});
    }
}

} // namespace

Report soergel_relation_suite(int n, int d, int threads) {
    bool boxes = d < n;
    std::vector<SCase> cases;
    one_color_cases(d == n ? n : d, boxes, cases);
    distant_cases(d == n ? n : d, boxes, cases);
    adjacent_cases(d == n ? n : d, boxes, cases);
    three_color_cases(d == n ? n : d, boxes, cases);
    if (boxes) box_cases(n, d, cases);

    Report rep;
    rep.suite = "soergel(" + std::to_string(n) + "," + std::to_string(d) + ")";
    unsigned hw = threads > 0 ? (unsigned)threads : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    std::vector<std::future<std::vector<CheckCase>>> futs;
    size_t chunk = (cases.size() + hw - 1) / std::max<size_t>(hw, 1);
    if (chunk == 0) chunk = 1;
    for (size_t start = 0; start < cases.size(); start += chunk) {
        size_t end = std::min(cases.size(), start + chunk);
        futs.push_back(std::async(std::launch::async, [&cases, start, end, n, d] {
            std::vector<CheckCase> local;
            for (size_t t = start; t < end; ++t) {
                const SCase& c = cases[t];
                bool ok = false;
                std::string wit;
                try {
                    LinComb L, R;
                    for (auto& [co, sw] : c.lhs) {
                        LinComb part = sigma(sw, n, d);
                        for (auto& pt : part.terms) L.add(co * pt.c, pt.w);
                    }
                    for (auto& [co, sw] : c.rhs) {
                        LinComb part = sigma(sw, n, d);
                        for (auto& pt : part.terms) R.add(co * pt.c, pt.w);
                    }
                    ok = lincombs_equal(L, R);
                    if (!ok) wit = "map mismatch under F_Bim o Sigma";
                } catch (const std::exception& e) {
                    wit = e.what();
                }
                local.push_back({c.id, c.rel, "", ok, wit});
            }
            return local;
        }));
    }
    for (auto& f : futs)
        for (auto& cc : f.get()) rep.cases.push_back(cc);
    rep.sort();
    return rep;
}

Report soergel_ek_oracle(int n, int d) {
    Report rep;
    rep.suite = "soergel-ek-oracle(" + std::to_string(n) + "," + std::to_string(d) + ")";
    int colors = (d == n ? n : d) - 1;
    bool boxes = d < n;
    auto check_gen = [&](const std::string& id, const SoergelWord& sw) {
        bool ok = false;
        std::string wit;
        try {
            LinComb L = sigma(sw, n, d);
            auto fb = eval_lincomb(L);
            auto ek = ek_functor(sw, d);
            if (!fb || !ek) {
                wit = !ek ? "EK six-vertex solve failed" : "empty evaluation";
            } else {
                ok = ek_matches_bim(*ek, *fb, sw, n, d);
                if (!ok) wit = "oracle mismatch";
            }
        } catch (const std::exception& e) {
            wit = e.what();
        }
        rep.add(id, "lem:comm generator oracle", "", ok, wit);
    };
    for (int i = 1; i <= colors; ++i) {
        check_gen("ek/enddot/" + std::to_string(i), sword(n, {i}, {s_ed(1, i)}, boxes));
        check_gen("ek/startdot/" + std::to_string(i), sword(n, {}, {s_sd(0, i)}, boxes));
        check_gen("ek/merge/" + std::to_string(i), sword(n, {i, i}, {s_mg(1, i)}, boxes));
        check_gen("ek/split/" + std::to_string(i), sword(n, {i}, {s_sp(1, i)}, boxes));
        for (int j = 1; j <= colors; ++j) {
            if (cartan(i, j) == 0 && i != j)
                check_gen("ek/4v/" + std::to_string(i) + "," + std::to_string(j),
                          sword(n, {i, j}, {s_4v(1, i, j)}, boxes));
        }
        if (i + 1 <= colors) {
            check_gen("ek/6vU/" + std::to_string(i),
                      sword(n, {i + 1, i, i + 1}, {s_6u(1, i, i + 1)}, boxes));
            check_gen("ek/6vD/" + std::to_string(i),
                      sword(n, {i, i + 1, i}, {s_6d(1, i, i + 1)}, boxes));
        }
    }
    if (boxes)
        for (int i = 1; i <= d; ++i)
            check_gen("ek/box/" + std::to_string(i),
                      sword(n, {}, {s_box(0, MPoly::var(box_var(i)))}, true));
    rep.sort();
    return rep;
}

} // namespace schurcat
