// Evaluation of diagram words as exact bimodule maps.
//
// The MOY diagram of E_{i_1}...E_{i_m} 1_lambda is swept bottom-up (leftmost
// letter = bottom block).  Free generators of the bimodule: the bottom
// boundary variables plus one fresh variable per letter.  A split of a
// thickness-N edge introduces the monic relation
//   sum_{t=0..N} (-1)^t e_t(parent) v^{N-t} = 0,
// so normal forms keep each letter variable below its bound; merged edges
// update their elementary-symmetric ledgers multiplicatively.

#include "schurcat/bimrep.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace schurcat {

namespace {

struct StrandLedger {
    int thickness = 0;
    std::vector<MPoly> e;  // e[0..thickness], e[0] = 1
};

struct Section {
    std::vector<StrandLedger> strand;  // index 0 = strand 1
};

/// complete symmetric h_m from an e-ledger via sum (-1)^t e_t h_{m-t} = 0
MPoly h_from_ledger(const StrandLedger& L, int m) {
    if (m < 0) return MPoly();
    std::vector<MPoly> h(m + 1);
    h[0] = MPoly(1);
    for (int s = 1; s <= m; ++s) {
        MPoly acc;
        for (int t = 1; t <= std::min(s, L.thickness); ++t) {
            MPoly term = L.e[t] * h[s - t];
            if (t % 2 == 0) term = -term;
            acc += term;
        }
        h[s] = acc;
    }
    return h[m];
}

struct Sweep {
    std::vector<int> bounds;       // per letter
    std::vector<MPoly> reduction;  // v^bound = reduction (lower letters only)
    std::vector<Section> section;  // section[g] = between blocks g and g+1
};

/// weights along the stack: below[g] = weight below block g+1 (region_g)
std::vector<GlWeight> stack_weights(const SignedSeq& seq, const GlWeight& lambda) {
    int m = (int)seq.size();
    std::vector<GlWeight> below(m + 1);
    below[m] = lambda;
    for (int g = m - 1; g >= 0; --g) below[g] = apply_letter(below[g + 1], seq[g]);
    return below;
}

Sweep sweep_word(int n, const SignedSeq& seq, const std::vector<Var>& vars,
                 const std::vector<Alphabet>& bottom) {
    Sweep sw;
    int m = (int)seq.size();
    sw.bounds.assign(m, 0);
    sw.reduction.assign(m, MPoly());
    Section cur;
    cur.strand.resize(n);
    for (int j = 0; j < n; ++j) {
        cur.strand[j].thickness = (int)bottom[j].size();
        cur.strand[j].e.resize(cur.strand[j].thickness + 1);
        for (int l = 0; l <= cur.strand[j].thickness; ++l)
            cur.strand[j].e[l] = elem_sym(l, bottom[j]);
    }
    sw.section.push_back(cur);
    for (int g = 0; g < m; ++g) {
        const SLetter& L = seq[g];
        MPoly v = MPoly::var(vars[g]);
        int split_strand = L.sign > 0 ? L.color : L.color + 1;   // 1-based
        int merge_strand = L.sign > 0 ? L.color + 1 : L.color;
        StrandLedger& par = cur.strand[split_strand - 1];
        int N = par.thickness;
        if (N < 1) throw std::logic_error("sweep: split of empty strand (missed label check)");
        sw.bounds[g] = N;
        // monic relation: v^N = sum_{t=1..N} (-1)^{t+1} e_t(parent) v^{N-t}
        {
            MPoly rhs;
            for (int t = 1; t <= N; ++t) {
                MPoly term = par.e[t];
                if (t % 2 == 0) term = -term;
                term = term * MPoly::var(vars[g], N - t);
                rhs += term;
            }
            sw.reduction[g] = rhs;
        }
        // child ledger: e_l(child) = sum (-1)^t v^t e_{l-t}(parent)
        StrandLedger child;
        child.thickness = N - 1;
        child.e.resize(N);
        for (int l = 0; l <= N - 1; ++l) {
            MPoly acc;
            for (int t = 0; t <= l; ++t) {
                MPoly term = MPoly::var(vars[g], t) * par.e[l - t];
                if (t % 2 == 1) term = -term;
                acc += term;
            }
            child.e[l] = acc;
        }
        cur.strand[split_strand - 1] = child;
        // merge: e(new) = e(old) * (1 + v Z)
        StrandLedger& tgt = cur.strand[merge_strand - 1];
        StrandLedger merged;
        merged.thickness = tgt.thickness + 1;
        merged.e.resize(merged.thickness + 1);
        for (int l = 0; l <= merged.thickness; ++l) {
            MPoly acc = l <= tgt.thickness ? tgt.e[l] : MPoly();
            if (l >= 1 && l - 1 <= tgt.thickness) acc += v * tgt.e[l - 1];
            merged.e[l] = acc;
        }
        cur.strand[merge_strand - 1] = merged;
        sw.section.push_back(cur);
    }
    return sw;
}

/// canonical normal form: reduce edge-variable powers from the top block down
MPoly normalize(MPoly p, const std::vector<Var>& vars, const Sweep& sw) {
    for (int g = (int)vars.size() - 1; g >= 0; --g) {
        Var v = vars[g];
        int bound = sw.bounds[g];
        while (p.degree_in(v) >= bound) {
            MPoly next;
            int dv = p.degree_in(v);
            for (int e = 0; e <= dv; ++e) {
                MPoly c = p.coeff_of(v, e);
                if (c.is_zero()) continue;
                if (e < bound) {
                    next += c * MPoly::var(v, e);
                } else {
                    next += c * MPoly::var(v, e - bound) * sw.reduction[g];
                }
            }
            p = std::move(next);
        }
    }
    return p;
}

/// supersymmetric elementary from two ledgers: e_j(A;B) with h from A, e from B
MPoly ss_elem_from_ledgers(int j, const StrandLedger& A, const StrandLedger& B) {
    if (j < 0) return MPoly();
    MPoly acc;
    for (int s = 0; s <= std::min(j, B.thickness); ++s) {
        MPoly term = h_from_ledger(A, j - s) * B.e[s];
        if (s % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

MPoly bubble_value_from_section(bool cw, int r, int color, const GlWeight& mu,
                                const Section& sec) {
    int a = mu[color - 1], b = mu[color];
    const StrandLedger& X = sec.strand[color - 1];
    const StrandLedger& Y = sec.strand[color];
    if (cw) {
        if (r < a - b - 1) return MPoly();
        MPoly v = ss_elem_from_ledgers(b - a + 1 + r, X, Y);
        if (b % 2 == 1) v = -v;
        return v;
    }
    if (r < b - a - 1) return MPoly();
    MPoly v = ss_elem_from_ledgers(a - b + 1 + r, Y, X);
    if (b % 2 == 0) v = -v;
    return v;
}

struct EvalState {
    int n, d;
    GlWeight lambda;  // rightmost region, fixed
    SignedSeq seq;
    std::vector<Var> vars;
    std::vector<Alphabet> bottom;
    Sweep sweep;

    void resweep() { sweep = sweep_word(n, seq, vars, bottom); }
    std::vector<GlWeight> regions() const { return stack_weights(seq, lambda); }
};

/// apply one atom to the state and polynomial; the state's sweep must be
/// current on entry and is refreshed on exit
void apply_atom(EvalState& st, const Atom& a, MPoly& p) {
    auto regions = st.regions();
    switch (a.kind) {
        case AtomKind::DotUp:
        case AtomKind::DotDown: {
            p = p * MPoly::var(st.vars[a.pos - 1], a.dots);
            break;
        }
        case AtomKind::CrossUU:
        case AtomKind::CrossDD: {
            int k = a.pos - 1;
            Var vl = st.vars[k], vr = st.vars[k + 1];
            int cl = st.seq[k].color, cr = st.seq[k + 1].color;
            if (cl == cr) {
                p = a.kind == AtomKind::CrossUU ? divided_diff(p, vl, vr)
                                                : divided_diff(p, vr, vl);
            } else if (cl == cr + 1 && a.kind == AtomKind::CrossUU) {
                p = p * (MPoly::var(vl) - MPoly::var(vr));
            } else if (cr == cl + 1 && a.kind == AtomKind::CrossDD) {
                p = p * (MPoly::var(vr) - MPoly::var(vl));
            }
            std::swap(st.seq[k], st.seq[k + 1]);
            std::swap(st.vars[k], st.vars[k + 1]);
            st.resweep();
            break;
        }
        case AtomKind::CrossLR:
        case AtomKind::CrossRL: {
            // sideways crossings evaluate through their defining expansion
            // into a cup, an upward crossing and a cap
            int k = a.pos;
            int ca = st.seq[k - 1].color, cb = st.seq[k].color;
            std::vector<Atom> expansion;
            if (a.kind == AtomKind::CrossLR) {
                expansion = {{AtomKind::CupEF, k - 1, cb},
                             {AtomKind::CrossUU, k + 1, cb, ca},
                             {AtomKind::CapFE, k + 2, cb}};
            } else {
                expansion = {{AtomKind::CupFE, k + 1, ca},
                             {AtomKind::CrossUU, k + 1, cb, ca},
                             {AtomKind::CapEF, k, ca}};
            }
            for (const Atom& e : expansion) apply_atom(st, e, p);
            return;  // sub-atoms already normalized
        }
        case AtomKind::CupEF: {
            int g = a.pos;
            GlWeight mu = regions[g];
            const StrandLedger& ti = st.sweep.section[g].strand[a.i - 1];
            Var y = fresh_var("w");
            Var x = fresh_var("w");
            MPoly acc;
            for (int l = 0; l <= mu[a.i - 1]; ++l) {
                MPoly term = MPoly::var(x, mu[a.i - 1] - l) * ti.e[l] * p;
                if (l % 2 == 1) term = -term;
                acc += term;
            }
            p = std::move(acc);
            st.seq.insert(st.seq.begin() + g, {{-1, a.i}, {+1, a.i}});
            st.vars.insert(st.vars.begin() + g, {y, x});
            st.resweep();
            break;
        }
        case AtomKind::CupFE: {
            int g = a.pos;
            GlWeight mu = regions[g];
            const StrandLedger& zi = st.sweep.section[g].strand[a.i];
            Var y = fresh_var("w");
            Var x = fresh_var("w");
            MPoly acc;
            int b = mu[a.i];
            for (int l = 0; l <= b; ++l) {
                MPoly term = zi.e[b - l] * MPoly::var(x, l) * p;
                if (l % 2 == 1) term = -term;
                acc += term;
            }
            p = std::move(acc);
            st.seq.insert(st.seq.begin() + g, {{+1, a.i}, {-1, a.i}});
            st.vars.insert(st.vars.begin() + g, {y, x});
            st.resweep();
            break;
        }
        case AtomKind::CapEF:
        case AtomKind::CapFE: {
            int k = a.pos - 1;
            GlWeight mu = regions[k + 2];
            Var x = st.vars[k];
            p = p.subst(st.vars[k + 1], MPoly::var(x));
            // d_{u x}(x^N) with |u| = s: the chain collapses to complete
            // symmetric functions of the strand edge below the bottom block
            bool ef = a.kind == AtomKind::CapEF;
            int strand = ef ? a.i + 1 : a.i;       // strand the pair lives on
            int s = mu[strand - 1] - 1;
            const StrandLedger& below = st.sweep.section[k].strand[strand - 1];
            MPoly acc;
            int dx = p.degree_in(x);
            for (int e = 0; e <= dx; ++e) {
                MPoly c = p.coeff_of(x, e);
                if (c.is_zero()) continue;
                MPoly h = h_from_ledger(below, e - s);
                if (ef && (s % 2 == 1)) h = -h;  // d_{u x} = (-1)^s d_{x u}
                acc += c * h;
            }
            p = std::move(acc);
            st.seq.erase(st.seq.begin() + k, st.seq.begin() + k + 2);
            st.vars.erase(st.vars.begin() + k, st.vars.begin() + k + 2);
            st.resweep();
            break;
        }
        case AtomKind::Bubble: {
            int g = a.pos;
            GlWeight mu = regions[g];
            p = p * bubble_value_from_section(a.cw, a.dots, a.i, mu, st.sweep.section[g]);
            break;
        }
    }
    p = normalize(std::move(p), st.vars, st.sweep);
}

} // namespace

std::vector<Alphabet> region_alphabets(const GlWeight& lambda, int d) {
    std::vector<Alphabet> out;
    int k = 0;
    for (int lj : lambda) {
        Alphabet a;
        for (int t = 0; t < lj; ++t) a.push_back(intern_var("z" + std::to_string(++k)));
        out.push_back(a);
    }
    return out;
}

MPoly bubble_value(bool cw, int r, int color, const GlWeight& lambda, int n, int d) {
    auto alph = region_alphabets(lambda, d);
    Section sec;
    sec.strand.resize(n);
    for (int j = 0; j < n; ++j) {
        sec.strand[j].thickness = (int)alph[j].size();
        sec.strand[j].e.resize(sec.strand[j].thickness + 1);
        for (int l = 0; l <= sec.strand[j].thickness; ++l)
            sec.strand[j].e[l] = elem_sym(l, alph[j]);
    }
    return bubble_value_from_section(cw, r, color, lambda, sec);
}

MPoly thick_bubble(bool cw, int m, const Partition& part, int color,
                   const GlWeight& lambda, int n, int d) {
    Partition q = part;
    q.resize(m, 0);
    int a = lambda[color - 1], b = lambda[color];
    std::vector<std::vector<MPoly>> mat(m, std::vector<MPoly>(m));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            int dots = cw ? q[s] + (t - s) + (a - b) - 1
                          : q[s] + (t - s) - (a - b) - 1;
            mat[s][t] = bubble_value(cw, dots, color, lambda, n, d);
        }
    std::function<MPoly(std::vector<int>&, int)> det =
        [&](std::vector<int>& rows, int col) -> MPoly {
        if (col == m) return MPoly(1);
        MPoly acc;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (mat[rows[r]][col].is_zero()) continue;
            std::vector<int> rest;
            for (size_t u = 0; u < rows.size(); ++u)
                if (u != r) rest.push_back(rows[u]);
            MPoly term = mat[rows[r]][col] * det(rest, col + 1);
            if (r % 2 == 1) term = -term;
            acc += term;
        }
        return acc;
    };
    std::vector<int> rows(m);
    for (int s = 0; s < m; ++s) rows[s] = s;
    return det(rows, 0);
}

EvaluatedMap eval_diagram(const DiagramWord& w) {
    EvaluatedMap out;
    out.n = w.n;
    out.d = w.d;
    out.src = w.source;
    out.tgt = w.target();
    if (w.is_zero_by_label() || w.coeff == 0) {
        out.zero = true;
        return out;
    }
    out.zero = false;

    GlWeight bottom_weight = w.source.target();
    auto bottom = region_alphabets(bottom_weight, w.d);

    EvalState st0;
    st0.n = w.n;
    st0.d = w.d;
    st0.lambda = w.source.lambda;
    st0.seq = w.source.seq;
    st0.bottom = bottom;
    for (size_t g = 0; g < st0.seq.size(); ++g) st0.vars.push_back(standard_source_var(g));
    st0.sweep = sweep_word(st0.n, st0.seq, st0.vars, bottom);
    out.src_bounds = st0.sweep.bounds;

    size_t basis = 1;
    for (int b : out.src_bounds) basis *= (size_t)b;

    // standardized target variable names
    std::vector<Var> std_tgt;

    for (size_t k = 0; k < basis; ++k) {
        // basis monomial in the source variables
        MPoly p(1);
        {
            size_t kk = k;
            for (size_t g = 0; g < out.src_bounds.size(); ++g) {
                int e = (int)(kk % out.src_bounds[g]);
                kk /= out.src_bounds[g];
                if (e) p *= MPoly::var(st0.vars[g], e);
            }
        }
        EvalState st = st0;
        for (const Atom& a : w.slices) apply_atom(st, a, p);
        if (std_tgt.empty()) {
            for (size_t g = 0; g < st.seq.size(); ++g)
                std_tgt.push_back(standard_target_var(g));
            out.tgt_bounds = st.sweep.bounds;
        }
        // simultaneous rename of final edge variables to the standard names
        for (size_t g = 0; g < st.vars.size(); ++g)
            p = p.subst(st.vars[g], MPoly::var(std_tgt[g]));
        if (!(w.coeff == 1)) p = w.coeff * p;
        out.images.push_back(std::move(p));
    }

    // homogeneity: polynomial-degree shift must be constant across the basis
    out.raw_degree.reset();
    for (size_t k = 0; k < basis; ++k) {
        const MPoly& img = out.images[k];
        if (img.is_zero()) continue;
        if (!img.is_homogeneous()) {
            out.raw_degree.reset();
            break;
        }
        int src_deg = 0;
        {
            size_t kk = k;
            for (size_t g = 0; g < out.src_bounds.size(); ++g) {
                src_deg += (int)(kk % out.src_bounds[g]);
                kk /= out.src_bounds[g];
            }
        }
        int shift = img.total_degree() - src_deg;
        if (!out.raw_degree) out.raw_degree = shift;
        else if (*out.raw_degree != shift) {
            out.raw_degree.reset();
            break;
        }
    }
    return out;
}

EvaluatedMap map_scale(const Rat& c, EvaluatedMap a) {
    if (a.zero) return a;
    if (is_zero(c)) {
        for (auto& img : a.images) img = MPoly();
        return a;
    }
    for (auto& img : a.images) img = c * img;
    return a;
}

EvaluatedMap map_add(const EvaluatedMap& a, const EvaluatedMap& b) {
    if (a.zero) return b;
    if (b.zero) return a;
    if (a.src_bounds != b.src_bounds || !(a.src.seq == b.src.seq) ||
        !(a.tgt.seq == b.tgt.seq) || a.src.lambda != b.src.lambda)
        throw std::invalid_argument("map_add: shape mismatch");
    EvaluatedMap r = a;
    for (size_t k = 0; k < r.images.size(); ++k) r.images[k] += b.images[k];
    if (a.raw_degree != b.raw_degree) r.raw_degree.reset();
    return r;
}

EvaluatedMap map_compose(const EvaluatedMap& second, const EvaluatedMap& first) {
    if (first.zero || second.zero) {
        EvaluatedMap r;
        r.zero = true;
        r.n = first.n;
        r.d = first.d;
        r.src = first.src;
        r.tgt = second.tgt;
        return r;
    }
    if (!(first.tgt.seq == second.src.seq))
        throw std::invalid_argument("map_compose: boundary mismatch");
    EvaluatedMap r;
    r.zero = false;
    r.n = first.n;
    r.d = first.d;
    r.src = first.src;
    r.tgt = second.tgt;
    r.src_bounds = first.src_bounds;
    r.tgt_bounds = second.tgt_bounds;
    // expand first's images in second's source basis: the mid variables are
    // the standardized t-variables with bounds second.src_bounds
    std::vector<Var> mid;
    for (size_t g = 0; g < second.src_bounds.size(); ++g)
        mid.push_back(standard_target_var(g));
    for (const MPoly& img : first.images) {
        // decompose img = sum over mid monomials of coefficient * monomial
        MPoly acc;
        std::function<void(const MPoly&, size_t, size_t)> walk =
            [&](const MPoly& cur, size_t g, size_t idx) {
            if (g == mid.size()) {
                // cur is free of mid variables: coefficient times image of idx
                if (!cur.is_zero()) acc += cur * second.images[idx];
                return;
            }
            int top = second.src_bounds[g];
            size_t stride = 1;
            for (size_t t = 0; t < g; ++t) stride *= (size_t)second.src_bounds[t];
            for (int e = 0; e < top; ++e)
                walk(cur.coeff_of(mid[g], e), g + 1, idx + stride * e);
        };
        walk(img, 0, 0);
        r.images.push_back(std::move(acc));
    }
    return r;
}

bool maps_equal(const EvaluatedMap& f, const EvaluatedMap& g, uint64_t panel_seed,
                int panel_size) {
    auto is_zero_map = [](const EvaluatedMap& m) {
        if (m.zero) return true;
        for (auto& img : m.images)
            if (!img.is_zero()) return false;
        return true;
    };
    if (f.zero || g.zero) return is_zero_map(f) && is_zero_map(g);
    if (f.src_bounds != g.src_bounds || !(f.src.seq == g.src.seq) ||
        !(f.tgt.seq == g.tgt.seq))
        return false;
    for (size_t k = 0; k < f.images.size(); ++k)
        if (!(f.images[k] == g.images[k])) return false;
    // random-point panel: tripwire only, the basis comparison is the proof
    std::mt19937_64 rng(panel_seed);
    for (int t = 0; t < panel_size; ++t) {
        std::map<Var, Rat> assign;
        auto value_at = [&](const MPoly& p) {
            Rat acc(0);
            for (auto& [mon, c] : p.terms()) {
                Rat v = c;
                for (auto& [var, e] : mon.exps) {
                    auto it = assign.find(var);
                    if (it == assign.end()) {
                        long num = (long)(rng() % 19) - 9;
                        long den = 1 + (long)(rng() % 4);
                        it = assign.emplace(var, rat(num == 0 ? 1 : num, den)).first;
                    }
                    for (int j = 0; j < e; ++j) v *= it->second;
                }
                acc += v;
            }
            return acc;
        };
        for (size_t k = 0; k < f.images.size(); ++k)
            if (value_at(f.images[k]) != value_at(g.images[k])) return false;
    }
    return true;
}

int one_morphism_shift(const OneMorphism& x) {
    int s = x.shift;
    GlWeight w = x.lambda;
    // letters applied right to left
    for (int g = (int)x.seq.size() - 1; g >= 0; --g) {
        const SLetter& L = x.seq[g];
        int i = L.color;
        int km1 = partial_sum(w, i - 1), ki = partial_sum(w, i), kp1 = partial_sum(w, i + 1);
        s += L.sign > 0 ? 1 + km1 + ki - kp1 : 1 - ki;
        w = apply_letter(w, L);
    }
    for (size_t g = 0; g < x.seq.size(); ++g)
        for (size_t h = g + 1; h < x.seq.size(); ++h)
            if (x.seq[g].color + 1 == x.seq[h].color)
                s += x.seq[g].sign * x.seq[h].sign;
    return s;
}

Var standard_source_var(size_t k) { return intern_var("s" + std::to_string(k + 1) + "!"); }
Var standard_target_var(size_t k) { return intern_var("t" + std::to_string(k + 1) + "!"); }

MPoly normalize_element(const OneMorphism& x, int n, int d, const MPoly& p,
                        bool target_names) {
    auto bottom = region_alphabets(x.target(), d);
    std::vector<Var> vars;
    for (size_t g = 0; g < x.seq.size(); ++g)
        vars.push_back(target_names ? standard_target_var(g) : standard_source_var(g));
    Sweep sw = sweep_word(n, x.seq, vars, bottom);
    return normalize(p, vars, sw);
}

MPoly apply_map_to(const EvaluatedMap& f, const MPoly& p0) {
    if (f.zero) return MPoly();
    MPoly p = normalize_element(f.src, f.n, f.d, p0, false);
    // expand over the source basis and push through the images
    std::vector<Var> vars;
    for (size_t g = 0; g < f.src_bounds.size(); ++g) vars.push_back(standard_source_var(g));
    MPoly acc;
    std::function<void(const MPoly&, size_t, size_t)> walk = [&](const MPoly& cur, size_t g,
                                                                 size_t idx) {
        if (g == vars.size()) {
            if (!cur.is_zero()) acc += cur * f.images[idx];
            return;
        }
        size_t stride = 1;
        for (size_t t = 0; t < g; ++t) stride *= (size_t)f.src_bounds[t];
        for (int e = 0; e < f.src_bounds[g]; ++e)
            walk(cur.coeff_of(vars[g], e), g + 1, idx + stride * e);
    };
    walk(p, 0, 0);
    return acc;
}

std::optional<EvaluatedMap> eval_lincomb(const LinComb& lc) {
    std::optional<EvaluatedMap> acc;
    for (auto& t : lc.terms) {
        EvaluatedMap m = map_scale(t.c, eval_diagram(t.w));
        if (!acc) acc = m;
        else acc = map_add(*acc, m);
    }
    return acc;
}

bool lincombs_equal(const LinComb& lhs, const LinComb& rhs, uint64_t panel_seed) {
    auto a = eval_lincomb(lhs);
    auto b = eval_lincomb(rhs);
    if (!a && !b) return true;
    if (!a) return maps_equal(*b, *b) && [&] {  // b must be the zero map
        for (auto& img : b->images)
            if (!img.is_zero()) return false;
        return true;
    }();
    if (!b) {
        if (a->zero) return true;
        for (auto& img : a->images)
            if (!img.is_zero()) return false;
        return true;
    }
    return maps_equal(*a, *b, panel_seed);
}

} // namespace schurcat
