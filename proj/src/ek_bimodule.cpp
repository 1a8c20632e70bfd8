// Elias-Khovanov style bimodule maps on Bott-Samelson tensor products,
// used as the independent oracle for the Soergel functor.

#include "schurcat/ek_bimodule.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace schurcat {

namespace {

Var xv(int i) { return intern_var("x" + std::to_string(i)); }

/// p = a + x_c b with a, b invariant under swapping x_c, x_{c+1}
std::pair<MPoly, MPoly> sinv_decompose(const MPoly& p, int c) {
    MPoly db = divided_diff(p, xv(c), xv(c + 1));
    MPoly a = p - MPoly::var(xv(c)) * db;
    return {a, db};
}

} // namespace

BSElement BSElement::unit(int n, std::vector<int> word) {
    BSElement e;
    e.n = n;
    e.word = std::move(word);
    e.comp.assign((size_t)1 << e.word.size(), MPoly());
    e.comp[0] = MPoly(1);
    return e;
}

bool BSElement::is_zero() const {
    for (auto& c : comp)
        if (!c.is_zero()) return false;
    return true;
}

BSElement& BSElement::operator+=(const BSElement& o) {
    if (word != o.word) throw std::invalid_argument("BSElement: word mismatch");
    for (size_t k = 0; k < comp.size(); ++k) comp[k] += o.comp[k];
    return *this;
}

BSElement operator-(BSElement a) {
    for (auto& c : a.comp) c = -c;
    return a;
}

bool BSElement::operator==(const BSElement& o) const {
    if (word != o.word) return false;
    for (size_t k = 0; k < comp.size(); ++k)
        if (!(comp[k] == o.comp[k])) return false;
    return true;
}

BSElement slot_multiply(const BSElement& e, int slot, const MPoly& f) {
    // multiply the content of tensor slot `slot` by f and push left again;
    // slot t means between (x)_{R^{c_t}} and (x)_{R^{c_{t+1}}}, slot 0 the
    // leftmost.
    int t = (int)e.word.size();
    BSElement out = e;
    for (auto& c : out.comp) c = MPoly();
    for (size_t mask = 0; mask < e.comp.size(); ++mask) {
        if (e.comp[mask].is_zero()) continue;
        // rebuild: coefficient sits at slot 0; walk it right to `slot`,
        // multiply, then renormalize leftward.
        // Representation trick: treat the element as the list of slot
        // contents f_0, m_1, ..., m_t with m_k = x_{c_k}^{eps_k}.
        std::vector<MPoly> slots(t + 1, MPoly(1));
        slots[0] = e.comp[mask];
        for (int k = 1; k <= t; ++k)
            if (mask & ((size_t)1 << (k - 1))) slots[k] = MPoly::var(xv(e.word[k - 1]));
        slots[slot] *= f;
        // normalize right-to-left
        for (int k = t; k >= 1; --k) {
            auto [a, b] = sinv_decompose(slots[k], e.word[k - 1]);
            // slots[k] = a + x_c b with a,b crossing the k-th tensor
            // contribute: two branches
            if (!b.is_zero()) {
                std::vector<MPoly> branch = slots;
                branch[k] = MPoly::var(xv(e.word[k - 1]));
                branch[k - 1] = branch[k - 1] * b;
                // recurse on the branch by pushing it through the same loop:
                // handled by queuing below
                // (a-branch continues in place)
                // queue processing implemented iteratively below instead
                branch.swap(slots);  // placeholder, replaced by queue version
                branch.swap(slots);
            }
            (void)a;
        }
        // The in-place loop above is awkward; use an explicit queue.
        std::vector<std::vector<MPoly>> queue{};
        {
            std::vector<MPoly> s0(t + 1, MPoly(1));
            s0[0] = e.comp[mask];
            for (int k = 1; k <= t; ++k)
                if (mask & ((size_t)1 << (k - 1))) s0[k] = MPoly::var(xv(e.word[k - 1]));
            s0[slot] *= f;
            queue.push_back(std::move(s0));
        }
        for (int k = t; k >= 1; --k) {
            std::vector<std::vector<MPoly>> next;
            for (auto& s : queue) {
                auto [a, b] = sinv_decompose(s[k], e.word[k - 1]);
                if (!a.is_zero()) {
                    auto sa = s;
                    sa[k] = MPoly(1);
                    sa[k - 1] = sa[k - 1] * a;
                    next.push_back(std::move(sa));
                }
                if (!b.is_zero()) {
                    auto sb = s;
                    sb[k] = MPoly::var(xv(e.word[k - 1]));
                    sb[k - 1] = sb[k - 1] * b;
                    next.push_back(std::move(sb));
                }
            }
            queue = std::move(next);
        }
        for (auto& s : queue) {
            size_t outmask = 0;
            for (int k = 1; k <= t; ++k)
                if (!(s[k] == MPoly(1))) outmask |= ((size_t)1 << (k - 1));
            out.comp[outmask] += s[0];
        }
    }
    return out;
}

BSElement EKMap::apply(const BSElement& e) const {
    if (e.word != src) throw std::invalid_argument("EKMap::apply: word mismatch");
    BSElement out = BSElement::unit(n, tgt);
    for (auto& c : out.comp) c = MPoly();
    for (size_t mask = 0; mask < e.comp.size(); ++mask) {
        if (e.comp[mask].is_zero()) continue;
        BSElement img = images[mask];
        for (auto& c : img.comp) c = e.comp[mask] * c;
        out += img;
    }
    return out;
}

EKMap ek_identity(int n, std::vector<int> word) {
    EKMap m;
    m.n = n;
    m.src = word;
    m.tgt = word;
    size_t t = word.size();
    for (size_t mask = 0; mask < ((size_t)1 << t); ++mask) {
        BSElement e = BSElement::unit(n, word);
        e.comp[0] = MPoly();
        e.comp[mask] = MPoly(1);
        m.images.push_back(e);
    }
    return m;
}

EKMap ek_compose(const EKMap& second, const EKMap& first) {
    if (first.tgt != second.src) throw std::invalid_argument("ek_compose: mismatch");
    EKMap m;
    m.n = first.n;
    m.src = first.src;
    m.tgt = second.tgt;
    for (auto& img : first.images) m.images.push_back(second.apply(img));
    return m;
}

EKMap ek_add(const EKMap& a, const EKMap& b) {
    if (a.src != b.src || a.tgt != b.tgt) throw std::invalid_argument("ek_add: mismatch");
    EKMap m = a;
    for (size_t k = 0; k < m.images.size(); ++k) m.images[k] += b.images[k];
    return m;
}

EKMap ek_scale(const Rat& c, EKMap a) {
    for (auto& img : a.images)
        for (auto& comp : img.comp) comp = c * comp;
    return a;
}

bool ek_equal(const EKMap& a, const EKMap& b) {
    if (a.src != b.src || a.tgt != b.tgt || a.images.size() != b.images.size()) return false;
    for (size_t k = 0; k < a.images.size(); ++k)
        if (!(a.images[k] == b.images[k])) return false;
    return true;
}

EKMap ek_tensor(const EKMap& left, const EKMap& right) {
    EKMap m;
    m.n = left.n;
    m.src = left.src;
    m.src.insert(m.src.end(), right.src.begin(), right.src.end());
    m.tgt = left.tgt;
    m.tgt.insert(m.tgt.end(), right.tgt.begin(), right.tgt.end());
    size_t tl = left.src.size(), tr = right.src.size();
    for (size_t mask = 0; mask < ((size_t)1 << (tl + tr)); ++mask) {
        size_t ml = mask & (((size_t)1 << tl) - 1);
        size_t mr = mask >> tl;
        const BSElement& il = left.images[ml];
        const BSElement& ir = right.images[mr];
        // concatenate: (sum g (x) ...) (x) (sum h (x) ...): the right block's
        // left coefficient h must travel across the left block's tensors;
        // build by slot multiplication on the concatenated word.
        BSElement acc = BSElement::unit(m.n, m.tgt);
        for (auto& c : acc.comp) c = MPoly();
        size_t wl = left.tgt.size();
        for (size_t a2 = 0; a2 < il.comp.size(); ++a2) {
            if (il.comp[a2].is_zero()) continue;
            for (size_t b2 = 0; b2 < ir.comp.size(); ++b2) {
                if (ir.comp[b2].is_zero()) continue;
                // start with the concatenated monomial, multiply slot wl by
                // the right coefficient, then push left
                BSElement e = BSElement::unit(m.n, m.tgt);
                e.comp[0] = MPoly();
                e.comp[a2 | (b2 << wl)] = il.comp[a2];
                e = slot_multiply(e, (int)wl, ir.comp[b2]);
                acc += e;
            }
        }
        m.images.push_back(acc);
    }
    return m;
}

EKMap ek_enddot(int n, int i) {
    EKMap m;
    m.n = n;
    m.src = {i};
    m.tgt = {};
    BSElement one = BSElement::unit(n, {});
    m.images.push_back(one);  // 1 (x) 1 -> 1
    BSElement xs = one;
    xs.comp[0] = MPoly::var(xv(i));
    m.images.push_back(xs);  // 1 (x) x_i -> x_i
    return m;
}

EKMap ek_startdot(int n, int i) {
    // 1 -> (alpha_i (x) 1 + 1 (x) alpha_i)/2 with alpha_i = x_{i+1} - x_i
    EKMap m;
    m.n = n;
    m.src = {};
    m.tgt = {i};
    MPoly alpha = MPoly::var(xv(i + 1)) - MPoly::var(xv(i));
    BSElement img = BSElement::unit(n, {i});
    img.comp[0] = MPoly();
    // alpha (x) 1 / 2
    img.comp[0] += rat(1, 2) * alpha;
    // 1 (x) alpha / 2 = (x_{i+1} (x) 1 - 1 (x) x_i)/2; push x_{i+1} left:
    // 1 (x) alpha: decompose alpha over R^{s_i}: alpha = a + x_i b
    {
        BSElement t = BSElement::unit(n, {i});
        t.comp[0] = rat(1, 2);
        t = slot_multiply(t, 1, alpha);
        img += t;
    }
    m.images.push_back(img);
    return m;
}

EKMap ek_merge(int n, int i) {
    // f (x) g (x) h -> f d_i(g) (x) h with d_i = d_{x_{i+1} x_i}, matching
    // alpha_i = x_{i+1} - x_i
    EKMap m;
    m.n = n;
    m.src = {i, i};
    m.tgt = {i};
    for (size_t mask = 0; mask < 4; ++mask) {
        MPoly g = (mask & 1) ? MPoly::var(xv(i)) : MPoly(1);
        MPoly h = (mask & 2) ? MPoly::var(xv(i)) : MPoly(1);
        MPoly dg = divided_diff(g, xv(i + 1), xv(i));
        BSElement img = BSElement::unit(n, {i});
        img.comp[0] = MPoly();
        if (!dg.is_zero()) {
            BSElement t = BSElement::unit(n, {i});
            t.comp[0] = dg;
            t = slot_multiply(t, 1, h);
            img += t;
        }
        m.images.push_back(img);
    }
    return m;
}

EKMap ek_split(int n, int i) {
    // f (x) g -> f (x) 1 (x) g
    EKMap m;
    m.n = n;
    m.src = {i};
    m.tgt = {i, i};
    for (size_t mask = 0; mask < 2; ++mask) {
        BSElement img = BSElement::unit(n, {i, i});
        img.comp[0] = MPoly();
        img.comp[mask ? 2 : 0] = MPoly(1);  // 1 (x) 1 (x) g
        m.images.push_back(img);
    }
    return m;
}

EKMap ek_fourvertex(int n, int i, int j) {
    // B_i B_j -> B_j B_i for distant colors: each color's content travels
    // with its own factor, so the basis masks swap
    EKMap m;
    m.n = n;
    m.src = {i, j};
    m.tgt = {j, i};
    for (size_t mask = 0; mask < 4; ++mask) {
        size_t swapped = ((mask & 1) << 1) | ((mask >> 1) & 1);
        BSElement img = BSElement::unit(n, {j, i});
        img.comp[0] = MPoly();
        img.comp[swapped] = MPoly(1);
        m.images.push_back(img);
    }
    return m;
}

EKMap ek_box(int n, const std::vector<int>& word, int slot, const MPoly& boxpoly) {
    // box polynomial evaluated at box_i -> -x_i, multiplied into the slot
    MPoly f = boxpoly;
    for (int i = 1; i <= n; ++i) {
        Var b = box_var(i);
        if (f.depends_on(b)) f = f.subst(b, -MPoly::var(xv(i)));
    }
    EKMap m = ek_identity(n, word);
    for (auto& img : m.images) img = slot_multiply(img, slot, f);
    return m;
}

std::optional<EKMap> ek_sixvertex(int n, int i, int j) {
    // Solve for the degree-zero bimodule maps B_i B_j B_i -> B_j B_i B_j.
    // A map is determined by the images of the 8 left-basis generators
    // 1 (x) x^eps (x) 1; left-linearity is built in, right-linearity over
    // every x_k is imposed as linear constraints.  The solution space must
    // be one-dimensional.
    std::vector<int> src{i, j, i}, tgt{j, i, j};
    auto deg_of_mask = [&](size_t mask) {
        int t = 0;
        for (int b = 0; b < 3; ++b)
            if (mask & ((size_t)1 << b)) ++t;
        return t;
    };
    // unknowns: for src mask e, tgt mask e', a polynomial of degree
    // deg(e) - deg(e') in n variables; enumerate monomials
    struct Unknown {
        size_t srcmask, tgtmask;
        Monomial mon;
    };
    std::vector<Unknown> unknowns;
    std::function<void(int, int, int, Monomial&, std::vector<Monomial>&)> monrec =
        [&](int v, int rem, int maxv, Monomial& cur, std::vector<Monomial>& sink) {
        if (v > maxv) {
            if (rem == 0) sink.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            if (e) cur.exps.push_back({xv(v), e});
            monrec(v + 1, rem - e, maxv, cur, sink);
            if (e) cur.exps.pop_back();
        }
    };
    auto monomials_of_degree = [&](int t) {
        std::vector<Monomial> sink;
        Monomial cur;
        monrec(1, t, n, cur, sink);
        return sink;
    };
    for (size_t e = 0; e < 8; ++e)
        for (size_t e2 = 0; e2 < 8; ++e2) {
            int t = deg_of_mask(e) - deg_of_mask(e2);
            if (t < 0) continue;
            for (auto& mon : monomials_of_degree(t)) unknowns.push_back({e, e2, mon});
        }

    // build the right-linearity constraints: for each generator mask e and
    // each variable x_k:  psi(gen_e * x_k) = psi(gen_e) * x_k.
    // Both sides are linear in the unknowns; collect coefficients.
    // Representation of a linear expression: map from (tgtmask, monomial of
    // the coefficient) to a rational linear combination of unknowns.
    struct LinExpr {
        // key: (tgtmask, monomial); value: coefficients per unknown index
        std::map<std::pair<size_t, Monomial>, std::map<size_t, Rat>> entries;
        void add(size_t tgtmask, const Monomial& mon, size_t unknown, const Rat& c) {
            entries[{tgtmask, mon}][unknown] += c;
        }
    };

    auto psi_of_element = [&](const BSElement& el) {
        // el is an element of the SOURCE word; psi(el) as a LinExpr
        LinExpr out;
        for (size_t mask = 0; mask < el.comp.size(); ++mask) {
            const MPoly& g = el.comp[mask];
            if (g.is_zero()) continue;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                if (unknowns[u].srcmask != mask) continue;
                // contribution g * mon (x) x^tgtmask
                MPoly gm = g;
                {
                    MPoly monp;
                    monp.add_term(unknowns[u].mon, Rat(1));
                    gm = gm * monp;
                }
                for (auto& [mm, cc] : gm.terms()) out.add(unknowns[u].tgtmask, mm, u, cc);
            }
        }
        return out;
    };

    std::vector<std::map<size_t, Rat>> rows;  // homogeneous constraints
    for (size_t e = 0; e < 8; ++e) {
        BSElement gen = BSElement::unit(n, src);
        gen.comp[0] = MPoly();
        gen.comp[e] = MPoly(1);
        for (int k = 1; k <= n; ++k) {
            BSElement lhs_el = slot_multiply(gen, 3, MPoly::var(xv(k)));
            LinExpr lhs = psi_of_element(lhs_el);
            // rhs: psi(gen) * x_k: multiply each unknown's target basis
            // element by x_k in the last slot
            LinExpr rhs;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                if (unknowns[u].srcmask != e) continue;
                BSElement t = BSElement::unit(n, tgt);
                t.comp[0] = MPoly();
                MPoly monp;
                monp.add_term(unknowns[u].mon, Rat(1));
                t.comp[unknowns[u].tgtmask] = monp;
                t = slot_multiply(t, 3, MPoly::var(xv(k)));
                for (size_t mask2 = 0; mask2 < t.comp.size(); ++mask2)
                    for (auto& [mm, cc] : t.comp[mask2].terms())
                        rhs.add(mask2, mm, u, cc);
            }
            // constraint lhs - rhs = 0 per (tgtmask, monomial)
            std::map<std::pair<size_t, Monomial>, std::map<size_t, Rat>> all = lhs.entries;
            for (auto& [key, m2] : rhs.entries)
                for (auto& [u, c] : m2) all[key][u] -= c;
            for (auto& [key, m2] : all) {
                std::map<size_t, Rat> row;
                for (auto& [u, c] : m2)
                    if (!is_zero(c)) row[u] = c;
                if (!row.empty()) rows.push_back(row);
            }
        }
    }

    // solve the homogeneous system; expect a one-dimensional kernel
    size_t U = unknowns.size();
    std::vector<std::vector<Rat>> M;
    for (auto& row : rows) {
        std::vector<Rat> r(U, Rat(0));
        for (auto& [u, c] : row) r[u] = c;
        M.push_back(std::move(r));
    }
    // gaussian elimination
    size_t rank = 0;
    std::vector<int> pivot_of_col(U, -1);
    for (size_t c = 0; c < U && rank < M.size(); ++c) {
        size_t piv = rank;
        while (piv < M.size() && is_zero(M[piv][c])) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[rank]);
        Rat inv = Rat(1) / M[rank][c];
        for (size_t t = c; t < U; ++t) M[rank][t] *= inv;
        for (size_t r2 = 0; r2 < M.size(); ++r2) {
            if (r2 == rank || is_zero(M[r2][c])) continue;
            Rat f = M[r2][c];
            for (size_t t = c; t < U; ++t) M[r2][t] -= f * M[rank][t];
        }
        pivot_of_col[c] = (int)rank;
        ++rank;
    }
    if (U - rank != 1) return std::nullopt;
    // kernel vector: set the free variable to 1
    std::vector<Rat> sol(U, Rat(0));
    size_t free_col = 0;
    for (size_t c = 0; c < U; ++c)
        if (pivot_of_col[c] < 0) { free_col = c; break; }
    sol[free_col] = Rat(1);
    for (size_t c = 0; c < U; ++c) {
        if (pivot_of_col[c] < 0) continue;
        sol[c] = -M[pivot_of_col[c]][free_col];
    }
    // normalize: the coefficient of (srcmask=0 -> tgtmask=0, monomial 1)
    Rat norm(0);
    for (size_t u = 0; u < U; ++u)
        if (unknowns[u].srcmask == 0 && unknowns[u].tgtmask == 0 &&
            unknowns[u].mon.exps.empty())
            norm += sol[u];
    if (is_zero(norm)) return std::nullopt;
    for (auto& c : sol) c /= norm;

    EKMap m;
    m.n = n;
    m.src = src;
    m.tgt = tgt;
    for (size_t e = 0; e < 8; ++e) {
        BSElement img = BSElement::unit(n, tgt);
        img.comp[0] = MPoly();
        for (size_t u = 0; u < U; ++u) {
            if (unknowns[u].srcmask != e || is_zero(sol[u])) continue;
            MPoly monp;
            monp.add_term(unknowns[u].mon, sol[u]);
            img.comp[unknowns[u].tgtmask] += monp;
        }
        m.images.push_back(img);
    }
    return m;
}

std::optional<EKMap> ek_functor(const SoergelWord& w, int n) {
    auto bds = w.boundaries();
    EKMap cur = ek_identity(n, std::vector<int>(bds[0].begin(), bds[0].end()));
    for (size_t s = 0; s < w.slices.size(); ++s) {
        const SoergelAtom& a = w.slices[s];
        const SoergelObject& below = bds[s];
        int from = a.bottom_arity() == 0 ? a.pos : a.pos - 1;
        std::vector<int> leftw(below.begin(), below.begin() + from);
        std::vector<int> rightw(below.begin() + from + a.bottom_arity(), below.end());
        EKMap mid;
        switch (a.kind) {
            case SoergelKind::EndDot: mid = ek_enddot(n, a.i); break;
            case SoergelKind::StartDot: mid = ek_startdot(n, a.i); break;
            case SoergelKind::Merge: mid = ek_merge(n, a.i); break;
            case SoergelKind::Split: mid = ek_split(n, a.i); break;
            case SoergelKind::FourVertex: mid = ek_fourvertex(n, a.i, a.j); break;
            case SoergelKind::SixVertexU: {
                auto sv = ek_sixvertex(n, a.j, a.i);  // (j,i,j) -> (i,j,i) with j=i+1
                if (!sv) return std::nullopt;
                mid = *sv;
                break;
            }
            case SoergelKind::SixVertexD: {
                auto sv = ek_sixvertex(n, a.i, a.j);
                if (!sv) return std::nullopt;
                mid = *sv;
                break;
            }
            case SoergelKind::Box: {
                std::vector<int> word(below.begin(), below.end());
                cur = ek_compose(ek_box(n, word, a.pos, a.box), cur);
                continue;
            }
        }
        EKMap step = ek_tensor(ek_tensor(ek_identity(n, leftw), mid), ek_identity(n, rightw));
        cur = ek_compose(step, cur);
    }
    if (!(w.coeff == 1)) cur = ek_scale(w.coeff, cur);
    return cur;
}

} // namespace schurcat
