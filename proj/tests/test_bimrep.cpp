#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurcat/bimrep.hpp"

#include <random>

using namespace schurcat;

namespace {
DiagramWord word(int n, int d, GlWeight lam, SignedSeq seq, std::vector<Atom> slices) {
    DiagramWord w;
    w.n = n;
    w.d = d;
    w.source.lambda = std::move(lam);
    w.source.seq = std::move(seq);
    w.slices = std::move(slices);
    return w;
}

bool is_zero_map(const EvaluatedMap& m) {
    if (m.zero) return true;
    for (auto& img : m.images)
        if (!img.is_zero()) return false;
    return true;
}

bool is_identity_map(const EvaluatedMap& m) {
    if (m.zero) return false;
    if (!(m.src.seq == m.tgt.seq)) return false;
    for (size_t k = 0; k < m.images.size(); ++k) {
        auto e = m.basis_exponents(k);
        MPoly expect(1);
        for (size_t g = 0; g < e.size(); ++g)
            if (e[g]) expect *= MPoly::var(standard_target_var(g), e[g]);
        if (!(m.images[k] == expect)) return false;
    }
    return true;
}
} // namespace

TEST_CASE("identity word evaluates to the identity map") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
        for (auto& lam : enumerate_lambda(n, d)) {
            for (int i = 1; i <= n - 1; ++i) {
                DiagramWord w = word(n, d, lam, {{+1, i}}, {});
                if (w.is_zero_by_label()) continue;
                EvaluatedMap m = eval_diagram(w);
                CHECK(is_identity_map(m));
                CHECK(m.raw_degree.value_or(99) == 0);
            }
        }
    }
}

TEST_CASE("dot multiplies by the edge variable") {
    DiagramWord w = word(2, 2, {1, 1}, {{+1, 1}}, {{AtomKind::DotUp, 1, 1, 0, 1}});
    EvaluatedMap m = eval_diagram(w);
    REQUIRE(!m.zero);
    CHECK(m.raw_degree.value_or(-1) == 1);
    // basis 1, x: images x, x^2 reduced by the bound-2 relation
    CHECK(m.src_bounds == std::vector<int>{2});
    CHECK(m.images[0] == MPoly::var(standard_target_var(0)));
}

TEST_CASE("zigzag identities") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        for (auto& lam : enumerate_lambda(n, d)) {
            for (int i = 1; i <= n - 1; ++i) {
                {
                    DiagramWord w = word(n, d, lam, {{+1, i}},
                                         {{AtomKind::CupEF, 1, i}, {AtomKind::CapFE, 1, i}});
                    DiagramWord idw = word(n, d, lam, {{+1, i}}, {});
                    CHECK(maps_equal(eval_diagram(w), eval_diagram(idw)));
                }
                {
                    DiagramWord w = word(n, d, lam, {{-1, i}},
                                         {{AtomKind::CupFE, 1, i}, {AtomKind::CapEF, 1, i}});
                    DiagramWord idw = word(n, d, lam, {{-1, i}}, {});
                    CHECK(maps_equal(eval_diagram(w), eval_diagram(idw)));
                }
                {
                    DiagramWord w = word(n, d, lam, {{+1, i}},
                                         {{AtomKind::CupFE, 0, i}, {AtomKind::CapEF, 2, i}});
                    DiagramWord idw = word(n, d, lam, {{+1, i}}, {});
                    CHECK(maps_equal(eval_diagram(w), eval_diagram(idw)));
                }
                {
                    DiagramWord w = word(n, d, lam, {{-1, i}},
                                         {{AtomKind::CupEF, 0, i}, {AtomKind::CapFE, 2, i}});
                    DiagramWord idw = word(n, d, lam, {{-1, i}}, {});
                    CHECK(maps_equal(eval_diagram(w), eval_diagram(idw)));
                }
            }
        }
    }
}

TEST_CASE("bubble values match literal diagrams and closed forms") {
    for (int dd = 1; dd <= 4; ++dd) {
        for (auto& lam : enumerate_lambda(2, dd)) {
            for (int r = 0; r <= 4; ++r) {
                DiagramWord lit = word(2, dd, lam, {}, {{AtomKind::CupFE, 0, 1}});
                if (r) lit.slices.push_back({AtomKind::DotUp, 1, 1, 0, r});
                lit.slices.push_back({AtomKind::CapFE, 1, 1});
                DiagramWord closed = word(2, dd, lam, {}, {});
                closed.slices.push_back({AtomKind::Bubble, 0, 1, 0, r, true});
                CHECK(maps_equal(eval_diagram(lit), eval_diagram(closed)));
            }
        }
    }
    // degree zero values
    {
        MPoly v = bubble_value(true, 0, 1, {1, 0}, 2, 1);  // bar = 1: r = a-b-1 = 0
        CHECK(v == MPoly(1));  // (-1)^b with b = 0
        MPoly w = bubble_value(false, 0, 1, {0, 1}, 2, 1);  // bar = -1: r = b-a-1 = 0
        CHECK(w == MPoly(1));  // (-1)^{b+1} with b = 1
    }
    // sub-threshold bubbles vanish
    CHECK(bubble_value(true, 0, 1, {2, 0}, 2, 2).is_zero());
    CHECK(bubble_value(false, 0, 1, {0, 2}, 2, 2).is_zero());
}

TEST_CASE("nilHecke double crossing is zero") {
    for (auto& lam : enumerate_lambda(2, 2)) {
        DiagramWord w = word(2, 2, lam, {{+1, 1}, {+1, 1}},
                             {{AtomKind::CrossUU, 1, 1, 1}, {AtomKind::CrossUU, 1, 1, 1}});
        CHECK(is_zero_map(eval_diagram(w)));
    }
}

TEST_CASE("functoriality of vertical composition") {
    DiagramWord bottom = word(2, 2, {1, 1}, {{+1, 1}}, {{AtomKind::CupEF, 1, 1}});
    DiagramWord top = word(2, 2, {1, 1}, bottom.target().seq, {{AtomKind::CapFE, 1, 1}});
    top.source = bottom.target();
    EvaluatedMap composed = eval_diagram(compose_v(bottom, top));
    EvaluatedMap stacked = map_compose(eval_diagram(top), eval_diagram(bottom));
    CHECK(maps_equal(composed, stacked));
}

TEST_CASE("thick bubbles") {
    // m=1, beta=(0): the degree-zero bubble value (-1)^b
    for (auto& lam : enumerate_lambda(2, 2)) {
        MPoly v = thick_bubble(true, 1, {}, 1, lam, 2, 2);
        MPoly w = bubble_value(true, lam[0] - lam[1] - 1, 1, lam, 2, 2);
        CHECK(v == w);
    }
    // beta=(b+1) with a=0 vanishes
    CHECK(thick_bubble(true, 1, {2}, 1, {0, 1}, 2, 1).is_zero());
}

TEST_CASE("bubble values are supersymmetric") {
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; a + b <= 3; ++b) {
            if (a + b == 0) continue;
            GlWeight lam{a, b};
            auto alph = region_alphabets(lam, a + b);
            SuperPair p{alph[0], alph[1]};
            for (int r = -2; r <= 3; ++r) {
                CHECK(is_supersymmetric(bubble_value(true, r, 1, lam, 2, a + b), p));
                CHECK(is_supersymmetric(bubble_value(false, r, 1, lam, 2, a + b), p));
            }
        }
    }
}

TEST_CASE("relation suite at (2,1)") {
    Report r = relation_suite(2, 1);
    INFO(r.summary());
    CHECK(r.all_ok());
}

TEST_CASE("functoriality on a randomized corpus of composable pairs") {
    std::mt19937_64 rng(2024);
    int n = 3, d = 3;
    int done = 0;
    for (int trial = 0; trial < 200 && done < 25; ++trial) {
        auto lams = enumerate_lambda(n, d);
        GlWeight lam = lams[rng() % lams.size()];
        // random source sequence of length <= 3
        SignedSeq seq;
        int len = 1 + (int)(rng() % 2);
        for (int t = 0; t < len; ++t)
            seq.push_back(SLetter{rng() % 2 ? +1 : -1, 1 + (int)(rng() % (n - 1))});
        // random slices: dots and generic crossings and cups
        auto rand_word = [&](const SignedSeq& src) {
            DiagramWord w;
            w.n = n;
            w.d = d;
            w.source.lambda = lam;
            w.source.seq = src;
            SignedSeq cur = src;
            int steps = 1 + (int)(rng() % 2);
            for (int s = 0; s < steps; ++s) {
                int kind = (int)(rng() % 3);
                if (kind == 0 && !cur.empty()) {
                    int p = 1 + (int)(rng() % cur.size());
                    w.slices.push_back(Atom{cur[p - 1].sign > 0 ? AtomKind::DotUp
                                                                 : AtomKind::DotDown,
                                            p, cur[p - 1].color, 0, 1 + (int)(rng() % 2)});
                } else if (kind == 1 && cur.size() >= 2) {
                    int p = 1 + (int)(rng() % (cur.size() - 1));
                    const SLetter& L = cur[p - 1];
                    const SLetter& R = cur[p];
                    AtomKind ak = L.sign > 0 && R.sign > 0   ? AtomKind::CrossUU
                                  : L.sign < 0 && R.sign < 0 ? AtomKind::CrossDD
                                  : L.sign > 0               ? AtomKind::CrossLR
                                                             : AtomKind::CrossRL;
                    w.slices.push_back(Atom{ak, p, L.color, R.color});
                    std::swap(cur[p - 1], cur[p]);
                } else {
                    int g = (int)(rng() % (cur.size() + 1));
                    int i = 1 + (int)(rng() % (n - 1));
                    bool ef = rng() % 2;
                    w.slices.push_back(Atom{ef ? AtomKind::CupEF : AtomKind::CupFE, g, i});
                    SignedSeq ins = ef ? SignedSeq{{-1, i}, {+1, i}} : SignedSeq{{+1, i}, {-1, i}};
                    cur.insert(cur.begin() + g, ins.begin(), ins.end());
                }
            }
            return w;
        };
        DiagramWord bottom = rand_word(seq);
        DiagramWord top = rand_word(bottom.target().seq);
        top.source = bottom.target();
        EvaluatedMap mb = eval_diagram(bottom);
        EvaluatedMap mt = eval_diagram(top);
        EvaluatedMap composed = eval_diagram(compose_v(bottom, top));
        if (mb.zero || mt.zero || composed.zero) continue;
        CHECK(maps_equal(composed, map_compose(mt, mb)));
        ++done;
    }
    CHECK(done >= 25);
}
