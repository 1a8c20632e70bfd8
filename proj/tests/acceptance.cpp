// Acceptance suite: every criterion runs at its stated parameters with exact
// arithmetic and prints one pass/fail line.  Run with no arguments for all
// criteria, or with a single number to run one.

#include "schurcat/bimrep.hpp"
#include "schurcat/ek_bimodule.hpp"
#include "schurcat/laurent.hpp"
#include "schurcat/qschur.hpp"
#include "schurcat/soergel.hpp"
#include "schurcat/supersym.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace schurcat;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& run) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name << " ("
       << std::fixed;
    os.precision(2);
    os << secs << "s)";
    if (!detail.empty()) os << " -- " << detail;
    std::cout << os.str() << std::endl;
    if (!ok) ++failures;
}

DiagramWord word(int n, int d, GlWeight lam, SignedSeq seq, std::vector<Atom> slices) {
    DiagramWord w;
    w.n = n;
    w.d = d;
    w.source.lambda = std::move(lam);
    w.source.seq = std::move(seq);
    w.slices = std::move(slices);
    return w;
}

bool c1_dimensions(std::string& detail) {
    bool ok = true;
    for (auto [n, d] : std::vector<std::pair<int, int>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {2, 4}}) {
        long got = schur_dimension(n, d);  // throws if the two routes disagree
        if (got != binom_long(n * n + d - 1, d)) ok = false;
    }
    if (schur_dimension(2, 2) != 10) ok = false;
    // The formula binom(n^2+d-1, d) gives binom(10,2) = 45 at (3,2), and the
    // independent SSYT route confirms 45 (6^2 + 3^2 over the two dominant
    // weights); both routes are asserted equal above.
    if (schur_dimension(3, 2) != 45) ok = false;
    detail = "dim S(2,2) = 10, dim S(3,2) = 45, both routes agree on all cases";
    return ok;
}

bool c2_presentation(std::string& detail) {
    bool ok = true;
    std::string bad;
    for (auto [n, d] : std::vector<std::pair<int, int>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        Report r = check_schur_presentation(n, d);
        if (!r.all_ok()) {
            ok = false;
            bad += " (" + std::to_string(n) + "," + std::to_string(d) + ")";
        }
    }
    if (!ok) detail = "failing at" + bad;
    return ok;
}

bool c3_hecke(std::string& detail) {
    bool ok = true;
    for (int d : {2, 3})
        if (!check_hecke(d, d).all_ok()) ok = false;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 2}}) {
        Report r = sigma_check(n, d);
        if (!r.all_ok()) {
            ok = false;
            detail += r.summary();
        }
    }
    return ok;
}

bool c4_tau(std::string& detail) {
    bool ok = true;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        Report r = tau_check(n, d);
        if (!r.all_ok()) {
            ok = false;
            detail += r.summary();
        }
    }
    return ok;
}

bool c5_degree_coherence(std::string& detail) {
    // every generator atom's polynomial-degree shift matches its table
    // degree after the internal shift normalization
    int checked = 0, bad = 0;
    for (int n = 2; n <= 3; ++n) {
        for (int d = 1; d <= 3; ++d) {
            for (auto& lam : enumerate_lambda(n, d)) {
                std::vector<DiagramWord> atoms;
                for (int i = 1; i <= n - 1; ++i) {
                    atoms.push_back(word(n, d, lam, {{+1, i}}, {{AtomKind::DotUp, 1, i, 0, 1}}));
                    atoms.push_back(word(n, d, lam, {{-1, i}}, {{AtomKind::DotDown, 1, i, 0, 1}}));
                    atoms.push_back(word(n, d, lam, {}, {{AtomKind::CupEF, 0, i}}));
                    atoms.push_back(word(n, d, lam, {}, {{AtomKind::CupFE, 0, i}}));
                    atoms.push_back(word(n, d, lam, {{-1, i}, {+1, i}}, {{AtomKind::CapEF, 1, i}}));
                    atoms.push_back(word(n, d, lam, {{+1, i}, {-1, i}}, {{AtomKind::CapFE, 1, i}}));
                    for (int j = 1; j <= n - 1; ++j) {
                        atoms.push_back(word(n, d, lam, {{+1, i}, {+1, j}},
                                             {{AtomKind::CrossUU, 1, i, j}}));
                        atoms.push_back(word(n, d, lam, {{-1, i}, {-1, j}},
                                             {{AtomKind::CrossDD, 1, i, j}}));
                        atoms.push_back(word(n, d, lam, {{+1, i}, {-1, j}},
                                             {{AtomKind::CrossLR, 1, i, j}}));
                        atoms.push_back(word(n, d, lam, {{-1, i}, {+1, j}},
                                             {{AtomKind::CrossRL, 1, i, j}}));
                    }
                }
                for (auto& w : atoms) {
                    EvaluatedMap m = eval_diagram(w);
                    if (m.zero) continue;
                    bool all_zero = true;
                    for (auto& img : m.images)
                        if (!img.is_zero()) all_zero = false;
                    if (all_zero) continue;
                    ++checked;
                    if (!m.raw_degree) {
                        ++bad;
                        continue;
                    }
                    // the atom's table degree enters through the target shift
                    // field; paper degrees are twice the polynomial degrees
                    int expect = one_morphism_shift(w.source) - one_morphism_shift(w.target());
                    if (expect % 2 != 0 || *m.raw_degree != expect / 2) ++bad;
                }
            }
        }
    }
    detail = std::to_string(checked) + " generator instances";
    return bad == 0 && checked > 0;
}

bool c6_zigzag(std::string& detail) {
    int checked = 0, bad = 0;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        for (auto& lam : enumerate_lambda(n, d)) {
            for (int i = 1; i <= n - 1; ++i) {
                std::vector<std::pair<DiagramWord, DiagramWord>> pairs;
                pairs.push_back({word(n, d, lam, {{+1, i}},
                                      {{AtomKind::CupEF, 1, i}, {AtomKind::CapFE, 1, i}}),
                                 word(n, d, lam, {{+1, i}}, {})});
                pairs.push_back({word(n, d, lam, {{-1, i}},
                                      {{AtomKind::CupFE, 1, i}, {AtomKind::CapEF, 1, i}}),
                                 word(n, d, lam, {{-1, i}}, {})});
                pairs.push_back({word(n, d, lam, {{+1, i}},
                                      {{AtomKind::CupFE, 0, i}, {AtomKind::CapEF, 2, i}}),
                                 word(n, d, lam, {{+1, i}}, {})});
                pairs.push_back({word(n, d, lam, {{-1, i}},
                                      {{AtomKind::CupEF, 0, i}, {AtomKind::CapFE, 2, i}}),
                                 word(n, d, lam, {{-1, i}}, {})});
                for (auto& [lhs, rhs] : pairs) {
                    ++checked;
                    if (!maps_equal(eval_diagram(lhs), eval_diagram(rhs))) ++bad;
                }
            }
        }
    }
    detail = std::to_string(checked) + " zigzag instances";
    return bad == 0;
}

bool c7_bubbles(std::string& detail) {
    int bad = 0;
    for (int d = 1; d <= 4; ++d) {
        for (auto& lam : enumerate_lambda(2, d)) {
            for (int r = 0; r <= 4; ++r) {
                // clockwise literal vs closed form
                DiagramWord lit = word(2, d, lam, {}, {{AtomKind::CupFE, 0, 1}});
                if (r) lit.slices.push_back({AtomKind::DotUp, 1, 1, 0, r});
                lit.slices.push_back({AtomKind::CapFE, 1, 1});
                DiagramWord cf = word(2, d, lam, {}, {{AtomKind::Bubble, 0, 1, 0, r, true}});
                if (!maps_equal(eval_diagram(lit), eval_diagram(cf))) ++bad;
                // counterclockwise
                DiagramWord lit2 = word(2, d, lam, {}, {{AtomKind::CupEF, 0, 1}});
                if (r) lit2.slices.push_back({AtomKind::DotUp, 2, 1, 0, r});
                lit2.slices.push_back({AtomKind::CapEF, 1, 1});
                DiagramWord cf2 = word(2, d, lam, {}, {{AtomKind::Bubble, 0, 1, 0, r, false}});
                if (!maps_equal(eval_diagram(lit2), eval_diagram(cf2))) ++bad;
            }
            int lb = bar_entry(lam, 1);
            // degree-zero values: (-1)^{lambda_2} and (-1)^{lambda_2 - 1}
            {
                MPoly v = bubble_value(true, lb - 1, 1, lam, 2, d);
                if (!(v == (lam[1] % 2 == 0 ? MPoly(1) : MPoly(-1)))) ++bad;
                MPoly w = bubble_value(false, -lb - 1, 1, lam, 2, d);
                if (!(w == (lam[1] % 2 == 1 ? MPoly(1) : MPoly(-1)))) ++bad;
            }
            // sub-threshold bubbles vanish
            for (int r = 0; r < lb - 1; ++r)
                if (!bubble_value(true, r, 1, lam, 2, d).is_zero()) ++bad;
            for (int r = 0; r < -lb - 1; ++r)
                if (!bubble_value(false, r, 1, lam, 2, d).is_zero()) ++bad;
            // infinite Grassmannian through total degree 6
            for (int m = 0; m <= 6; ++m) {
                MPoly acc;
                for (int a = 0; a <= m; ++a)
                    acc += bubble_value(false, -lb - 1 + a, 1, lam, 2, d) *
                           bubble_value(true, lb - 1 + (m - a), 1, lam, 2, d);
                MPoly expect = m == 0 ? MPoly(-1) : MPoly();
                if (!(acc == expect)) ++bad;
            }
        }
    }
    return bad == 0;
}

bool c8_relation_suite(std::string& detail) {
    bool ok = true;
    size_t cases = 0;
    for (auto [n, d] : std::vector<std::pair<int, int>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}) {
        Report r = relation_suite(n, d);
        cases += r.cases.size();
        if (!r.all_ok()) {
            ok = false;
            detail += " " + r.summary();
        }
    }
    if (ok) detail = std::to_string(cases) + " relation instances, including eq:twistbub3";
    return ok;
}

bool c9_thick_bubbles(std::string& detail) {
    int bad = 0, checked = 0;
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; a + b <= 4; ++b) {
            if (a + b == 0) continue;
            int d = a + b;
            GlWeight lam{a, b};
            auto alph = region_alphabets(lam, d);
            SuperPair pair{alph[0], alph[1]};
            for (int m = 1; m <= 2; ++m) {
                for (int wgt = 0; wgt <= 3; ++wgt) {
                    for (auto& beta : partitions_of(wgt, m)) {
                        ++checked;
                        MPoly got = thick_bubble(true, m, beta, 1, lam, 2, d);
                        MPoly expect = super_schur(beta, pair);
                        if ((m * b) % 2 == 1) expect = -expect;
                        if (!(got == expect)) ++bad;
                        if (!in_gamma(beta, a, b) && !got.is_zero()) ++bad;
                        // eq:c-cc on its domain: alpha inside the m x m box,
                        // so both thickness-m determinants are defined
                        if (beta.empty() || beta[0] <= m) {
                            MPoly ccw =
                                thick_bubble(false, m, conjugate_partition(beta), 1, lam, 2, d);
                            if ((wgt + m) % 2 == 1) ccw = -ccw;
                            if (!(got == ccw)) ++bad;
                        }
                    }
                }
            }
            // LR multiplicativity: products of thick bubbles expand with the
            // Littlewood-Richardson coefficients computed independently,
            // after the (-1)^{mb} thickness normalization
            if (a >= 1 && b >= 1) {
                SuperPair big{make_alphabet("lrx", 3), make_alphabet("lry", 3)};
                for (auto& [al, be] : std::vector<std::pair<Partition, Partition>>{
                         {{1}, {1}}, {{2}, {1}}, {{1, 1}, {1}}}) {
                    ++checked;
                    int m1 = std::max<int>(1, (int)normalize_partition(al).size());
                    int m2 = std::max<int>(1, (int)normalize_partition(be).size());
                    MPoly lhs = thick_bubble(true, m1, al, 1, lam, 2, d) *
                                thick_bubble(true, m2, be, 1, lam, 2, d);
                    MPoly rhs;
                    for (auto& [ga, coef] : lr_expand(al, be, big)) {
                        int mg = std::max<int>(1, (int)ga.size());
                        MPoly t = rat(coef) * thick_bubble(true, mg, ga, 1, lam, 2, d);
                        if ((b * (m1 + m2 + mg)) % 2 == 1) t = -t;
                        rhs += t;
                    }
                    if (!(lhs == rhs)) ++bad;
                }
            }
        }
    }
    detail = std::to_string(checked) + " thick bubble instances";
    return bad == 0;
}

bool c10_divided_powers(std::string& detail) {
    bool ok = true;
    for (int d = 1; d <= 4; ++d) {
        Report r = divided_power_check(2, d);
        if (!r.all_ok()) {
            ok = false;
            detail += " " + r.summary();
        }
    }
    return ok;
}

bool c11_soergel(std::string& detail) {
    bool ok = true;
    {
        Report r = soergel_relation_suite(4, 4);
        r.merge(soergel_ek_oracle(4, 4));
        if (!r.all_ok()) {
            ok = false;
            detail += " " + r.summary();
        }
    }
    for (int d : {2, 3}) {
        Report r = soergel_relation_suite(4, d);
        r.merge(soergel_ek_oracle(4, d));
        if (!r.all_ok()) {
            ok = false;
            detail += " " + r.summary();
        }
    }
    return ok;
}

bool c12_supersym(std::string& detail) {
    int bad = 0;
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            SuperPair p{make_alphabet("ax", a), make_alphabet("ay", b)};
            // (1) vanishing outside Gamma(a,b); (4) conjugate duality
            for (int w = 0; w <= 4; ++w) {
                for (auto& al : partitions_of(w)) {
                    if (super_schur(al, p).is_zero() != !in_gamma(al, a, b)) ++bad;
                    if (!conjugate_duality_check(al, p)) ++bad;
                }
            }
        }
    }
    // (5) specializations
    for (int w = 1; w <= 4; ++w) {
        for (auto& al : partitions_of(w)) {
            SuperPair px{make_alphabet("ax", 3), {}};
            if (!(super_schur(al, px) == schur_poly(al, px.X))) ++bad;
            SuperPair py{{}, make_alphabet("ay", 3)};
            MPoly rhs = schur_poly(conjugate_partition(al), py.Y);
            if (w % 2 == 1) rhs = -rhs;
            if (!(super_schur(al, py) == rhs)) ++bad;
        }
    }
    // (2) linear independence in degree <= 4 via unique expansions
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int w = 1; w <= 4; ++w) {
                SuperPair p{make_alphabet("bx", a), make_alphabet("by", b)};
                for (auto& al : partitions_of(w)) {
                    if (!in_gamma(al, a, b)) continue;
                    auto c = lr_expand(al, {}, p);  // throws if dependent
                    if (c.size() != 1 || c.begin()->second != 1) ++bad;
                }
            }
    // (3) LR coefficients match the tableau oracle for |alpha|+|beta| <= 5
    SuperPair big{make_alphabet("cx", 3), make_alphabet("cy", 3)};
    for (int wa = 1; wa <= 4; ++wa)
        for (int wb = 1; wa + wb <= 5; ++wb)
            for (auto& al : partitions_of(wa))
                for (auto& be : partitions_of(wb)) {
                    if (!in_gamma(al, 3, 3) || !in_gamma(be, 3, 3)) continue;
                    auto got = lr_expand(al, be, big);
                    for (auto& ga : partitions_of(wa + wb)) {
                        if (!in_gamma(ga, 3, 3)) continue;
                        long expect = lr_tableau(al, be, ga);
                        long actual = got.count(ga) ? got[ga] : 0;
                        if (expect != actual) ++bad;
                    }
                }
    return bad == 0;
}

} // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    auto want = [&](int k) { return only == 0 || only == k; };
    if (want(1)) criterion(1, "dimension formula, two independent routes", c1_dimensions);
    if (want(2)) criterion(2, "Serre-style presentation suite", c2_presentation);
    if (want(3)) criterion(3, "Hecke relations, Schur-Weyl commutation, sigma", c3_hecke);
    if (want(4)) criterion(4, "anti-involution tau bookkeeping", c4_tau);
    if (want(5)) criterion(5, "generator degree coherence of the 2-representation",
                           c5_degree_coherence);
    if (want(6)) criterion(6, "zigzag identities", c6_zigzag);
    if (want(7)) criterion(7, "bubble closed forms and infinite Grassmannian", c7_bubbles);
    if (want(8)) criterion(8, "full diagrammatic relation suite", c8_relation_suite);
    if (want(9)) criterion(9, "thick bubbles as supersymmetric Schur polynomials",
                           c9_thick_bubbles);
    if (want(10)) criterion(10, "divided power idempotents", c10_divided_powers);
    if (want(11)) criterion(11, "Soergel category relations and EK oracle", c11_soergel);
    if (want(12)) criterion(12, "supersymmetric polynomial suite", c12_supersym);
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
