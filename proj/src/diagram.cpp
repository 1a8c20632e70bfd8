#include "schurcat/diagram.hpp"

#include <sstream>
#include <stdexcept>

namespace schurcat {

int Atom::bottom_arity() const {
    switch (kind) {
        case AtomKind::DotUp:
        case AtomKind::DotDown: return 1;
        case AtomKind::CrossUU:
        case AtomKind::CrossDD:
        case AtomKind::CrossLR:
        case AtomKind::CrossRL:
        case AtomKind::CapEF:
        case AtomKind::CapFE: return 2;
        case AtomKind::CupEF:
        case AtomKind::CupFE:
        case AtomKind::Bubble: return 0;
    }
    return 0;
}

int Atom::top_arity() const {
    switch (kind) {
        case AtomKind::DotUp:
        case AtomKind::DotDown: return 1;
        case AtomKind::CrossUU:
        case AtomKind::CrossDD:
        case AtomKind::CrossLR:
        case AtomKind::CrossRL: return 2;
        case AtomKind::CupEF:
        case AtomKind::CupFE: return 2;
        case AtomKind::CapEF:
        case AtomKind::CapFE:
        case AtomKind::Bubble: return 0;
    }
    return 0;
}

SignedSeq Atom::bottom_letters() const {
    switch (kind) {
        case AtomKind::DotUp: return {{+1, i}};
        case AtomKind::DotDown: return {{-1, i}};
        case AtomKind::CrossUU: return {{+1, i}, {+1, j}};
        case AtomKind::CrossDD: return {{-1, i}, {-1, j}};
        case AtomKind::CrossLR: return {{+1, i}, {-1, j}};
        case AtomKind::CrossRL: return {{-1, i}, {+1, j}};
        case AtomKind::CapEF: return {{-1, i}, {+1, i}};
        case AtomKind::CapFE: return {{+1, i}, {-1, i}};
        default: return {};
    }
}

SignedSeq Atom::top_letters() const {
    switch (kind) {
        case AtomKind::DotUp: return {{+1, i}};
        case AtomKind::DotDown: return {{-1, i}};
        case AtomKind::CrossUU: return {{+1, j}, {+1, i}};
        case AtomKind::CrossDD: return {{-1, j}, {-1, i}};
        case AtomKind::CrossLR: return {{-1, j}, {+1, i}};
        case AtomKind::CrossRL: return {{+1, j}, {-1, i}};
        case AtomKind::CupEF: return {{-1, i}, {+1, i}};
        case AtomKind::CupFE: return {{+1, i}, {-1, i}};
        default: return {};
    }
}

std::vector<SignedSeq> DiagramWord::boundaries() const {
    std::vector<SignedSeq> out;
    SignedSeq cur = source.seq;
    out.push_back(cur);
    for (const Atom& a : slices) {
        int m = (int)cur.size();
        int ba = a.bottom_arity();
        int p = a.pos;
        if (ba == 0) {
            if (p < 0 || p > m) throw std::invalid_argument("atom gap out of range");
        } else {
            if (p < 1 || p + ba - 1 > m) throw std::invalid_argument("atom position out of range");
            SignedSeq expect = a.bottom_letters();
            for (int t = 0; t < ba; ++t)
                if (!(cur[p - 1 + t] == expect[t]))
                    throw std::invalid_argument("atom does not match boundary at slice");
        }
        SignedSeq next;
        int consumed_from = (ba == 0) ? p : p - 1;
        for (int t = 0; t < consumed_from; ++t) next.push_back(cur[t]);
        for (auto& L : a.top_letters()) next.push_back(L);
        for (int t = consumed_from + ba; t < m; ++t) next.push_back(cur[t]);
        cur = std::move(next);
        out.push_back(cur);
    }
    return out;
}

OneMorphism DiagramWord::target() const {
    OneMorphism t;
    t.seq = boundaries().back();
    t.lambda = source.lambda;
    t.shift = source.shift - degree();
    return t;
}

int atom_degree(const Atom& a, const GlWeight& mu) {
    switch (a.kind) {
        case AtomKind::DotUp:
        case AtomKind::DotDown: return 2 * a.dots;
        case AtomKind::CrossUU:
        case AtomKind::CrossDD: return -cartan(a.i, a.j);
        case AtomKind::CrossLR:
        case AtomKind::CrossRL: return 0;
        case AtomKind::CupEF:
        case AtomKind::CapEF: return 1 + bar_entry(mu, a.i);
        case AtomKind::CupFE:
        case AtomKind::CapFE: return 1 - bar_entry(mu, a.i);
        case AtomKind::Bubble: {
            int lb = bar_entry(mu, a.i);
            // cw bubble with r dots has degree 2(r - (lb - 1)); ccw with
            // r dots has degree 2(r + lb + 1)
            return a.cw ? 2 * (a.dots - lb + 1) : 2 * (a.dots + lb + 1);
        }
    }
    return 0;
}

namespace {
GlWeight region_right_of(const SignedSeq& seq, const GlWeight& lambda, int gap) {
    // weight of the region between strands gap and gap+1 (gap = m: lambda)
    GlWeight w = lambda;
    for (int g = (int)seq.size() - 1; g >= gap; --g) w = apply_letter(w, seq[g]);
    return w;
}
} // namespace

int DiagramWord::degree() const {
    auto bds = boundaries();
    int total = 0;
    for (size_t s = 0; s < slices.size(); ++s) {
        const Atom& a = slices[s];
        int gap = a.bottom_arity() == 0 ? a.pos : a.pos - 1 + a.bottom_arity();
        GlWeight mu = region_right_of(bds[s], source.lambda, gap);
        total += atom_degree(a, mu);
    }
    return total;
}

std::vector<GlWeight> DiagramWord::all_regions() const {
    auto bds = boundaries();
    std::vector<GlWeight> out;
    for (auto& b : bds) {
        GlWeight w = source.lambda;
        out.push_back(w);
        for (int g = (int)b.size() - 1; g >= 0; --g) {
            w = apply_letter(w, b[g]);
            out.push_back(w);
        }
    }
    return out;
}

bool DiagramWord::is_zero_by_label() const {
    bool has_sideways = false;
    for (auto& a : slices)
        if (a.kind == AtomKind::CrossLR || a.kind == AtomKind::CrossRL) has_sideways = true;
    const DiagramWord& w = has_sideways ? expand_sideways(*this) : *this;
    for (auto& r : w.all_regions())
        if (!in_lambda(r, n, d)) return true;
    // real dotted bubbles of negative degree vanish
    auto bds = w.boundaries();
    for (size_t s = 0; s < w.slices.size(); ++s) {
        const Atom& a = w.slices[s];
        if (a.kind != AtomKind::Bubble || a.dots < 0) continue;
        GlWeight mu = region_right_of(bds[s], w.source.lambda, a.pos);
        if (atom_degree(a, mu) < 0) return true;
    }
    return false;
}

DiagramWord expand_sideways(const DiagramWord& w) {
    DiagramWord r = w;
    r.slices.clear();
    SignedSeq cur = w.source.seq;
    for (const Atom& a : w.slices) {
        if (a.kind == AtomKind::CrossLR || a.kind == AtomKind::CrossRL) {
            int k = a.pos;
            int ca = cur[k - 1].color, cb = cur[k].color;
            if (a.kind == AtomKind::CrossLR) {
                r.slices.push_back({AtomKind::CupEF, k - 1, cb});
                r.slices.push_back({AtomKind::CrossUU, k + 1, cb, ca});
                r.slices.push_back({AtomKind::CapFE, k + 2, cb});
            } else {
                r.slices.push_back({AtomKind::CupFE, k + 1, ca});
                r.slices.push_back({AtomKind::CrossUU, k + 1, cb, ca});
                r.slices.push_back({AtomKind::CapEF, k, ca});
            }
            std::swap(cur[k - 1], cur[k]);
            continue;
        }
        r.slices.push_back(a);
        // update the boundary through this atom
        int ba = a.bottom_arity();
        int from = ba == 0 ? a.pos : a.pos - 1;
        SignedSeq next(cur.begin(), cur.begin() + from);
        for (auto& L : a.top_letters()) next.push_back(L);
        for (size_t t = from + ba; t < cur.size(); ++t) next.push_back(cur[t]);
        cur = std::move(next);
    }
    return r;
}

DiagramWord DiagramWord::rotated180() const {
    DiagramWord r;
    r.n = n;
    r.d = d;
    r.coeff = coeff;
    auto bds = boundaries();
    const SignedSeq& top = bds.back();
    // new source = 180-degree rotation of the old target
    OneMorphism src;
    src.lambda = source.target();  // leftmost region becomes rightmost
    src.shift = target().shift;
    for (auto it = top.rbegin(); it != top.rend(); ++it)
        src.seq.push_back({-it->sign, it->color});
    r.source = src;
    for (size_t s = slices.size(); s-- > 0;) {
        const Atom& a = slices[s];
        int m_above = (int)bds[s + 1].size();  // boundary above the slice = below it after rotation
        Atom b = a;
        switch (a.kind) {
            case AtomKind::DotUp: b.kind = AtomKind::DotDown; b.pos = m_above + 1 - a.pos; break;
            case AtomKind::DotDown: b.kind = AtomKind::DotUp; b.pos = m_above + 1 - a.pos; break;
            case AtomKind::CrossUU:
                b.kind = AtomKind::CrossDD;
                b.pos = m_above - a.pos;
                break;
            case AtomKind::CrossDD:
                b.kind = AtomKind::CrossUU;
                b.pos = m_above - a.pos;
                break;
            case AtomKind::CrossLR:
                b.kind = AtomKind::CrossRL;
                b.pos = m_above - a.pos;
                break;
            case AtomKind::CrossRL:
                b.kind = AtomKind::CrossLR;
                b.pos = m_above - a.pos;
                break;
            case AtomKind::CupEF: b.kind = AtomKind::CapEF; b.pos = m_above - 1 - a.pos; break;
            case AtomKind::CupFE: b.kind = AtomKind::CapFE; b.pos = m_above - 1 - a.pos; break;
            case AtomKind::CapEF: b.kind = AtomKind::CupEF; b.pos = (int)bds[s].size() - 1 - a.pos; break;
            case AtomKind::CapFE: b.kind = AtomKind::CupFE; b.pos = (int)bds[s].size() - 1 - a.pos; break;
            case AtomKind::Bubble: b.pos = m_above - a.pos; break;
        }
        r.slices.push_back(b);
    }
    return r;
}

int DiagramWord::sl_sign() const {
    auto bds = boundaries();
    int sign = 1;
    for (size_t s = 0; s < slices.size(); ++s) {
        const Atom& a = slices[s];
        if (a.kind != AtomKind::CupFE && a.kind != AtomKind::CapEF) continue;
        int gap = a.bottom_arity() == 0 ? a.pos : a.pos + 1;
        GlWeight mu = region_right_of(bds[s], source.lambda, gap);
        int e = mu[a.i];  // lambda_{i+1}
        if (a.kind == AtomKind::CupFE) e += 1;
        if (e % 2 != 0) sign = -sign;
    }
    return sign;
}

DiagramWord compose_v(const DiagramWord& bottom, const DiagramWord& top) {
    if (!(bottom.target().seq == top.source.seq) || bottom.source.lambda != top.source.lambda)
        throw std::invalid_argument("compose_v: boundary mismatch");
    DiagramWord r = bottom;
    for (auto& a : top.slices) r.slices.push_back(a);
    r.coeff = bottom.coeff * top.coeff;
    return r;
}

DiagramWord compose_h(const DiagramWord& left, const DiagramWord& right) {
    // left (x) right = (left (x) id_target) after (id_source (x) right):
    // run the right word first, then the left one shifted past the right
    // target.
    if (left.n != right.n || left.d != right.d)
        throw std::invalid_argument("compose_h: ambient mismatch");
    if (!(left.source.lambda == right.source.target()))
        throw std::invalid_argument("compose_h: object mismatch");
    DiagramWord r;
    r.n = left.n;
    r.d = left.d;
    r.coeff = left.coeff * right.coeff;
    r.source.lambda = right.source.lambda;
    r.source.shift = left.source.shift + right.source.shift;
    r.source.seq = left.source.seq;
    for (auto& L : right.source.seq) r.source.seq.push_back(L);
    int off = (int)left.source.seq.size();
    for (auto& a : right.slices) {
        Atom b = a;
        b.pos += off;
        r.slices.push_back(b);
    }
    for (auto& a : left.slices) r.slices.push_back(a);
    return r;
}

DiagramWord identity_word(int n, int d, const OneMorphism& x) {
    DiagramWord w;
    w.n = n;
    w.d = d;
    w.source = x;
    return w;
}

DiagramWord divided_power_idempotent(int n, int d, int color, int sign, int m,
                                     const GlWeight& lambda) {
    DiagramWord w;
    w.n = n;
    w.d = d;
    w.source.lambda = lambda;
    for (int t = 0; t < m; ++t) w.source.seq.push_back({sign, color});
    // longest-word crossings: bubble passes
    for (int pass = 1; pass <= m - 1; ++pass) {
        for (int p = 1; p <= m - pass; ++p) {
            Atom a;
            a.kind = sign > 0 ? AtomKind::CrossUU : AtomKind::CrossDD;
            a.pos = p;
            a.i = color;
            a.j = color;
            w.slices.push_back(a);
        }
    }
    // staircase dots on top: position p carries m-p dots
    for (int p = 1; p <= m - 1; ++p) {
        Atom a;
        a.kind = sign > 0 ? AtomKind::DotUp : AtomKind::DotDown;
        a.pos = p;
        a.i = color;
        a.dots = m - p;
        w.slices.push_back(a);
    }
    if (sign < 0 && ((m * (m - 1) / 2) % 2 == 1)) w.coeff = -w.coeff;
    return w;
}

DiagramWord pi_functor(const DiagramWord& w, int dprime, int d) {
    int n = w.n;
    if (w.d != dprime || (dprime - d) % n != 0 || dprime < d)
        throw std::invalid_argument("pi_functor: need d' = d + n k");
    int k = (dprime - d) / n;
    DiagramWord r = w;
    r.d = d;
    for (auto& e : r.source.lambda) e -= k;
    if (k % 2 == 1) {
        // (-1)^k per left cup (CupFE) and left cap (CapEF)
        int count = 0;
        for (auto& a : w.slices)
            if (a.kind == AtomKind::CupFE || a.kind == AtomKind::CapEF) ++count;
        if (count % 2 == 1) r.coeff = -r.coeff;
    }
    return r;
}

DiagramWord iota_functor(const DiagramWord& w, int m) {
    if (m < w.n) throw std::invalid_argument("iota_functor: need m >= n");
    DiagramWord r = w;
    r.n = m;
    r.source.lambda.resize(m, 0);
    return r;
}

// ---------------------------------------------------------------------------
// text format: header line, then one slice per line with identity fillers

namespace {
std::string atom_token(const Atom& a) {
    std::ostringstream os;
    switch (a.kind) {
        case AtomKind::DotUp: os << "dotU(" << a.i << "," << a.dots << ")"; break;
        case AtomKind::DotDown: os << "dotD(" << a.i << "," << a.dots << ")"; break;
        case AtomKind::CrossUU: os << "xUU(" << a.i << "," << a.j << ")"; break;
        case AtomKind::CrossDD: os << "xDD(" << a.i << "," << a.j << ")"; break;
        case AtomKind::CrossLR: os << "xLR(" << a.i << "," << a.j << ")"; break;
        case AtomKind::CrossRL: os << "xRL(" << a.i << "," << a.j << ")"; break;
        case AtomKind::CupEF: os << "cupEF(" << a.i << ")"; break;
        case AtomKind::CupFE: os << "cupFE(" << a.i << ")"; break;
        case AtomKind::CapEF: os << "capEF(" << a.i << ")"; break;
        case AtomKind::CapFE: os << "capFE(" << a.i << ")"; break;
        case AtomKind::Bubble:
            os << "bubble(" << (a.cw ? "cw" : "ccw") << "," << a.i << "," << a.dots << ")";
            break;
    }
    return os.str();
}
} // namespace

std::string DiagramWord::text() const {
    std::ostringstream os;
    os << "n=" << n << ", d=" << d << ", lambda=(";
    for (size_t t = 0; t < source.lambda.size(); ++t) {
        if (t) os << ",";
        os << source.lambda[t];
    }
    os << "), shift=" << source.shift;
    if (coeff != 1) os << ", coeff=" << coeff.get_str();
    os << "\nsource:";
    for (auto& L : source.seq) os << " " << (L.sign > 0 ? "U(" : "D(") << L.color << ")";
    os << "\n";
    auto bds = boundaries();
    for (size_t s = 0; s < slices.size(); ++s) {
        const Atom& a = slices[s];
        const SignedSeq& below = bds[s];
        int from = a.bottom_arity() == 0 ? a.pos : a.pos - 1;
        for (int t = 0; t < from; ++t)
            os << (below[t].sign > 0 ? "U(" : "D(") << below[t].color << ") ";
        os << atom_token(a);
        for (int t = from + a.bottom_arity(); t < (int)below.size(); ++t)
            os << " " << (below[t].sign > 0 ? "U(" : "D(") << below[t].color << ")";
        os << "\n";
    }
    return os.str();
}

DiagramWord DiagramWord::parse(const std::string& text) {
    DiagramWord w;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty diagram text");
    // header
    {
        auto grab = [&](const std::string& key) -> std::string {
            auto p = line.find(key + "=");
            if (p == std::string::npos) throw std::invalid_argument("missing header field " + key);
            p += key.size() + 1;
            auto e = p;
            int depth = 0;
            while (e < line.size() && (depth > 0 || (line[e] != ',' && line[e] != ' '))) {
                if (line[e] == '(') depth++;
                if (line[e] == ')') depth--;
                ++e;
            }
            return line.substr(p, e - p);
        };
        w.n = std::stoi(grab("n"));
        w.d = std::stoi(grab("d"));
        std::string lam = grab("lambda");
        if (lam.size() < 2 || lam.front() != '(' || lam.back() != ')')
            throw std::invalid_argument("bad lambda");
        std::istringstream ls(lam.substr(1, lam.size() - 2));
        std::string item;
        while (std::getline(ls, item, ',')) w.source.lambda.push_back(std::stoi(item));
        w.source.shift = std::stoi(grab("shift"));
        if (line.find("coeff=") != std::string::npos) w.coeff = Rat(grab("coeff"));
    }
    auto parse_args = [](const std::string& tok, size_t open) {
        std::vector<std::string> args;
        std::string inner = tok.substr(open + 1, tok.size() - open - 2);
        std::istringstream as(inner);
        std::string item;
        while (std::getline(as, item, ',')) args.push_back(item);
        return args;
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "source:") {
            while (ls >> tok) {
                auto open = tok.find('(');
                auto args = parse_args(tok, open);
                std::string head = tok.substr(0, open);
                w.source.seq.push_back({head == "U" ? +1 : -1, std::stoi(args[0])});
            }
            continue;
        }
        // slice line: find the single non-identity atom
        std::vector<std::string> toks{tok};
        while (ls >> tok) toks.push_back(tok);
        int strand_pos = 0;
        bool found = false;
        for (auto& t : toks) {
            auto open = t.find('(');
            std::string head = t.substr(0, open);
            auto args = parse_args(t, open);
            if (head == "U" || head == "D") {
                strand_pos++;
                continue;
            }
            if (found) throw std::invalid_argument("multiple events per slice line unsupported");
            found = true;
            Atom a;
            if (head == "dotU" || head == "dotD") {
                a.kind = head == "dotU" ? AtomKind::DotUp : AtomKind::DotDown;
                a.i = std::stoi(args[0]);
                a.dots = args.size() > 1 ? std::stoi(args[1]) : 1;
                a.pos = strand_pos + 1;
                strand_pos += 1;
            } else if (head == "xUU" || head == "xDD" || head == "xLR" || head == "xRL") {
                a.kind = head == "xUU" ? AtomKind::CrossUU
                       : head == "xDD" ? AtomKind::CrossDD
                       : head == "xLR" ? AtomKind::CrossLR : AtomKind::CrossRL;
                a.i = std::stoi(args[0]);
                a.j = std::stoi(args[1]);
                a.pos = strand_pos + 1;
                strand_pos += 2;
            } else if (head == "cupEF" || head == "cupFE") {
                a.kind = head == "cupEF" ? AtomKind::CupEF : AtomKind::CupFE;
                a.i = std::stoi(args[0]);
                a.pos = strand_pos;
                strand_pos += 2;
            } else if (head == "capEF" || head == "capFE") {
                a.kind = head == "capEF" ? AtomKind::CapEF : AtomKind::CapFE;
                a.i = std::stoi(args[0]);
                a.pos = strand_pos + 1;
                strand_pos += 2;
            } else if (head == "bubble") {
                a.kind = AtomKind::Bubble;
                a.cw = args[0] == "cw";
                a.i = std::stoi(args[1]);
                a.dots = std::stoi(args[2]);
                a.pos = strand_pos;
            } else {
                throw std::invalid_argument("unknown atom " + head);
            }
            w.slices.push_back(a);
        }
    }
    return w;
}

} // namespace schurcat
