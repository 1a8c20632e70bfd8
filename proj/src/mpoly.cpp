#include "schurcat/mpoly.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace schurcat {

namespace {
std::mutex var_mu;
std::vector<std::string> var_names;
std::unordered_map<std::string, Var> var_ids;
std::atomic<long> fresh_counter{0};
} // namespace

Var intern_var(const std::string& name) {
    std::lock_guard<std::mutex> lk(var_mu);
    auto it = var_ids.find(name);
    if (it != var_ids.end()) return it->second;
    Var id = (Var)var_names.size();
    var_names.push_back(name);
    var_ids[name] = id;
    return id;
}

std::string var_name(Var v) {
    std::lock_guard<std::mutex> lk(var_mu);
    return var_names[v];
}

Var fresh_var(const std::string& prefix) {
    long k = fresh_counter.fetch_add(1);
    return intern_var(prefix + "#" + std::to_string(k));
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < exps.size() && j < o.exps.size()) {
        if (exps[i].first < o.exps[j].first) r.exps.push_back(exps[i++]);
        else if (exps[i].first > o.exps[j].first) r.exps.push_back(o.exps[j++]);
        else {
            r.exps.push_back({exps[i].first, exps[i].second + o.exps[j].second});
            ++i; ++j;
        }
    }
    while (i < exps.size()) r.exps.push_back(exps[i++]);
    while (j < o.exps.size()) r.exps.push_back(o.exps[j++]);
    return r;
}

std::string Monomial::str() const {
    if (exps.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : exps) {
        if (!first) os << "*";
        first = false;
        os << var_name(v);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (schurcat::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (schurcat::is_zero(it->second)) terms_.erase(it);
    }
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.deg();
    for (auto& [m, c] : terms_)
        if (m.deg() != d) return false;
    return true;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator-(const MPoly& a) {
    MPoly r;
    for (auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_)
            r.add_term(ma.mul(mb), ca * cb);
    return r;
}

MPoly operator*(const Rat& c, const MPoly& a) {
    MPoly r;
    if (is_zero(c)) return r;
    for (auto& [m, cc] : a.terms()) r.add_term(m, c * cc);
    return r;
}

MPoly MPoly::swapped(Var x, Var y) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
        Monomial mm;
        for (auto [v, e] : m.exps) {
            Var w = v == x ? y : (v == y ? x : v);
            mm.exps.push_back({w, e});
        }
        std::sort(mm.exps.begin(), mm.exps.end());
        // merge equal vars (possible if x,y both present)
        Monomial merged;
        for (auto& [v, e] : mm.exps) {
            if (!merged.exps.empty() && merged.exps.back().first == v)
                merged.exps.back().second += e;
            else
                merged.exps.push_back({v, e});
        }
        r.add_term(merged, c);
    }
    return r;
}

MPoly MPoly::subst(Var x, const MPoly& value) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
        Monomial rest;
        int e = 0;
        for (auto& [v, ee] : m.exps) {
            if (v == x) e = ee;
            else rest.exps.push_back({v, ee});
        }
        MPoly t;
        t.add_term(rest, c);
        for (int j = 0; j < e; ++j) t *= value;
        r += t;
    }
    return r;
}

MPoly MPoly::subst_rat(Var x, const Rat& value) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
        Monomial rest;
        Rat cc = c;
        for (auto& [v, ee] : m.exps) {
            if (v == x) {
                for (int j = 0; j < ee; ++j) cc *= value;
            } else rest.exps.push_back({v, ee});
        }
        r.add_term(rest, cc);
    }
    return r;
}

MPoly MPoly::coeff_of(Var x, int k) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
        Monomial rest;
        int e = 0;
        for (auto& [v, ee] : m.exps) {
            if (v == x) e = ee;
            else rest.exps.push_back({v, ee});
        }
        if (e == k) r.add_term(rest, c);
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        } else if (sgn(c) < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        if (it->first.exps.empty()) os << c.get_str();
        else {
            if (c != 1) os << c.get_str() << "*";
            os << it->first.str();
        }
    }
    return os.str();
}

Alphabet make_alphabet(const std::string& prefix, int size) {
    Alphabet a;
    for (int j = 1; j <= size; ++j) a.push_back(intern_var(prefix + std::to_string(j)));
    return a;
}

MPoly elem_sym(int k, const Alphabet& a) {
    if (k < 0 || k > (int)a.size()) return MPoly();
    if (k == 0) return MPoly(1);
    // dynamic programming over the alphabet
    std::vector<MPoly> e(k + 1);
    e[0] = MPoly(1);
    for (Var v : a) {
        for (int j = k; j >= 1; --j)
            e[j] += MPoly::var(v) * e[j - 1];
    }
    return e[k];
}

MPoly complete_sym(int k, const Alphabet& a) {
    if (k < 0) return MPoly();
    if (k == 0) return MPoly(1);
    if (a.empty()) return MPoly();
    // h_k(a) via recursion on the alphabet
    std::vector<MPoly> h(k + 1);
    h[0] = MPoly(1);
    for (int j = 1; j <= k; ++j) h[j] = MPoly();
    for (Var v : a) {
        for (int j = 1; j <= k; ++j) h[j] += MPoly::var(v) * h[j - 1];
    }
    return h[k];
}

MPoly schur_poly(const std::vector<int>& partition, const Alphabet& a) {
    int m = (int)partition.size();
    if (m == 0) return MPoly(1);
    // det(h_{l_i + j - i}) for 1 <= i,j <= m, Laplace expansion
    std::vector<std::vector<MPoly>> mat(m, std::vector<MPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mat[i][j] = complete_sym(partition[i] + j - i, a);
    std::function<MPoly(std::vector<int>&, int)> det = [&](std::vector<int>& rows, int col) -> MPoly {
        if (col == m) return MPoly(1);
        MPoly acc;
        for (size_t r = 0; r < rows.size(); ++r) {
            int row = rows[r];
            if (mat[row][col].is_zero()) continue;
            std::vector<int> rest;
            for (size_t s = 0; s < rows.size(); ++s)
                if (s != r) rest.push_back(rows[s]);
            MPoly sub = det(rest, col + 1);
            MPoly term = mat[row][col] * sub;
            if (r % 2 == 1) term = -term;
            acc += term;
        }
        return acc;
    };
    std::vector<int> rows(m);
    for (int i = 0; i < m; ++i) rows[i] = i;
    return det(rows, 0);
}

MPoly divide_by_linear_diff(const MPoly& p, Var x, Var y) {
    // Synthetic division along the x-degree: p = q*(x-y) + r with r free
    // of x only after substituting x -> y; we demand exact division.
    MPoly rem = p;
    MPoly quot;
    int dx = rem.degree_in(x);
    while (dx > 0) {
        MPoly lead = rem.coeff_of(x, dx);       // in remaining vars
        MPoly t = lead * MPoly::var(x, dx - 1); // lead * x^{dx-1}
        quot += t;
        rem -= t * (MPoly::var(x) - MPoly::var(y));
        int ndx = rem.degree_in(x);
        if (ndx >= dx) throw std::logic_error("divide_by_linear_diff: no progress");
        dx = ndx;
    }
    if (!rem.is_zero()) throw std::logic_error("divide_by_linear_diff: nonzero remainder");
    return quot;
}

MPoly divided_diff(const MPoly& p, Var x, Var y) {
    MPoly num = p - p.swapped(x, y);
    return divide_by_linear_diff(num, x, y);
}

Report polysym_identity_oracles(int max_size) {
    Report rep;
    rep.suite = "polysym-identities";
    // use1: d_{y x}(y^N) = h_{N-k}(y, x)
    Var y = intern_var("y");
    for (int k = 1; k <= max_size; ++k) {
        Alphabet a = make_alphabet("io_a", k);
        for (int N = 0; N <= max_size + 1; ++N) {
            Alphabet full{y};
            for (Var v : a) full.push_back(v);
            bool ok = divided_diff_chain(MPoly::var(y, N), a, y, ChainOrder::VarFirst) ==
                      complete_sym(N - k, full);
            rep.add("use1/k" + std::to_string(k) + "/N" + std::to_string(N), "use1", "", ok);
        }
    }
    // use2: sum (-1)^j e_j h_{k-j} = delta_{k,0}
    for (int sz = 0; sz <= max_size; ++sz) {
        Alphabet a = make_alphabet("io_b", sz);
        for (int k = 0; k <= max_size; ++k) {
            MPoly acc;
            for (int j = 0; j <= k; ++j) {
                MPoly t = elem_sym(j, a) * complete_sym(k - j, a);
                if (j % 2 == 1) t = -t;
                acc += t;
            }
            bool ok = acc == (k == 0 ? MPoly(1) : MPoly());
            rep.add("use2/sz" + std::to_string(sz) + "/k" + std::to_string(k), "use2", "", ok);
        }
    }
    // use3 and use4 with t = {x} + u
    for (int sz = 0; sz < max_size; ++sz) {
        Alphabet t = make_alphabet("io_t", sz + 1);
        Var x = t[0];
        Alphabet u(t.begin() + 1, t.end());
        for (int l = 0; l <= sz + 1; ++l) {
            MPoly rhs;
            for (int j = 0; j <= l; ++j) {
                MPoly term = MPoly::var(x, j) * elem_sym(l - j, t);
                if (j % 2 == 1) term = -term;
                rhs += term;
            }
            rep.add("use3/sz" + std::to_string(sz) + "/l" + std::to_string(l), "use3", "",
                    elem_sym(l, u) == rhs);
            rep.add("use4/sz" + std::to_string(sz) + "/l" + std::to_string(l), "use4", "",
                    elem_sym(l, t) == elem_sym(l, u) + MPoly::var(x) * elem_sym(l - 1, u));
        }
    }
    rep.sort();
    return rep;
}

MPoly divided_diff_chain(const MPoly& p, const Alphabet& a, Var y, ChainOrder ord) {
    MPoly cur = p;
    if (ord == ChainOrder::AlphabetFirst) {
        // d_{x_1 y} d_{x_2 y} ... d_{x_a y}: rightmost factor acts first
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            cur = divided_diff(cur, *it, y);
    } else {
        // d_{y x_1} d_{y x_2} ... d_{y x_a}
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            cur = divided_diff(cur, y, *it);
    }
    return cur;
}

} // namespace schurcat
